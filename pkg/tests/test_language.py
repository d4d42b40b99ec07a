"""Tests for the input language: parsing, formatting and execution."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

try:
    from finalg.errors import InputError
    from finalg.language import execute, format_document, parse_document, render_json
    from finalg.language.document import (
        ClassifyQuery,
        CyclicExpr,
        ModuleDecl,
        QueryKind,
        RingDecl,
        SearchQuery,
        SetDecl,
        SubDecl,
        SuiteQuery,
        ZmodExpr,
    )
    from finalg.language.parser import tokenize
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.errors import InputError
    from finalg.language import execute, format_document, parse_document, render_json
    from finalg.language.document import (
        ClassifyQuery,
        CyclicExpr,
        ModuleDecl,
        QueryKind,
        RingDecl,
        SearchQuery,
        SetDecl,
        SubDecl,
        SuiteQuery,
        ZmodExpr,
    )
    from finalg.language.parser import tokenize

Z4_EXAMPLE = """\
# (0) in Z/4 over itself with S = {1, 3}
ring R = zmod 4
module M   = zmod 4 over R

set S in R = {1,3}   # units
sub P of M = {0}
query classify P S
"""

Z4_CANONICAL = """\
ring R = zmod 4
module M = zmod 4 over R
set S in R = {1, 3}
sub P of M = {0}
query classify P S
"""


def test_tokenize_reports_columns() -> None:
    """Columns are one-based and comments are dropped."""
    tokens = tokenize('set S in R = {1, 3} # note', 7)
    assert [(t.kind, t.text, t.column) for t in tokens[:3]] == [
        ('name', 'set', 1),
        ('name', 'S', 5),
        ('name', 'in', 7),
    ]
    assert tokens[-1].kind == 'end'
    assert all(t.line == 7 for t in tokens)


def test_parse_z4_example() -> None:
    """The worked example yields five statements in order."""
    document = parse_document(Z4_EXAMPLE)
    assert document.statements == (
        RingDecl('R', ZmodExpr(4)),
        ModuleDecl('M', CyclicExpr(4, 'R')),
        SetDecl('S', 'R', (1, 3)),
        SubDecl('P', 'M', (0,)),
        ClassifyQuery(QueryKind.CLASSIFY, 'P', 'S'),
    )
    assert document.statements[2].location.line == 5
    assert len(document.declarations) == 4
    assert len(document.queries) == 1


def test_format_is_canonical_and_stable() -> None:
    """Formatting drops comments and blank lines, and reformatting changes nothing."""
    document = parse_document(Z4_EXAMPLE)
    text = format_document(document)
    assert text == Z4_CANONICAL
    assert parse_document(text) == document
    assert format_document(parse_document(text)) == text


def test_format_covers_every_construction() -> None:
    """Products, quotients, idealizations, generated subs and option flags print back."""
    source = """\
ring A = zmod 2
ring B = zmod 4
ring P = product(A, B)
module RB = regular B
sub I of RB = gen {2}
ring Q = quotient(B, I)
module C = zmod 2 over B
ring T = idealization(B, C)
module N = quotient(RB, I)
module MP = product(RB, C)
set U in P = {(1, 1), (1, 3)}
query s_prime I U
query suite ring-axioms maxring=4 maxmod=3
query search s-primary-not-s-prime maxring=6 skiptrivial
"""
    assert format_document(parse_document(source)) == source


def test_execute_z4_example() -> None:
    """(0) is S-primary with witness 1 but not S-prime."""
    report = execute(parse_document(Z4_EXAMPLE))
    assert report.exit_code == 0
    (record,) = report.records
    assert record == {
        'kind': 'classify',
        'instance': {
            'module': {'cyclic': {'d': 4, 'ring': {'zmod': 4}}},
            'sub': [0],
            'set': [1, 3],
        },
        'applicable': True,
        'prime': False,
        'primary': True,
        's_prime': {'holds': False, 'witness': None},
        's_primary': {'holds': True, 'witness': 1},
        'variants': {'b': True, 'c': True, 'd': True},
    }


def test_render_json_is_deterministic() -> None:
    """Two runs render byte-identical JSON with sorted keys."""
    first = render_json(execute(parse_document(Z4_EXAMPLE)))
    second = render_json(execute(parse_document(Z4_EXAMPLE)))
    assert first == second
    assert first.endswith('\n')
    assert json.loads(first)['queries'][0]['s_primary']['witness'] == 1


def test_execute_tuple_elements_over_idealization() -> None:
    """Idealization elements are pairs; (0) in Z/2(+)Z/2 is not S-prime."""
    source = """\
ring R = zmod 2
module C = zmod 2 over R
ring T = idealization(R, C)
module M = regular T
sub Z of M = {(0, 0)}
set S in T = {(1, 0), (1, 1)}
query s_prime Z S
"""
    (record,) = execute(parse_document(source)).records
    assert record['kind'] == 's_prime'
    assert record['applicable'] is True
    assert record['holds'] is False
    assert record['witness'] is None
    assert record['instance']['set'] == [[1, 0], [1, 1]]


def test_execute_generated_sub() -> None:
    """``gen {2}`` in Z/4 is the ideal (2), which is prime."""
    source = """\
ring R = zmod 4
module M = regular R
sub I of M = gen {2}
set S in R = {1}
query s_primary I S
"""
    (record,) = execute(parse_document(source)).records
    assert record['instance']['sub'] == [0, 2]
    assert record['holds'] is True
    assert record['witness'] == 1


def test_execute_suite_and_search_queries() -> None:
    """Suite and search queries produce records in statement order."""
    source = """\
query suite ring-axioms maxring=4 maxmod=4
query search s-primary-not-s-prime maxring=4 maxmod=4 skiptrivial
"""
    document = parse_document(source)
    assert isinstance(document.statements[0], SuiteQuery)
    assert isinstance(document.statements[1], SearchQuery)
    suite, search = execute(document).records
    assert suite['kind'] == 'suite'
    assert suite['checked'] == 3
    assert suite['passed'] is True
    assert search['kind'] == 'search'
    assert search['found'] == {
        'module': {'cyclic': {'d': 4, 'ring': {'zmod': 4}}},
        'sub': [0],
        'set': [1, 3],
    }


def test_product_of_modules_over_one_ring_is_a_direct_sum() -> None:
    """``product(A, B)`` over a shared ring keeps that ring and takes pair elements."""
    source = """\
ring R = zmod 2
module A = regular R
module B = zmod 2 over R
module D = product(A, B)
sub Z of D = {(0, 0)}
set S in R = {1}
query classify Z S
"""
    report = execute(parse_document(source))
    assert report.exit_code == 0
    (record,) = report.records
    assert record['instance']['module'] == {
        'sum': [{'regular': {'zmod': 2}}, {'cyclic': {'d': 2, 'ring': {'zmod': 2}}}]
    }
    assert record['instance']['set'] == [1]
    assert record['applicable'] is True


def test_suite_query_accepts_result_aliases() -> None:
    """Aliased property names run the canonical property."""
    document = parse_document('query suite thm1-equivalences maxring=4 maxmod=4\n')
    report = execute(document)
    assert report.exit_code == 0
    (record,) = report.records
    assert record['property'] == 's-primary-equivalent-forms'
    assert record['passed'] is True


@pytest.mark.parametrize(
    ('source', 'line', 'column', 'fragment'),
    [
        ('ring R = zmod\n', 1, 14, 'the modulus n'),
        ('module M = regular R\n', 1, 20, "undefined name 'R'"),
        ('ring R = zmod 4\nset S in R = {1}\nmodule M = regular S\n', 3, 20, "'S' is a set"),
        ('ring R = zmod 4\nring R = zmod 6\n', 2, 6, 'already declared on line 1'),
        ('ring R = zmod 4 @\n', 1, 17, "unexpected character '@'"),
        ('query suite no-such-property\n', 1, 13, 'Unknown property'),
        ('query search nowhere\n', 1, 14, 'Unknown search target'),
        ('ring A = zmod 2\nring P = product(A)\n', 2, 20, 'at least two factors'),
        ('frobnicate\n', 1, 1, "unknown statement 'frobnicate'"),
        (
            'ring R = zmod 4\nmodule M = zmod 2 over R\n'
            'sub I of M = {0}\nring Q = quotient(R, I)\n',
            4,
            22,
            'is not a sub of regular R',
        ),
        ('query suite ring-axioms maxring=0\n', 1, 25, 'must be positive'),
    ],
)
def test_parse_errors_are_located(source: str, line: int, column: int, fragment: str) -> None:
    """Every syntax and reference error carries its line and column."""
    with pytest.raises(InputError) as info:
        parse_document(source)
    assert (info.value.line, info.value.column) == (line, column)
    assert fragment in str(info.value)


def test_invalid_set_is_reported_at_its_line() -> None:
    """A set containing 0 parses but fails validation during execution."""
    document = parse_document('ring R = zmod 4\nset S in R = {0, 1}\n')
    with pytest.raises(InputError) as info:
        execute(document)
    assert info.value.line == 2
    assert info.value.column == 1


def test_foreign_element_is_reported() -> None:
    """Elements outside the ring are located errors."""
    document = parse_document('ring R = zmod 4\nset S in R = {1, 7}\n')
    with pytest.raises(InputError) as info:
        execute(document)
    assert info.value.line == 2
    assert '7' in info.value.message


def test_set_and_sub_over_different_rings() -> None:
    """Classification needs the set and the submodule over one ring."""
    source = """\
ring R = zmod 4
ring Q = zmod 6
module M = regular R
sub P of M = {0}
set S in Q = {1}
query classify P S
"""
    with pytest.raises(InputError) as info:
        execute(parse_document(source))
    assert info.value.line == 6
