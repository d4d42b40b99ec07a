"""Syntax tree for input documents and its canonical printer.

Locations are excluded from equality, so a document printed with
:func:`format_document` and parsed again compares equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from finalg.rings import Encoding

__all__ = [
    "ClassifyQuery",
    "CyclicExpr",
    "Declaration",
    "Document",
    "IdealizationExpr",
    "Location",
    "ModuleDecl",
    "ModuleExpr",
    "ProductModuleExpr",
    "ProductRingExpr",
    "Query",
    "QueryKind",
    "QuotientModuleExpr",
    "QuotientRingExpr",
    "RegularExpr",
    "RingDecl",
    "RingExpr",
    "SearchQuery",
    "SetDecl",
    "Statement",
    "SubDecl",
    "SuiteQuery",
    "ZmodExpr",
    "format_document",
    "format_element",
    "format_statement",
]


@dataclass(frozen=True, slots=True)
class Location:
    line: int
    column: int


NOWHERE = Location(0, 0)


@dataclass(frozen=True, slots=True)
class ZmodExpr:
    n: int


@dataclass(frozen=True, slots=True)
class ProductRingExpr:
    factors: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class QuotientRingExpr:
    ring: str
    ideal: str


@dataclass(frozen=True, slots=True)
class IdealizationExpr:
    ring: str
    module: str


RingExpr = ZmodExpr | ProductRingExpr | QuotientRingExpr | IdealizationExpr


@dataclass(frozen=True, slots=True)
class RegularExpr:
    ring: str


@dataclass(frozen=True, slots=True)
class CyclicExpr:
    d: int
    ring: str


@dataclass(frozen=True, slots=True)
class ProductModuleExpr:
    factors: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class QuotientModuleExpr:
    module: str
    sub: str


ModuleExpr = RegularExpr | CyclicExpr | ProductModuleExpr | QuotientModuleExpr


@dataclass(frozen=True, slots=True)
class RingDecl:
    name: str
    expr: RingExpr
    location: Location = field(default=NOWHERE, compare=False)


@dataclass(frozen=True, slots=True)
class ModuleDecl:
    name: str
    expr: ModuleExpr
    location: Location = field(default=NOWHERE, compare=False)


@dataclass(frozen=True, slots=True)
class SetDecl:
    name: str
    ring: str
    elements: tuple[Encoding, ...]
    location: Location = field(default=NOWHERE, compare=False)


@dataclass(frozen=True, slots=True)
class SubDecl:
    """``sub NAME of MOD = {...}`` lists members; ``gen {...}`` lists generators."""

    name: str
    module: str
    elements: tuple[Encoding, ...]
    generated: bool = False
    location: Location = field(default=NOWHERE, compare=False)


class QueryKind(str, Enum):
    CLASSIFY = 'classify'
    S_PRIMARY = 's_primary'
    S_PRIME = 's_prime'


@dataclass(frozen=True, slots=True)
class ClassifyQuery:
    kind: QueryKind
    sub: str
    subset: str
    location: Location = field(default=NOWHERE, compare=False)


@dataclass(frozen=True, slots=True)
class SuiteQuery:
    property: str
    max_ring: int | None = None
    max_module: int | None = None
    location: Location = field(default=NOWHERE, compare=False)


@dataclass(frozen=True, slots=True)
class SearchQuery:
    target: str
    max_ring: int | None = None
    max_module: int | None = None
    skip_trivial: bool = False
    location: Location = field(default=NOWHERE, compare=False)


Declaration = RingDecl | ModuleDecl | SetDecl | SubDecl
Query = ClassifyQuery | SuiteQuery | SearchQuery
Statement = Declaration | Query

_DECLARATION_TYPES = (RingDecl, ModuleDecl, SetDecl, SubDecl)
_QUERY_TYPES = (ClassifyQuery, SuiteQuery, SearchQuery)


@dataclass(frozen=True, slots=True)
class Document:
    statements: tuple[Statement, ...]

    @property
    def declarations(self) -> tuple[Declaration, ...]:
        return tuple(s for s in self.statements if isinstance(s, _DECLARATION_TYPES))

    @property
    def queries(self) -> tuple[Query, ...]:
        return tuple(s for s in self.statements if isinstance(s, _QUERY_TYPES))


def format_element(encoding: Encoding) -> str:
    if isinstance(encoding, tuple):
        return '(' + ', '.join(format_element(part) for part in encoding) + ')'
    return str(encoding)


def _format_elements(elements: tuple[Encoding, ...]) -> str:
    return '{' + ', '.join(format_element(e) for e in elements) + '}'


def _format_ring(expr: RingExpr) -> str:
    if isinstance(expr, ZmodExpr):
        return f'zmod {expr.n}'
    if isinstance(expr, ProductRingExpr):
        return f'product({", ".join(expr.factors)})'
    if isinstance(expr, QuotientRingExpr):
        return f'quotient({expr.ring}, {expr.ideal})'
    return f'idealization({expr.ring}, {expr.module})'


def _format_module(expr: ModuleExpr) -> str:
    if isinstance(expr, RegularExpr):
        return f'regular {expr.ring}'
    if isinstance(expr, CyclicExpr):
        return f'zmod {expr.d} over {expr.ring}'
    if isinstance(expr, ProductModuleExpr):
        return f'product({", ".join(expr.factors)})'
    return f'quotient({expr.module}, {expr.sub})'


def _format_bounds(max_ring: int | None, max_module: int | None) -> str:
    parts = []
    if max_ring is not None:
        parts.append(f' maxring={max_ring}')
    if max_module is not None:
        parts.append(f' maxmod={max_module}')
    return ''.join(parts)


def format_statement(statement: Statement) -> str:
    if isinstance(statement, RingDecl):
        return f'ring {statement.name} = {_format_ring(statement.expr)}'
    if isinstance(statement, ModuleDecl):
        return f'module {statement.name} = {_format_module(statement.expr)}'
    if isinstance(statement, SetDecl):
        return f'set {statement.name} in {statement.ring} = {_format_elements(statement.elements)}'
    if isinstance(statement, SubDecl):
        prefix = 'gen ' if statement.generated else ''
        return (
            f'sub {statement.name} of {statement.module} = '
            f'{prefix}{_format_elements(statement.elements)}'
        )
    if isinstance(statement, ClassifyQuery):
        return f'query {statement.kind.value} {statement.sub} {statement.subset}'
    if isinstance(statement, SuiteQuery):
        bounds = _format_bounds(statement.max_ring, statement.max_module)
        return f'query suite {statement.property}{bounds}'
    bounds = _format_bounds(statement.max_ring, statement.max_module)
    flag = ' skiptrivial' if statement.skip_trivial else ''
    return f'query search {statement.target}{bounds}{flag}'


def format_document(document: Document) -> str:
    """Canonical text: one statement per line, comments and blank lines dropped."""
    return ''.join(f'{format_statement(s)}\n' for s in document.statements)
