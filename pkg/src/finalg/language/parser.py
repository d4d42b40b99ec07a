"""Line-oriented parser for input documents.

Each non-blank line holds one statement; ``#`` starts a comment. Names must be
declared before use and each reference is checked against the kind it needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TypeVar

from finalg.errors import InputError, UnknownPropertyError, UnknownTargetError
from finalg.language.document import (
    ClassifyQuery,
    CyclicExpr,
    Declaration,
    Document,
    IdealizationExpr,
    Location,
    ModuleDecl,
    ModuleExpr,
    ProductModuleExpr,
    ProductRingExpr,
    QueryKind,
    QuotientModuleExpr,
    QuotientRingExpr,
    RegularExpr,
    RingDecl,
    RingExpr,
    SearchQuery,
    SetDecl,
    Statement,
    SubDecl,
    SuiteQuery,
    ZmodExpr,
)
from finalg.rings import Encoding
from finalg.verify import SeparationTarget, get_property

__all__ = ["Token", "parse_document", "tokenize"]

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>[ \t\r]+)
    | (?P<comment>\#.*)
    | (?P<number>\d+)
    | (?P<name>[A-Za-z_][A-Za-z0-9_\-]*)
    | (?P<punct>[=,{}()])
    """,
    re.VERBOSE,
)

_D = TypeVar('_D', RingDecl, ModuleDecl, SetDecl, SubDecl)

_STATEMENT_HINT = "'ring', 'module', 'set', 'sub' or 'query'"
_QUERY_HINT = "'classify', 's_primary', 's_prime', 'suite' or 'search'"


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return 'end of line' if self.kind == 'end' else repr(self.text)


def tokenize(line: str, number: int) -> list[Token]:
    """Split one line into tokens, ending with an ``end`` marker."""
    tokens: list[Token] = []
    position = 0
    while position < len(line):
        match = _TOKEN_PATTERN.match(line, position)
        if match is None:
            msg = f'unexpected character {line[position]!r}'
            raise InputError(msg, line=number, column=position + 1)
        kind = match.lastgroup or ''
        if kind not in {'space', 'comment'}:
            tokens.append(Token(kind, match.group(), number, position + 1))
        position = match.end()
    tokens.append(Token('end', '', number, len(line.rstrip('\r\n')) + 1))
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self._position = 0

    def peek(self) -> Token:
        return self._tokens[self._position]

    def advance(self) -> Token:
        token = self._tokens[self._position]
        if token.kind != 'end':
            self._position += 1
        return token

    def fail(self, message: str, hint: str | None = None, token: Token | None = None) -> InputError:
        at = token or self.peek()
        return InputError(message, line=at.line, column=at.column, hint=hint)

    def expect_punct(self, symbol: str) -> Token:
        token = self.peek()
        if token.kind != 'punct' or token.text != symbol:
            raise self.fail(f'unexpected {token.describe()}', f"'{symbol}'")
        return self.advance()

    def accept_punct(self, symbol: str) -> bool:
        token = self.peek()
        if token.kind == 'punct' and token.text == symbol:
            self.advance()
            return True
        return False

    def expect_keyword(self, word: str) -> Token:
        token = self.peek()
        if token.kind != 'name' or token.text != word:
            raise self.fail(f'unexpected {token.describe()}', f"'{word}'")
        return self.advance()

    def expect_name(self, hint: str) -> Token:
        token = self.peek()
        if token.kind != 'name':
            raise self.fail(f'unexpected {token.describe()}', hint)
        return self.advance()

    def expect_number(self, hint: str = 'a non-negative integer') -> int:
        token = self.peek()
        if token.kind != 'number':
            raise self.fail(f'unexpected {token.describe()}', hint)
        self.advance()
        return int(token.text)

    def finish(self) -> None:
        token = self.peek()
        if token.kind != 'end':
            raise self.fail(f'unexpected {token.describe()}', 'end of line')


class _Parser:
    def __init__(self) -> None:
        self.symbols: dict[str, Declaration] = {}
        self.statements: list[Statement] = []

    # Name handling

    def declare(self, token: Token) -> str:
        if token.text in self.symbols:
            previous = self.symbols[token.text].location
            msg = f'{token.text!r} is already declared on line {previous.line}'
            raise InputError(msg, line=token.line, column=token.column)
        return token.text

    def resolve(self, token: Token, kind: type[_D], label: str) -> _D:
        declaration = self.symbols.get(token.text)
        if declaration is None:
            msg = f'undefined name {token.text!r}'
            raise InputError(msg, line=token.line, column=token.column, hint=f'a declared {label}')
        if not isinstance(declaration, kind):
            actual = _KIND_LABELS[type(declaration)]
            msg = f'{token.text!r} is a {actual}, not a {label}'
            raise InputError(msg, line=token.line, column=token.column)
        return declaration

    def reference(self, cursor: _Cursor, kind: type[_D], label: str) -> str:
        token = cursor.expect_name(f'a {label} name')
        self.resolve(token, kind, label)
        return token.text

    # Elements

    def element(self, cursor: _Cursor) -> Encoding:
        if cursor.accept_punct('('):
            parts = [self.element(cursor)]
            while cursor.accept_punct(','):
                parts.append(self.element(cursor))
            cursor.expect_punct(')')
            return tuple(parts)
        return cursor.expect_number('an integer or a tuple element')

    def element_set(self, cursor: _Cursor) -> tuple[Encoding, ...]:
        cursor.expect_punct('{')
        if cursor.accept_punct('}'):
            return ()
        members = [self.element(cursor)]
        while cursor.accept_punct(','):
            members.append(self.element(cursor))
        cursor.expect_punct('}')
        return tuple(members)

    def name_list(self, cursor: _Cursor, kind: type[_D], label: str) -> tuple[str, ...]:
        cursor.expect_punct('(')
        names = [self.reference(cursor, kind, label)]
        while cursor.accept_punct(','):
            names.append(self.reference(cursor, kind, label))
        cursor.expect_punct(')')
        if len(names) < 2:  # noqa: PLR2004
            raise cursor.fail('a product needs at least two factors', "','")
        return tuple(names)

    # Statements

    def ring_expr(self, cursor: _Cursor) -> RingExpr:
        head = cursor.expect_name("'zmod', 'product', 'quotient' or 'idealization'")
        if head.text == 'zmod':
            return ZmodExpr(cursor.expect_number('the modulus n'))
        if head.text == 'product':
            return ProductRingExpr(self.name_list(cursor, RingDecl, 'ring'))
        if head.text == 'quotient':
            cursor.expect_punct('(')
            ring_token = cursor.expect_name('a ring name')
            self.resolve(ring_token, RingDecl, 'ring')
            cursor.expect_punct(',')
            ideal_token = cursor.expect_name('an ideal (sub of a regular module)')
            ideal_decl = self.resolve(ideal_token, SubDecl, 'sub')
            owner = self.symbols[ideal_decl.module]
            if not (isinstance(owner, ModuleDecl) and owner.expr == RegularExpr(ring_token.text)):
                msg = f'{ideal_token.text!r} is not a sub of regular {ring_token.text}'
                raise InputError(msg, line=ideal_token.line, column=ideal_token.column)
            cursor.expect_punct(')')
            return QuotientRingExpr(ring_token.text, ideal_token.text)
        if head.text == 'idealization':
            cursor.expect_punct('(')
            ring = self.reference(cursor, RingDecl, 'ring')
            cursor.expect_punct(',')
            module = self.reference(cursor, ModuleDecl, 'module')
            cursor.expect_punct(')')
            return IdealizationExpr(ring, module)
        msg = f'unknown ring construction {head.text!r}'
        raise cursor.fail(msg, "'zmod', 'product', 'quotient' or 'idealization'", head)

    def module_expr(self, cursor: _Cursor) -> ModuleExpr:
        head = cursor.expect_name("'regular', 'zmod', 'product' or 'quotient'")
        if head.text == 'regular':
            return RegularExpr(self.reference(cursor, RingDecl, 'ring'))
        if head.text == 'zmod':
            d = cursor.expect_number('the cyclic order d')
            cursor.expect_keyword('over')
            return CyclicExpr(d, self.reference(cursor, RingDecl, 'ring'))
        if head.text == 'product':
            return ProductModuleExpr(self.name_list(cursor, ModuleDecl, 'module'))
        if head.text == 'quotient':
            cursor.expect_punct('(')
            module = self.reference(cursor, ModuleDecl, 'module')
            cursor.expect_punct(',')
            sub_token = cursor.expect_name('a sub name')
            sub_decl = self.resolve(sub_token, SubDecl, 'sub')
            if sub_decl.module != module:
                msg = f'{sub_token.text!r} is not a sub of {module!r}'
                raise InputError(msg, line=sub_token.line, column=sub_token.column)
            cursor.expect_punct(')')
            return QuotientModuleExpr(module, sub_token.text)
        msg = f'unknown module construction {head.text!r}'
        raise cursor.fail(msg, "'regular', 'zmod', 'product' or 'quotient'", head)

    def bounds(self, cursor: _Cursor, *, allow_flag: bool) -> dict[str, int | bool]:
        options: dict[str, int | bool] = {}
        known = {'maxring', 'maxmod', 'skiptrivial'} if allow_flag else {'maxring', 'maxmod'}
        hint = ', '.join(sorted(f"'{k}'" for k in known))
        while cursor.peek().kind != 'end':
            token = cursor.expect_name(hint)
            if token.text not in known:
                raise cursor.fail(f'unknown option {token.text!r}', hint, token)
            if token.text in options:
                raise cursor.fail(f'option {token.text!r} given twice', None, token)
            if token.text == 'skiptrivial':
                options[token.text] = True
                continue
            cursor.expect_punct('=')
            value = cursor.expect_number('a positive integer')
            if value < 1:
                raise cursor.fail(f'{token.text} must be positive', None, token)
            options[token.text] = value
        return options

    def query(self, cursor: _Cursor, location: Location) -> Statement:
        head = cursor.expect_name(_QUERY_HINT)
        if head.text in {kind.value for kind in QueryKind}:
            sub = self.reference(cursor, SubDecl, 'sub')
            subset = self.reference(cursor, SetDecl, 'set')
            return ClassifyQuery(QueryKind(head.text), sub, subset, location)
        if head.text == 'suite':
            token = cursor.expect_name('a property name')
            try:
                get_property(token.text)
            except UnknownPropertyError as exc:
                raise InputError(str(exc), line=token.line, column=token.column) from None
            options = self.bounds(cursor, allow_flag=False)
            return SuiteQuery(
                token.text,
                max_ring=options.get('maxring'),  # type: ignore[arg-type]
                max_module=options.get('maxmod'),  # type: ignore[arg-type]
                location=location,
            )
        if head.text == 'search':
            token = cursor.expect_name('a search target')
            try:
                SeparationTarget.parse(token.text)
            except UnknownTargetError as exc:
                raise InputError(str(exc), line=token.line, column=token.column) from None
            options = self.bounds(cursor, allow_flag=True)
            return SearchQuery(
                token.text,
                max_ring=options.get('maxring'),  # type: ignore[arg-type]
                max_module=options.get('maxmod'),  # type: ignore[arg-type]
                skip_trivial=bool(options.get('skiptrivial', False)),
                location=location,
            )
        raise cursor.fail(f'unknown query {head.text!r}', _QUERY_HINT, head)

    def statement(self, cursor: _Cursor) -> Statement:
        head = cursor.expect_name(_STATEMENT_HINT)
        location = Location(head.line, head.column)
        if head.text == 'ring':
            name = self.declare(cursor.expect_name('a ring name'))
            cursor.expect_punct('=')
            return RingDecl(name, self.ring_expr(cursor), location)
        if head.text == 'module':
            name = self.declare(cursor.expect_name('a module name'))
            cursor.expect_punct('=')
            return ModuleDecl(name, self.module_expr(cursor), location)
        if head.text == 'set':
            name = self.declare(cursor.expect_name('a set name'))
            cursor.expect_keyword('in')
            ring = self.reference(cursor, RingDecl, 'ring')
            cursor.expect_punct('=')
            return SetDecl(name, ring, self.element_set(cursor), location)
        if head.text == 'sub':
            name = self.declare(cursor.expect_name('a sub name'))
            cursor.expect_keyword('of')
            module = self.reference(cursor, ModuleDecl, 'module')
            cursor.expect_punct('=')
            generated = cursor.peek().kind == 'name' and cursor.peek().text == 'gen'
            if generated:
                cursor.advance()
            return SubDecl(name, module, self.element_set(cursor), generated, location)
        if head.text == 'query':
            return self.query(cursor, location)
        raise cursor.fail(f'unknown statement {head.text!r}', _STATEMENT_HINT, head)

    def line(self, text: str, number: int) -> None:
        cursor = _Cursor(tokenize(text, number))
        if cursor.peek().kind == 'end':
            return
        statement = self.statement(cursor)
        cursor.finish()
        if isinstance(statement, RingDecl | ModuleDecl | SetDecl | SubDecl):
            self.symbols[statement.name] = statement
        self.statements.append(statement)


_KIND_LABELS: dict[type, str] = {
    RingDecl: 'ring',
    ModuleDecl: 'module',
    SetDecl: 'set',
    SubDecl: 'sub',
}


def parse_document(text: str) -> Document:
    """Parse ``text`` into a :class:`Document` or raise a located :class:`InputError`."""
    parser = _Parser()
    for number, line in enumerate(text.splitlines(), start=1):
        parser.line(line, number)
    return Document(tuple(parser.statements))
