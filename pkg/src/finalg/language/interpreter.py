"""Evaluate a parsed document into query records."""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from finalg.classify import WitnessVerdict, classify, is_s_prime, is_s_primary
from finalg.codec import encode_element, module_payload
from finalg.errors import AlgebraError, InputError
from finalg.language.document import (
    ClassifyQuery,
    CyclicExpr,
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
)
from finalg.modules import (
    ModuleDescriptor,
    Submodule,
    cyclic_module,
    direct_sum,
    generated_submodule,
    product_module,
    quotient_module,
    regular_module,
    submodule,
)
from finalg.rings import (
    Encoding,
    MultClosedSet,
    RingDescriptor,
    ideal,
    idealization_ring,
    product_ring,
    quotient_ring,
    validate_mult_closed,
    zmod,
)
from finalg.settings import Limits, get_limits, use_limits
from finalg.verify import InstanceFamily, SearchBounds, run_suite, search_separation

__all__ = ["ExecutionReport", "execute", "render_json"]

logger = logging.getLogger(__name__)

Record = dict[str, Any]

DEFAULT_MAX_RING = 8
DEFAULT_MAX_MODULE = 8


@dataclass(frozen=True, slots=True)
class ExecutionReport:
    records: tuple[Record, ...]
    suite_failed: bool = False

    @property
    def exit_code(self) -> int:
        return 1 if self.suite_failed else 0


def render_json(report: ExecutionReport) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps({'queries': list(report.records)}, sort_keys=True, indent=2) + '\n'


def _witness(owner: RingDescriptor, verdict: WitnessVerdict) -> Record:
    witness = None if verdict.witness is None else encode_element(owner.encode(verdict.witness))
    return {'holds': verdict.holds, 'witness': witness}


def _encodings(owner: RingDescriptor | ModuleDescriptor, members: Iterable[int]) -> list[Any]:
    return [encode_element(owner.encode(x)) for x in sorted(members)]


@dataclass
class _Environment:
    limits: Limits
    workers: int | None
    rings: dict[str, RingDescriptor] = field(default_factory=dict)
    modules: dict[str, ModuleDescriptor] = field(default_factory=dict)
    sets: dict[str, MultClosedSet] = field(default_factory=dict)
    subs: dict[str, Submodule] = field(default_factory=dict)

    def positions(
        self, owner: RingDescriptor | ModuleDescriptor, elements: Iterable[Encoding]
    ) -> set[int]:
        return {owner.index(element) for element in elements}

    def build_ring(self, expr: RingExpr) -> RingDescriptor:
        if isinstance(expr, ProductRingExpr):
            return product_ring([self.rings[name] for name in expr.factors])
        if isinstance(expr, QuotientRingExpr):
            base = self.rings[expr.ring]
            return quotient_ring(base, ideal(base, self.subs[expr.ideal].elements))
        if isinstance(expr, IdealizationExpr):
            base, carrier = self.rings[expr.ring], self.modules[expr.module]
            if carrier.ring != base:
                msg = f'module {expr.module!r} is not a module over {expr.ring!r}'
                raise AlgebraError(msg)
            return idealization_ring(base, carrier)
        return zmod(expr.n)

    def build_module(self, expr: ModuleExpr) -> ModuleDescriptor:
        if isinstance(expr, RegularExpr):
            return regular_module(self.rings[expr.ring])
        if isinstance(expr, CyclicExpr):
            return cyclic_module(expr.d, self.rings[expr.ring])
        if isinstance(expr, ProductModuleExpr):
            factors = [self.modules[name] for name in expr.factors]
            if all(factor.ring == factors[0].ring for factor in factors):
                return direct_sum(factors)
            return product_module(factors)
        base = self.modules[expr.module]
        return quotient_module(base, self.subs[expr.sub])[0]

    def declare(self, statement: RingDecl | ModuleDecl | SetDecl | SubDecl) -> None:
        if isinstance(statement, RingDecl):
            self.rings[statement.name] = self.build_ring(statement.expr)
        elif isinstance(statement, ModuleDecl):
            self.modules[statement.name] = self.build_module(statement.expr)
        elif isinstance(statement, SetDecl):
            ring = self.rings[statement.ring]
            self.sets[statement.name] = validate_mult_closed(
                ring, self.positions(ring, statement.elements)
            )
        else:
            module = self.modules[statement.module]
            members = self.positions(module, statement.elements)
            self.subs[statement.name] = (
                generated_submodule(module, members)
                if statement.generated
                else submodule(module, members)
            )

    def classify_query(self, query: ClassifyQuery) -> Record:
        candidate, subset = self.subs[query.sub], self.sets[query.subset]
        module = candidate.module
        if subset.ring != module.ring:
            msg = (
                f'set {query.subset!r} lives in {subset.ring}, '
                f'but {query.sub!r} is over {module.ring}'
            )
            raise AlgebraError(msg)
        instance = {
            'module': module_payload(module),
            'sub': _encodings(module, candidate.elements),
            'set': _encodings(subset.ring, subset.elements),
        }
        ring = module.ring
        if query.kind is QueryKind.CLASSIFY:
            report = classify(candidate, subset)
            variants = None if report.variants is None else report.variants.as_dict()
            return {
                'kind': query.kind.value,
                'instance': instance,
                'applicable': report.applicable,
                'prime': report.prime,
                'primary': report.primary,
                's_prime': _witness(ring, report.s_prime),
                's_primary': _witness(ring, report.s_primary),
                'variants': variants,
            }
        test = is_s_primary if query.kind is QueryKind.S_PRIMARY else is_s_prime
        verdict = test(candidate, subset)
        return {
            'kind': query.kind.value,
            'instance': instance,
            'applicable': verdict.applicable,
            **_witness(ring, verdict),
        }

    def suite_query(self, query: SuiteQuery) -> tuple[Record, bool]:
        family = InstanceFamily(
            max_ring=query.max_ring or DEFAULT_MAX_RING,
            max_module=query.max_module or DEFAULT_MAX_MODULE,
        )
        result = run_suite(query.property, family, workers=self.workers, limits=self.limits)
        return {'kind': 'suite', **result.to_json_dict()}, not result.passed

    def search_query(self, query: SearchQuery) -> Record:
        bounds = SearchBounds(
            max_ring=query.max_ring or DEFAULT_MAX_RING,
            max_module=query.max_module or DEFAULT_MAX_MODULE,
            skip_trivial_set=query.skip_trivial,
        )
        return {'kind': 'search', **search_separation(query.target, bounds).to_json_dict()}


def _located(statement: Statement, exc: AlgebraError) -> InputError:
    location: Location = statement.location
    return InputError(str(exc), line=location.line, column=location.column)


def execute(
    document: Document, *, limits: Limits | None = None, workers: int | None = None
) -> ExecutionReport:
    """Build declarations in order and answer every query.

    Algebraic errors are re-raised as :class:`InputError` located at the offending statement.
    """
    env = _Environment(limits=limits or get_limits(), workers=workers)
    records: list[Record] = []
    suite_failed = False
    with use_limits(env.limits):
        for statement in document.statements:
            try:
                if isinstance(statement, RingDecl | ModuleDecl | SetDecl | SubDecl):
                    env.declare(statement)
                elif isinstance(statement, ClassifyQuery):
                    records.append(env.classify_query(statement))
                elif isinstance(statement, SuiteQuery):
                    record, failed = env.suite_query(statement)
                    records.append(record)
                    suite_failed = suite_failed or failed
                else:
                    records.append(env.search_query(statement))
            except InputError:
                raise
            except AlgebraError as exc:
                raise _located(statement, exc) from exc
    logger.debug('Executed %d statements, %d records', len(document.statements), len(records))
    return ExecutionReport(records=tuple(records), suite_failed=suite_failed)
