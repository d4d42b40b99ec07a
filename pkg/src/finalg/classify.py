"""Prime, primary, S-prime and S-primary classification with witness extraction.

Every witness predicate returns a :class:`WitnessVerdict`. When the disjointness
precondition fails the verdict is *not applicable* rather than an exception, so
exhaustive sweeps never abort. Witnesses are the least qualifying element of S
in canonical order.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

from .errors import CapExceededError, ConstructionError
from .modules import (
    ModuleDescriptor,
    Submodule,
    annihilator,
    colon_m,
    colon_r,
    enumerate_submodules,
    full_submodule,
    quotient_module,
    regular_module,
    satisfies_prime_condition,
)
from .rings import (
    Ideal,
    MultClosedSet,
    RingDescriptor,
    enumerate_ideals,
    quotient_projection,
    quotient_ring,
    radical_ideal,
)

__all__ = [
    "ClassificationReport",
    "VariantVerdicts",
    "WitnessVerdict",
    "classify",
    "is_primary_submodule",
    "is_prime_submodule",
    "is_quasi_s_torsion_free",
    "is_s_prime",
    "is_s_prime_ideal",
    "is_s_primary",
    "is_s_primary_ideal",
    "is_s_torsion_free",
    "primary_colon_witness",
    "quotient_quasi_torsion_free",
    "quotient_torsion_free",
    "s_primary_variants",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WitnessVerdict:
    """Outcome of an existential predicate over S."""

    applicable: bool
    holds: bool
    witness: int | None = None
    reason: str | None = None

    @classmethod
    def not_applicable(cls, reason: str) -> WitnessVerdict:
        return cls(applicable=False, holds=False, reason=reason)

    @classmethod
    def found(cls, witness: int) -> WitnessVerdict:
        return cls(applicable=True, holds=True, witness=witness)

    @classmethod
    def absent(cls) -> WitnessVerdict:
        return cls(applicable=True, holds=False)


def _check_same_ring(module: ModuleDescriptor, subset: MultClosedSet) -> None:
    if subset.ring != module.ring:
        msg = f'The set {subset} does not live in the ring {module.ring}.'
        raise ConstructionError(msg)


def _module_colon(candidate: Submodule) -> Ideal:
    return colon_r(candidate, full_submodule(candidate.module))


def _disjointness_failure(candidate: Submodule, subset: MultClosedSet) -> str | None:
    _check_same_ring(candidate.module, subset)
    colon = _module_colon(candidate)
    if subset.meets(colon):
        shared = min(colon.elements & subset.elements)
        return f'(P:M) meets S at {subset.ring.encode(shared)!r}'
    return None


def _least_witness(subset: MultClosedSet, condition: Callable[[int], bool]) -> WitnessVerdict:
    for s in subset.members:
        if condition(s):
            return WitnessVerdict.found(s)
    return WitnessVerdict.absent()


def _offending_pairs(candidate: Submodule) -> list[tuple[int, int]]:
    """Pairs (r, m) with rm in P but m outside P."""
    module, members = candidate.module, candidate.elements
    return [
        (r, m)
        for r in module.ring.indices
        for m in module.indices
        if m not in members and module.act(r, m) in members
    ]


def is_prime_submodule(candidate: Submodule) -> bool:
    return satisfies_prime_condition(candidate)


def is_primary_submodule(candidate: Submodule) -> bool:
    """Proper, and rm in P forces m in P or r in the radical of (P:M)."""
    if not candidate.is_proper:
        return False
    root = radical_ideal(_module_colon(candidate)).elements
    return all(r in root for r, _ in _offending_pairs(candidate))


def is_s_prime(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    reason = _disjointness_failure(candidate, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    module, members = candidate.module, candidate.elements
    ring = module.ring
    colon = _module_colon(candidate).elements
    pairs = _offending_pairs(candidate)
    return _least_witness(
        subset,
        lambda s: all(
            ring.mul(s, r) in colon or module.act(s, m) in members for r, m in pairs
        ),
    )


def is_s_primary(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    reason = _disjointness_failure(candidate, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    module, members = candidate.module, candidate.elements
    ring = module.ring
    root = radical_ideal(_module_colon(candidate)).elements
    pairs = _offending_pairs(candidate)
    return _least_witness(
        subset,
        lambda s: all(ring.mul(s, r) in root or module.act(s, m) in members for r, m in pairs),
    )


@dataclass(frozen=True, slots=True)
class VariantVerdicts:
    """The three alternative formulations of S-primary, evaluated independently."""

    quotient_form: WitnessVerdict
    submodule_form: WitnessVerdict
    ideal_form: WitnessVerdict

    def as_dict(self) -> dict[str, bool]:
        return {
            'b': self.quotient_form.holds,
            'c': self.submodule_form.holds,
            'd': self.ideal_form.holds,
        }


def _nilpotent_within(ring: RingDescriptor, x: int, target: frozenset[int], bound: int) -> bool:
    value = x
    for _ in range(max(bound, 1)):
        if value in target:
            return True
        value = ring.mul(value, x)
    return False


def _quotient_form(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """Each r is injective on s(M/P) or (rs)^t kills M/P for some t <= |M|."""
    module = candidate.module
    ring = module.ring
    colon = _module_colon(candidate).elements
    quotient, _ = quotient_module(module, candidate)

    def works(s: int) -> bool:
        scaled = {quotient.act(s, x) for x in quotient.indices} - {quotient.zero}
        for r in ring.indices:
            injective = all(quotient.act(r, x) != quotient.zero for x in scaled)
            if not injective and not _nilpotent_within(
                ring, ring.mul(r, s), colon, module.size
            ):
                return False
        return True

    return _least_witness(subset, works)


def _submodule_form(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """rN in P forces sr in the radical or sN in P, over all submodules N."""
    module, members = candidate.module, candidate.elements
    ring = module.ring
    root = radical_ideal(_module_colon(candidate)).elements
    lattice = enumerate_submodules(module)
    hypotheses = [
        (r, sub)
        for sub in lattice
        for r in ring.indices
        if all(module.act(r, n) in members for n in sub.elements)
    ]
    return _least_witness(
        subset,
        lambda s: all(
            ring.mul(s, r) in root or all(module.act(s, n) in members for n in sub.elements)
            for r, sub in hypotheses
        ),
    )


def _ideal_form(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """JN in P forces sJ in the radical or sN in P, over all ideals J and submodules N."""
    module, members = candidate.module, candidate.elements
    ring = module.ring
    root = radical_ideal(_module_colon(candidate)).elements
    lattice = enumerate_submodules(module)
    hypotheses = [
        (scalars, sub)
        for sub in lattice
        for scalars in enumerate_ideals(ring)
        if all(module.act(j, n) in members for j in scalars.elements for n in sub.elements)
    ]
    return _least_witness(
        subset,
        lambda s: all(
            all(ring.mul(s, j) in root for j in scalars.elements)
            or all(module.act(s, n) in members for n in sub.elements)
            for scalars, sub in hypotheses
        ),
    )


def s_primary_variants(candidate: Submodule, subset: MultClosedSet) -> VariantVerdicts:
    """Evaluate the quotient, submodule and ideal formulations separately."""
    reason = _disjointness_failure(candidate, subset)
    if reason:
        skipped = WitnessVerdict.not_applicable(reason)
        return VariantVerdicts(skipped, skipped, skipped)
    return VariantVerdicts(
        quotient_form=_quotient_form(candidate, subset),
        submodule_form=_submodule_form(candidate, subset),
        ideal_form=_ideal_form(candidate, subset),
    )


def primary_colon_witness(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """Least s in S with (P :_M s) a primary submodule."""
    reason = _disjointness_failure(candidate, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    return _least_witness(subset, lambda s: is_primary_submodule(colon_m(candidate, s)))


def _annihilator_failure(module: ModuleDescriptor, subset: MultClosedSet) -> str | None:
    _check_same_ring(module, subset)
    if subset.meets(annihilator(module)):
        return 'Ann(M) meets S'
    return None


def is_s_torsion_free(module: ModuleDescriptor, subset: MultClosedSet) -> WitnessVerdict:
    reason = _annihilator_failure(module, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    ring = module.ring
    torsion = [
        (r, m)
        for r in ring.indices
        for m in module.indices
        if module.act(r, m) == module.zero
    ]
    return _least_witness(
        subset,
        lambda s: all(
            module.act(s, m) == module.zero or ring.mul(s, r) == ring.zero for r, m in torsion
        ),
    )


def is_quasi_s_torsion_free(module: ModuleDescriptor, subset: MultClosedSet) -> WitnessVerdict:
    reason = _annihilator_failure(module, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    ring = module.ring
    nothing = frozenset({ring.zero})
    torsion = [
        (r, m)
        for r in ring.indices
        for m in module.indices
        if module.act(r, m) == module.zero
    ]
    return _least_witness(
        subset,
        lambda s: all(
            module.act(s, m) == module.zero or ring.is_nilpotent_modulo(ring.mul(s, r), nothing)
            for r, m in torsion
        ),
    )


def _quotient_torsion(
    candidate: Submodule, subset: MultClosedSet, modulus: Ideal, *, quasi: bool
) -> WitnessVerdict:
    reason = _disjointness_failure(candidate, subset)
    if reason:
        return WitnessVerdict.not_applicable(reason)
    module = candidate.module
    ring = module.ring
    scalar_ring = quotient_ring(ring, modulus)
    project = quotient_projection(scalar_ring)
    factor, _ = quotient_module(module, candidate)
    nothing = frozenset({scalar_ring.zero})
    torsion = [
        (a, x)
        for a in ring.indices
        for x in factor.indices
        if factor.act(a, x) == factor.zero
    ]

    def scalar_vanishes(s: int, a: int) -> bool:
        product = scalar_ring.mul(project[s], project[a])
        if quasi:
            return scalar_ring.is_nilpotent_modulo(product, nothing)
        return product == scalar_ring.zero

    return _least_witness(
        subset,
        lambda s: all(
            factor.act(s, x) == factor.zero or scalar_vanishes(s, a) for a, x in torsion
        ),
    )


def quotient_torsion_free(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """M/P as a pi(S)-torsion-free module, scalars taken in R/rad(P:M)."""
    modulus = radical_ideal(_module_colon(candidate))
    if not modulus.is_proper:
        return WitnessVerdict.not_applicable('P = M')
    return _quotient_torsion(candidate, subset, modulus, quasi=False)


def quotient_quasi_torsion_free(candidate: Submodule, subset: MultClosedSet) -> WitnessVerdict:
    """M/P as a quasi pi'(S)-torsion-free module, scalars taken in R/(P:M)."""
    modulus = _module_colon(candidate)
    if not modulus.is_proper:
        return WitnessVerdict.not_applicable('P = M')
    return _quotient_torsion(candidate, subset, modulus, quasi=True)


def _as_regular_submodule(target: Ideal) -> Submodule:
    return Submodule(regular_module(target.ring), target.elements)


def is_s_primary_ideal(target: Ideal, subset: MultClosedSet) -> WitnessVerdict:
    """S-primary test for an ideal viewed as a submodule of R."""
    return is_s_primary(_as_regular_submodule(target), subset)


def is_s_prime_ideal(target: Ideal, subset: MultClosedSet) -> WitnessVerdict:
    return is_s_prime(_as_regular_submodule(target), subset)


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    """Full verdict vector for one (M, P, S) instance."""

    candidate: Submodule
    subset: MultClosedSet
    applicable: bool
    reason: str | None
    prime: bool
    primary: bool
    s_prime: WitnessVerdict
    s_primary: WitnessVerdict
    variants: VariantVerdicts | None

    @property
    def module(self) -> ModuleDescriptor:
        return self.candidate.module


def classify(candidate: Submodule, subset: MultClosedSet) -> ClassificationReport:
    """Aggregate every predicate; variants are ``None`` when a lattice exceeds its cap."""
    reason = _disjointness_failure(candidate, subset)
    variants: VariantVerdicts | None
    try:
        variants = s_primary_variants(candidate, subset)
    except CapExceededError as exc:
        logger.debug('Skipping alternative formulations: %s', exc)
        variants = None
    return ClassificationReport(
        candidate=candidate,
        subset=subset,
        applicable=reason is None,
        reason=reason,
        prime=is_prime_submodule(candidate),
        primary=is_primary_submodule(candidate),
        s_prime=is_s_prime(candidate, subset),
        s_primary=is_s_primary(candidate, subset),
        variants=variants,
    )
