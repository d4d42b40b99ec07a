"""Rings and modules of fractions as explicit equivalence classes over R x S."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ConstructionError
from .modules import (
    LocalizedModuleOf,
    ModuleDescriptor,
    Submodule,
    assemble_module,
    submodule,
)
from .rings import (
    LocalizationOf,
    MultClosedSet,
    RingDescriptor,
    assemble_ring,
    ring_units,
    validate_mult_closed,
)

__all__ = [
    "LocalizedModule",
    "LocalizedRing",
    "localize_module",
    "localize_ring",
    "localize_submodule",
    "saturate",
    "saturation_by_membership",
]

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def _classes(
    pairs: Sequence[Pair], equivalent: Callable[[Pair, Pair], bool]
) -> tuple[list[Pair], dict[Pair, int]]:
    """Partition ``pairs`` (already in canonical order); each class keeps its least pair."""
    representatives: list[Pair] = []
    owner: dict[Pair, int] = {}
    for pair in pairs:
        for slot, rep in enumerate(representatives):
            if equivalent(rep, pair):
                owner[pair] = slot
                break
        else:
            owner[pair] = len(representatives)
            representatives.append(pair)
    return representatives, owner


@dataclass(frozen=True)
class LocalizedRing:
    """S^-1 R with its fraction map ``a -> a/1``."""

    base: RingDescriptor
    subset: MultClosedSet
    ring: RingDescriptor
    fraction_map: tuple[int, ...]
    representatives: tuple[Pair, ...] = field(repr=False)
    _fractions: dict[Pair, int] = field(repr=False, compare=False)

    def fraction(self, a: int, s: int) -> int:
        """Position of the class of ``a/s``."""
        return self._fractions[(a, s)]


@lru_cache(maxsize=256)
def localize_ring(subset: MultClosedSet) -> LocalizedRing:
    """Materialise S^-1 R; (a,s) ~ (b,t) when u(at - bs) = 0 for some u in S."""
    base = subset.ring
    denominators = subset.members

    def equivalent(x: Pair, y: Pair) -> bool:
        (a, s), (b, t) = x, y
        difference = base.sub(base.mul(a, t), base.mul(b, s))
        return any(base.mul(u, difference) == base.zero for u in denominators)

    pairs = [(a, s) for a in base.indices for s in denominators]
    reps, owner = _classes(pairs, equivalent)

    def add(x: int, y: int) -> int:
        (a, s), (b, t) = reps[x], reps[y]
        numerator = base.add(base.mul(a, t), base.mul(b, s))
        return owner[(numerator, base.mul(s, t))]

    def mul(x: int, y: int) -> int:
        (a, s), (b, t) = reps[x], reps[y]
        return owner[(base.mul(a, b), base.mul(s, t))]

    ring = assemble_ring(
        LocalizationOf(base, subset.elements),
        [(base.encode(a), base.encode(s)) for a, s in reps],
        add,
        mul,
        zero=owner[(base.zero, base.one)],
        one=owner[(base.one, base.one)],
    )
    position = [ring.index((base.encode(a), base.encode(s))) for a, s in reps]
    ordered = [(0, 0)] * len(reps)
    for raw, rep in enumerate(reps):
        ordered[position[raw]] = rep
    logger.debug('Localized %s at %s: %d classes', base, subset, ring.size)
    return LocalizedRing(
        base=base,
        subset=subset,
        ring=ring,
        fraction_map=tuple(position[owner[(a, base.one)]] for a in base.indices),
        representatives=tuple(ordered),
        _fractions={pair: position[slot] for pair, slot in owner.items()},
    )


@dataclass(frozen=True)
class LocalizedModule:
    """S^-1 M over S^-1 R with its fraction map ``m -> m/1``."""

    base: ModuleDescriptor
    scalars: LocalizedRing
    module: ModuleDescriptor
    fraction_map: tuple[int, ...]
    _fractions: dict[Pair, int] = field(repr=False, compare=False)

    def fraction(self, m: int, s: int) -> int:
        """Position of the class of ``m/s``."""
        return self._fractions[(m, s)]


@lru_cache(maxsize=256)
def localize_module(base: ModuleDescriptor, subset: MultClosedSet) -> LocalizedModule:
    """Materialise S^-1 M; (m,s) ~ (n,t) when u(tm - sn) = 0 for some u in S."""
    ring = base.ring
    if subset.ring != ring:
        msg = f'The set {subset} does not live in the ring {ring}.'
        raise ConstructionError(msg)
    scalars = localize_ring(subset)
    denominators = subset.members

    def equivalent(x: Pair, y: Pair) -> bool:
        (m, s), (n, t) = x, y
        difference = base.sub(base.act(t, m), base.act(s, n))
        return any(base.act(u, difference) == base.zero for u in denominators)

    pairs = [(m, s) for m in base.indices for s in denominators]
    reps, owner = _classes(pairs, equivalent)

    def add(x: int, y: int) -> int:
        (m, s), (n, t) = reps[x], reps[y]
        numerator = base.add(base.act(t, m), base.act(s, n))
        return owner[(numerator, ring.mul(s, t))]

    def act(r: int, x: int) -> int:
        a, s = scalars.representatives[r]
        m, t = reps[x]
        return owner[(base.act(a, m), ring.mul(s, t))]

    module = assemble_module(
        LocalizedModuleOf(base, subset.elements),
        scalars.ring,
        [(base.encode(m), ring.encode(s)) for m, s in reps],
        add,
        act,
        zero=owner[(base.zero, ring.one)],
    )
    position = [module.index((base.encode(m), ring.encode(s))) for m, s in reps]
    return LocalizedModule(
        base=base,
        scalars=scalars,
        module=module,
        fraction_map=tuple(position[owner[(m, ring.one)]] for m in base.indices),
        _fractions={pair: position[slot] for pair, slot in owner.items()},
    )


def localize_submodule(
    target: Submodule, subset: MultClosedSet
) -> tuple[LocalizedModule, Submodule]:
    """S^-1 P = { p/s } inside S^-1 M."""
    localized = localize_module(target.module, subset)
    members = {localized.fraction(p, s) for p in target.elements for s in subset.members}
    return localized, submodule(localized.module, members)


def saturate(subset: MultClosedSet) -> MultClosedSet:
    """S* = { x : x/1 is a unit of S^-1 R }."""
    localized = localize_ring(subset)
    units = ring_units(localized.ring)
    base = subset.ring
    return validate_mult_closed(
        base, {x for x in base.indices if localized.fraction_map[x] in units}
    )


def saturation_by_membership(subset: MultClosedSet) -> frozenset[int]:
    """{ x : us = uxa for some u, s in S and a in R }."""
    ring = subset.ring
    return frozenset(
        x
        for x in ring.indices
        if any(
            ring.mul(u, s) == ring.mul(ring.mul(u, x), a)
            for u in subset.members
            for s in subset.members
            for a in ring.indices
        )
    )
