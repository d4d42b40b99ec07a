"""Product and idealization instances used by the transfer results."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .errors import ConstructionError
from .modules import (
    ModuleDescriptor,
    Submodule,
    full_submodule,
    ideal_times,
    product_module,
    submodule,
)
from .rings import (
    Ideal,
    MultClosedSet,
    RingDescriptor,
    ideal,
    idealization_ring,
    product_ring,
    validate_mult_closed,
)

__all__ = [
    "IdealizationInstance",
    "LiftMode",
    "ProductInstance",
    "idealization_instance",
    "idealize",
    "lift_ideal",
    "lift_multset",
    "product_ideal",
    "product_instance",
    "product_multset",
]


class LiftMode(str, Enum):
    """Second-coordinate policy for lifting S into R(+)M."""

    ZERO = 'zero'
    FULL = 'full'


@dataclass(frozen=True, slots=True)
class ProductInstance:
    ring: RingDescriptor
    module: ModuleDescriptor
    multset: MultClosedSet
    submodule: Submodule
    modules: tuple[ModuleDescriptor, ...]
    subsets: tuple[MultClosedSet, ...]
    submodules: tuple[Submodule, ...]


def _product_positions(
    target: RingDescriptor | ModuleDescriptor,
    factors: Sequence[RingDescriptor | ModuleDescriptor],
    members: Sequence[frozenset[int]],
) -> set[int]:
    return {
        target.index(tuple(f.encode(x) for f, x in zip(factors, combo, strict=True)))
        for combo in itertools.product(*(sorted(m) for m in members))
    }


def product_multset(subsets: Sequence[MultClosedSet]) -> MultClosedSet:
    """S_1 x ... x S_n inside the product ring."""
    rings = [subset.ring for subset in subsets]
    ring = product_ring(rings)
    return validate_mult_closed(
        ring, _product_positions(ring, rings, [s.elements for s in subsets])
    )


def product_ideal(ideals: Sequence[Ideal]) -> Ideal:
    """I_1 x ... x I_n inside the product ring."""
    rings = [part.ring for part in ideals]
    ring = product_ring(rings)
    return ideal(ring, _product_positions(ring, rings, [part.elements for part in ideals]))


def product_instance(
    modules: Sequence[ModuleDescriptor],
    subsets: Sequence[MultClosedSet],
    submodules: Sequence[Submodule],
) -> ProductInstance:
    """Assemble M_1 x ... x M_n with S_1 x ... x S_n and P_1 x ... x P_n."""
    if not len(modules) == len(subsets) == len(submodules):
        msg = (
            f'Component counts differ: {len(modules)} modules, {len(subsets)} sets, '
            f'{len(submodules)} submodules.'
        )
        raise ConstructionError(msg)
    if len(modules) < 2:  # noqa: PLR2004
        msg = 'A product instance needs at least two components.'
        raise ConstructionError(msg)
    for position, (module, subset, sub) in enumerate(
        zip(modules, subsets, submodules, strict=True), start=1
    ):
        if subset.ring != module.ring or sub.module != module:
            msg = f'Component {position} mixes structures over different rings or modules.'
            raise ConstructionError(msg)
    product = product_module(modules)
    multset = product_multset(subsets)
    members = _product_positions(product, modules, [sub.elements for sub in submodules])
    return ProductInstance(
        ring=product.ring,
        module=product,
        multset=multset,
        submodule=submodule(product, members),
        modules=tuple(modules),
        subsets=tuple(subsets),
        submodules=tuple(submodules),
    )


def idealize(ring: RingDescriptor, carrier: ModuleDescriptor) -> RingDescriptor:
    """R(+)M."""
    return idealization_ring(ring, carrier)


def lift_ideal(base_ideal: Ideal, sub: Submodule) -> Ideal:
    """p(+)N in R(+)M; requires pM inside N."""
    carrier = sub.module
    if not ideal_times(base_ideal, full_submodule(carrier)).issubset(sub):
        msg = f'{base_ideal}M is not contained in {sub}, so p(+)N is not an ideal.'
        raise ConstructionError(msg)
    base = base_ideal.ring
    ring = idealize(base, carrier)
    return ideal(
        ring,
        {
            ring.index((base.encode(a), carrier.encode(n)))
            for a in base_ideal.elements
            for n in sub.elements
        },
    )


def lift_multset(
    subset: MultClosedSet, carrier: ModuleDescriptor, mode: LiftMode | str = LiftMode.ZERO
) -> MultClosedSet:
    """S(+)0 = {(s, 0)} or S(+)M = {(s, m)}."""
    policy = LiftMode(mode)
    base = subset.ring
    ring = idealize(base, carrier)
    seconds = [carrier.zero] if policy is LiftMode.ZERO else list(carrier.indices)
    return validate_mult_closed(
        ring,
        {ring.index((base.encode(s), carrier.encode(m))) for s in subset.members for m in seconds},
    )


@dataclass(frozen=True, slots=True)
class IdealizationInstance:
    ring: RingDescriptor
    lifted_ideal: Ideal
    lifted_multset: MultClosedSet


def idealization_instance(
    base_ideal: Ideal, sub: Submodule, subset: MultClosedSet, mode: LiftMode | str
) -> IdealizationInstance:
    lifted = lift_ideal(base_ideal, sub)
    return IdealizationInstance(
        ring=lifted.ring,
        lifted_ideal=lifted,
        lifted_multset=lift_multset(subset, sub.module, mode),
    )
