"""Deterministic instance families for the property suites.

Instances are JSON-safe payloads (see :mod:`finalg.codec`) so they can be sent
to worker processes, written into reports and replayed later.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Any

from finalg.codec import encode_element, module_payload, ring_payload
from finalg.modules import (
    ModuleDescriptor,
    cyclic_module,
    direct_sum,
    enumerate_homs,
    enumerate_submodules,
    regular_module,
)
from finalg.rings import (
    Ideal,
    MultClosedSet,
    RingDescriptor,
    Zmod,
    enumerate_ideals,
    enumerate_mult_closed,
    idealization_ring,
    product_ring,
    zmod,
)

__all__ = [
    "FamilyMode",
    "InstanceFamily",
    "Payload",
    "RingVariant",
    "family_modules",
    "family_rings",
    "hom_instances",
    "idealization_ideal_instances",
    "idealization_instances",
    "ideal_encodings",
    "module_instances",
    "module_set_instances",
    "prime_field_instances",
    "product_ideal_instances",
    "product_instances",
    "product_ring_instances",
    "ring_instances",
    "set_instances",
    "submodule_instances",
    "triple_instances",
]

Payload = dict[str, Any]

PRODUCT_COMPONENT_BOUND = 4
THREEFOLD_COMPONENT_BOUND = 3
IDEALIZATION_BASE_BOUND = 4


class FamilyMode(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    SAMPLED = 'sampled'


class RingVariant(str, Enum):
    ZMOD = 'zmod'
    PRODUCT = 'product'
    IDEALIZATION = 'idealization'


@dataclass(frozen=True, slots=True)
class InstanceFamily:
    """Generator parameters for one suite run."""

    name: str = 'default'
    max_ring: int = 8
    max_module: int = 8
    ring_variants: tuple[RingVariant, ...] = (RingVariant.ZMOD,)
    mode: FamilyMode = FamilyMode.EXHAUSTIVE
    seed: int = 0
    samples: int = 200

    def as_dict(self) -> Payload:
        return {
            'name': self.name,
            'max_ring': self.max_ring,
            'max_module': self.max_module,
            'ring_variants': [variant.value for variant in self.ring_variants],
            'mode': self.mode.value,
            'seed': self.seed,
            'samples': self.samples,
        }


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def family_rings(family: InstanceFamily) -> Iterator[RingDescriptor]:
    """Rings in canonical order: Z/n first, then products, then idealizations."""
    if RingVariant.ZMOD in family.ring_variants:
        for n in range(2, family.max_ring + 1):
            yield zmod(n)
    if RingVariant.PRODUCT in family.ring_variants:
        for a, b in itertools.product(range(2, family.max_ring + 1), repeat=2):
            if a * b <= family.max_ring:
                yield product_ring([zmod(a), zmod(b)])
    if RingVariant.IDEALIZATION in family.ring_variants:
        for n in range(2, family.max_ring + 1):
            for d in _divisors(n):
                if d > 1 and n * d <= family.max_ring:
                    yield idealization_ring(zmod(n), cyclic_module(d, zmod(n)))


def family_modules(
    ring: RingDescriptor, family: InstanceFamily, *, cyclic_first: bool = False
) -> Iterator[ModuleDescriptor]:
    """Regular module, then Z/d over Z/n for every divisor d, then non-cyclic Z/a (+) Z/b.

    ``cyclic_first`` lists the Z/d modules ahead of the regular one.
    """
    regular = [regular_module(ring)] if ring.size <= family.max_module else []
    construction = ring.construction
    if not isinstance(construction, Zmod):
        yield from regular
        return
    divisors = _divisors(construction.n)
    cyclic = [cyclic_module(d, ring) for d in divisors if d <= family.max_module]
    yield from (cyclic + regular) if cyclic_first else (regular + cyclic)
    for a, b in itertools.combinations_with_replacement(divisors[1:], 2):
        if math.gcd(a, b) > 1 and a * b <= family.max_module:
            yield direct_sum([cyclic_module(a, ring), cyclic_module(b, ring)])


def _positions(owner: RingDescriptor | ModuleDescriptor, members: frozenset[int]) -> list[Any]:
    return [encode_element(owner.encode(x)) for x in sorted(members)]


def ideal_encodings(target: Ideal) -> list[Any]:
    return _positions(target.ring, target.elements)


def _set_encodings(subset: MultClosedSet) -> list[Any]:
    return _positions(subset.ring, subset.elements)


def ring_instances(family: InstanceFamily) -> Iterator[Payload]:
    for ring in family_rings(family):
        yield {'ring': ring_payload(ring)}


def set_instances(family: InstanceFamily) -> Iterator[Payload]:
    for ring in family_rings(family):
        for subset in enumerate_mult_closed(ring):
            yield {'ring': ring_payload(ring), 'set': _set_encodings(subset)}


def module_instances(family: InstanceFamily) -> Iterator[Payload]:
    for ring in family_rings(family):
        for module in family_modules(ring, family):
            yield {'module': module_payload(module)}


def module_set_instances(family: InstanceFamily) -> Iterator[Payload]:
    for ring in family_rings(family):
        subsets = enumerate_mult_closed(ring)
        for module in family_modules(ring, family):
            for subset in subsets:
                yield {'module': module_payload(module), 'set': _set_encodings(subset)}


def submodule_instances(family: InstanceFamily) -> Iterator[Payload]:
    for ring in family_rings(family):
        for module in family_modules(ring, family):
            encoded = module_payload(module)
            for sub in enumerate_submodules(module):
                yield {'module': encoded, 'sub': _positions(module, sub.elements)}


def triple_instances(
    family: InstanceFamily, *, cyclic_first: bool = False
) -> Iterator[Payload]:
    """(M, P, S) in canonical order: ring, module, submodule, then set."""
    for ring in family_rings(family):
        subsets = enumerate_mult_closed(ring)
        for module in family_modules(ring, family, cyclic_first=cyclic_first):
            encoded = module_payload(module)
            for sub in enumerate_submodules(module):
                members = _positions(module, sub.elements)
                for subset in subsets:
                    yield {'module': encoded, 'sub': members, 'set': _set_encodings(subset)}


def hom_instances(family: InstanceFamily) -> Iterator[Payload]:
    """Every validated homomorphism between family modules, paired with every set."""
    for ring in family_rings(family):
        subsets = enumerate_mult_closed(ring)
        modules = list(family_modules(ring, family))
        for domain, codomain in itertools.product(modules, repeat=2):
            for hom in enumerate_homs(domain, codomain):
                images = [encode_element(codomain.encode(v)) for v in hom.table]
                for subset in subsets:
                    yield {
                        'domain': module_payload(domain),
                        'codomain': module_payload(codomain),
                        'map': images,
                        'set': _set_encodings(subset),
                    }


def _component_bound(family: InstanceFamily, cap: int) -> int:
    return min(cap, family.max_ring)


def product_ideal_instances(family: InstanceFamily) -> Iterator[Payload]:
    """Pairs (p_i, S_i) over Z/a x Z/b."""
    bound = _component_bound(family, PRODUCT_COMPONENT_BOUND)
    for a, b in itertools.product(range(2, bound + 1), repeat=2):
        rings = (zmod(a), zmod(b))
        choices = [
            [
                {'ring': ring_payload(ring), 'ideal': ideal_encodings(p), 'set': _set_encodings(s)}
                for p in enumerate_ideals(ring)
                for s in enumerate_mult_closed(ring)
            ]
            for ring in rings
        ]
        for left, right in itertools.product(*choices):
            yield {'components': [left, right]}


def _component_choices(ring: RingDescriptor, *, regular_only: bool) -> list[Payload]:
    modules = [regular_module(ring)]
    construction = ring.construction
    if not regular_only and isinstance(construction, Zmod):
        modules += [cyclic_module(d, ring) for d in _divisors(construction.n) if 1 < d < ring.size]
    return [
        {
            'module': module_payload(module),
            'sub': _positions(module, sub.elements),
            'set': _set_encodings(subset),
        }
        for module in modules
        for sub in enumerate_submodules(module)
        for subset in enumerate_mult_closed(ring)
    ]


def product_instances(family: InstanceFamily, factors: int = 2) -> Iterator[Payload]:
    """Componentwise (M_i, P_i, S_i); three factors use regular modules over tiny rings."""
    if factors == 2:  # noqa: PLR2004
        bound = _component_bound(family, PRODUCT_COMPONENT_BOUND)
        regular_only = False
    else:
        bound = _component_bound(family, THREEFOLD_COMPONENT_BOUND)
        regular_only = True
    for sizes in itertools.product(range(2, bound + 1), repeat=factors):
        choices = [_component_choices(zmod(n), regular_only=regular_only) for n in sizes]
        for combo in itertools.product(*choices):
            yield {'components': list(combo)}


def idealization_instances(family: InstanceFamily) -> Iterator[Payload]:
    """(Z/n, Z/d, p, S) for the idealization Z/n(+)Z/d."""
    bound = _component_bound(family, IDEALIZATION_BASE_BOUND)
    for n in range(2, bound + 1):
        ring = zmod(n)
        for d in _divisors(n):
            if d == 1:
                continue
            carrier = cyclic_module(d, ring)
            for p in enumerate_ideals(ring):
                for subset in enumerate_mult_closed(ring):
                    yield {
                        'ring': ring_payload(ring),
                        'carrier': module_payload(carrier),
                        'ideal': ideal_encodings(p),
                        'set': _set_encodings(subset),
                    }


def _is_prime_number(n: int) -> bool:
    return n > 1 and all(n % k for k in range(2, int(n**0.5) + 1))


def prime_field_instances(family: InstanceFamily) -> Iterator[Payload]:
    """Nonzero modules over Z/p for primes p within the ring bound."""
    for p in range(2, family.max_ring + 1):
        if _is_prime_number(p):
            ring = zmod(p)
            for module in (regular_module(ring), cyclic_module(p, ring)):
                yield {'module': module_payload(module)}


def product_ring_instances(family: InstanceFamily) -> Iterator[Payload]:
    """Z/a x Z/b with both factors inside the product component bound."""
    bound = _component_bound(family, PRODUCT_COMPONENT_BOUND)
    for a, b in itertools.product(range(2, bound + 1), repeat=2):
        yield {'ring': ring_payload(product_ring([zmod(a), zmod(b)]))}


def idealization_ideal_instances(family: InstanceFamily) -> Iterator[Payload]:
    """(Z/n, Z/d, I) for every ideal I of the base ring."""
    bound = _component_bound(family, IDEALIZATION_BASE_BOUND)
    for n in range(2, bound + 1):
        ring = zmod(n)
        for d in _divisors(n):
            if d == 1:
                continue
            carrier = module_payload(cyclic_module(d, ring))
            for p in enumerate_ideals(ring):
                yield {'ring': ring_payload(ring), 'carrier': carrier, 'ideal': ideal_encodings(p)}
