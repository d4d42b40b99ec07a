"""JSON-safe payloads for rings, modules and elements.

Payloads are plain dicts/lists/ints so suite failures can be written to disk
and replayed. Tuples become lists on the way out and are restored on decode.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Any

from .errors import ConstructionError
from .localization import localize_module, localize_ring
from .modules import (
    CyclicZmod,
    DirectSum,
    ModuleDescriptor,
    ProductModule,
    QuotientModule,
    Regular,
    Submodule,
    SubmoduleAsModule,
    cyclic_module,
    direct_sum,
    product_module,
    quotient_module,
    regular_module,
    submodule,
    submodule_module,
)
from .rings import (
    Encoding,
    IdealizationOf,
    MultClosedSet,
    ProductOf,
    QuotientOf,
    RingDescriptor,
    Zmod,
    ideal,
    idealization_ring,
    product_ring,
    quotient_ring,
    validate_mult_closed,
    zmod,
)

__all__ = [
    "cached_module_from_payload",
    "decode_element",
    "encode_element",
    "module_from_payload",
    "module_payload",
    "multset_from_payload",
    "ring_from_payload",
    "ring_payload",
    "submodule_from_payload",
]

Payload = dict[str, Any]


def encode_element(encoding: Encoding) -> Any:  # noqa: ANN401
    if isinstance(encoding, tuple):
        return [encode_element(part) for part in encoding]
    return encoding


def decode_element(raw: Any) -> Encoding:  # noqa: ANN401
    if isinstance(raw, list | tuple):
        return tuple(decode_element(part) for part in raw)
    if isinstance(raw, bool) or not isinstance(raw, int):
        msg = f'Element literals must be integers or nested lists, got {raw!r}.'
        raise ConstructionError(msg)
    return raw


def _encode_positions(
    owner: RingDescriptor | ModuleDescriptor, positions: frozenset[int]
) -> list[Any]:
    return [encode_element(owner.encode(x)) for x in sorted(positions)]


def _decode_positions(owner: RingDescriptor | ModuleDescriptor, raw: list[Any]) -> set[int]:
    return {owner.index(decode_element(item)) for item in raw}


def ring_payload(ring: RingDescriptor) -> Payload:
    construction = ring.construction
    if isinstance(construction, Zmod):
        return {'zmod': construction.n}
    if isinstance(construction, ProductOf):
        return {'product': [ring_payload(part) for part in construction.components]}
    if isinstance(construction, QuotientOf):
        base = construction.base
        return {
            'quotient': {
                'base': ring_payload(base),
                'modulus': _encode_positions(base, construction.modulus),
            }
        }
    if isinstance(construction, IdealizationOf):
        return {
            'idealization': {
                'base': ring_payload(construction.base),
                'carrier': module_payload(construction.carrier),
            }
        }
    base = construction.base
    return {
        'localization': {
            'base': ring_payload(base),
            'set': _encode_positions(base, construction.denominators),
        }
    }


def module_payload(module: ModuleDescriptor) -> Payload:
    construction = module.construction
    if isinstance(construction, Regular):
        return {'regular': ring_payload(construction.ring)}
    if isinstance(construction, CyclicZmod):
        return {'cyclic': {'d': construction.d, 'ring': ring_payload(construction.ring)}}
    if isinstance(construction, ProductModule):
        return {'product': [module_payload(part) for part in construction.components]}
    if isinstance(construction, DirectSum):
        return {'sum': [module_payload(part) for part in construction.components]}
    if isinstance(construction, QuotientModule | SubmoduleAsModule):
        key = 'quotient' if isinstance(construction, QuotientModule) else 'sub'
        base = construction.base
        return {
            key: {
                'base': module_payload(base),
                'sub': _encode_positions(base, construction.sub),
            }
        }
    base = construction.base
    return {
        'localization': {
            'base': module_payload(base),
            'set': _encode_positions(base.ring, construction.denominators),
        }
    }


def _single_key(payload: Any, kinds: tuple[str, ...]) -> tuple[str, Any]:  # noqa: ANN401
    if not isinstance(payload, dict) or len(payload) != 1:
        msg = f'Expected a single-key construction payload, got {payload!r}.'
        raise ConstructionError(msg)
    ((kind, body),) = payload.items()
    if kind not in kinds:
        msg = f'Unknown construction {kind!r}; expected one of {", ".join(kinds)}.'
        raise ConstructionError(msg)
    return kind, body


def ring_from_payload(payload: Payload) -> RingDescriptor:
    kind, body = _single_key(
        payload, ('zmod', 'product', 'quotient', 'idealization', 'localization')
    )
    if kind == 'zmod':
        return zmod(int(body))
    if kind == 'product':
        return product_ring([ring_from_payload(part) for part in body])
    base = ring_from_payload(body['base'])
    if kind == 'quotient':
        return quotient_ring(base, ideal(base, _decode_positions(base, body['modulus'])))
    if kind == 'idealization':
        return idealization_ring(base, module_from_payload(body['carrier']))
    return localize_ring(validate_mult_closed(base, _decode_positions(base, body['set']))).ring


def module_from_payload(payload: Payload) -> ModuleDescriptor:
    kind, body = _single_key(
        payload, ('regular', 'cyclic', 'product', 'sum', 'quotient', 'sub', 'localization')
    )
    if kind == 'regular':
        return regular_module(ring_from_payload(body))
    if kind == 'cyclic':
        return cyclic_module(int(body['d']), ring_from_payload(body['ring']))
    if kind == 'product':
        return product_module([module_from_payload(part) for part in body])
    if kind == 'sum':
        return direct_sum([module_from_payload(part) for part in body])
    base = module_from_payload(body['base'])
    if kind == 'localization':
        subset = validate_mult_closed(base.ring, _decode_positions(base.ring, body['set']))
        return localize_module(base, subset).module
    sub = submodule(base, _decode_positions(base, body['sub']))
    if kind == 'quotient':
        return quotient_module(base, sub)[0]
    return submodule_module(sub)[0]


def multset_from_payload(ring: RingDescriptor, raw: list[Any]) -> MultClosedSet:
    return validate_mult_closed(ring, _decode_positions(ring, raw))


def submodule_from_payload(module: ModuleDescriptor, raw: list[Any]) -> Submodule:
    return submodule(module, _decode_positions(module, raw))


@lru_cache(maxsize=1024)
def _cached_module(text: str) -> ModuleDescriptor:
    return module_from_payload(json.loads(text))


def cached_module_from_payload(payload: Payload) -> ModuleDescriptor:
    """Decode through a cache keyed by the canonical JSON text."""
    return _cached_module(json.dumps(payload, sort_keys=True))
