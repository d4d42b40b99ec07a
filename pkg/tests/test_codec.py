"""Tests for the JSON payload codec used by suite failures and replays."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

try:
    from finalg.codec import (
        cached_module_from_payload,
        decode_element,
        encode_element,
        module_from_payload,
        module_payload,
        multset_from_payload,
        ring_from_payload,
        ring_payload,
        submodule_from_payload,
    )
    from finalg.errors import AxiomViolationError, ConstructionError
    from finalg.modules import (
        cyclic_module,
        direct_sum,
        quotient_module,
        regular_module,
        submodule,
    )
    from finalg.rings import principal_ideal, product_ring, quotient_ring, zmod
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.codec import (
        cached_module_from_payload,
        decode_element,
        encode_element,
        module_from_payload,
        module_payload,
        multset_from_payload,
        ring_from_payload,
        ring_payload,
        submodule_from_payload,
    )
    from finalg.errors import AxiomViolationError, ConstructionError
    from finalg.modules import (
        cyclic_module,
        direct_sum,
        quotient_module,
        regular_module,
        submodule,
    )
    from finalg.rings import principal_ideal, product_ring, quotient_ring, zmod


def test_element_encoding_uses_lists() -> None:
    """Tuples become lists for JSON and come back as tuples."""
    assert encode_element((1, (2, 3))) == [1, [2, 3]]
    assert decode_element([1, [2, 3]]) == (1, (2, 3))
    assert decode_element(4) == 4


@pytest.mark.parametrize('raw', [True, 'one', 1.5, None])
def test_decode_element_rejects_non_integers(raw: object) -> None:
    """Booleans, strings and floats are not element literals."""
    with pytest.raises(ConstructionError):
        decode_element(raw)


def test_ring_payload_shapes() -> None:
    """Payloads mirror the construction tree."""
    assert ring_payload(zmod(4)) == {'zmod': 4}
    product = product_ring([zmod(2), zmod(3)])
    assert ring_payload(product) == {'product': [{'zmod': 2}, {'zmod': 3}]}
    assert ring_from_payload(ring_payload(product)) == product
    quotient = quotient_ring(zmod(8), principal_ideal(zmod(8), 4))
    assert ring_payload(quotient) == {'quotient': {'base': {'zmod': 8}, 'modulus': [0, 4]}}
    assert ring_from_payload(ring_payload(quotient)) == quotient


def test_module_payload_shapes() -> None:
    """Cyclic and quotient modules decode to equal descriptors."""
    cyclic = cyclic_module(2, zmod(4))
    assert module_payload(cyclic) == {'cyclic': {'d': 2, 'ring': {'zmod': 4}}}
    base = regular_module(zmod(4))
    quotient, _ = quotient_module(base, submodule(base, {0, 2}))
    assert module_from_payload(module_payload(quotient)) == quotient
    assert cached_module_from_payload(module_payload(quotient)) == quotient


def test_payload_survives_json_text() -> None:
    """A payload written as JSON text decodes to the same module."""
    module = regular_module(product_ring([zmod(2), zmod(2)]))
    text = json.dumps(module_payload(module))
    assert module_from_payload(json.loads(text)) == module


def test_direct_sum_payload_names_its_summands() -> None:
    """A direct sum over one ring is written as a list of summands."""
    ring = zmod(4)
    module = direct_sum([cyclic_module(2, ring), regular_module(ring)])
    payload = module_payload(module)
    assert payload == {
        'sum': [{'cyclic': {'d': 2, 'ring': {'zmod': 4}}}, {'regular': {'zmod': 4}}]
    }
    assert module_from_payload(payload) == module
    with pytest.raises(ConstructionError):
        module_from_payload({'sum': [{'regular': {'zmod': 2}}, {'regular': {'zmod': 4}}]})


@pytest.mark.parametrize(
    'payload',
    [{'bogus': 1}, {'zmod': 4, 'product': []}, [4]],
)
def test_malformed_ring_payload(payload: object) -> None:
    """Unknown kinds and multi-key payloads are rejected."""
    with pytest.raises(ConstructionError):
        ring_from_payload(payload)  # type: ignore[arg-type]


def test_sets_and_submodules_are_validated_on_decode() -> None:
    """Decoded sets and submodules go through the usual validation."""
    ring = zmod(6)
    assert multset_from_payload(ring, [1, 3]).encodings() == (1, 3)
    with pytest.raises(AxiomViolationError):
        multset_from_payload(ring, [1, 2])
    module = regular_module(ring)
    assert submodule_from_payload(module, [0, 3]).encodings() == (0, 3)
