"""Tests for rings and modules of fractions and for saturation."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

try:
    from finalg.classify import is_primary_submodule
    from finalg.errors import ConstructionError
    from finalg.localization import (
        localize_module,
        localize_ring,
        localize_submodule,
        saturate,
        saturation_by_membership,
    )
    from finalg.modules import regular_module, zero_submodule
    from finalg.rings import validate_mult_closed, zmod
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.classify import is_primary_submodule
    from finalg.errors import ConstructionError
    from finalg.localization import (
        localize_module,
        localize_ring,
        localize_submodule,
        saturate,
        saturation_by_membership,
    )
    from finalg.modules import regular_module, zero_submodule
    from finalg.rings import validate_mult_closed, zmod


def test_localizing_z6_at_three_gives_two_elements() -> None:
    """Inverting 3 in Z/6 kills the 3-torsion and leaves Z/2."""
    localized = localize_ring(validate_mult_closed(zmod(6), {1, 3}))
    assert localized.ring.size == 2
    assert localized.fraction_map[0] == localized.ring.zero
    assert localized.fraction_map[2] == localized.ring.zero
    assert localized.fraction_map[1] == localized.ring.one
    assert localized.fraction(3, 3) == localized.ring.one


def test_localizing_at_units_changes_nothing() -> None:
    """Units are already invertible."""
    localized = localize_ring(validate_mult_closed(zmod(6), {1, 5}))
    assert localized.ring.size == 6
    assert len(set(localized.fraction_map)) == 6


def test_saturation_of_z6() -> None:
    """{1, 3} saturates to the odd residues."""
    subset = validate_mult_closed(zmod(6), {1, 3})
    assert saturate(subset).encodings() == (1, 3, 5)
    assert saturation_by_membership(subset) == frozenset({1, 3, 5})


def test_saturation_of_trivial_set_is_the_units() -> None:
    """S = {1} saturates to u(R)."""
    subset = validate_mult_closed(zmod(4), {1})
    assert saturate(subset).encodings() == (1, 3)
    assert saturation_by_membership(subset) == frozenset({1, 3})


def test_localized_submodule_is_primary() -> None:
    """(0) in Z/6 localizes to the zero submodule of a field."""
    ring = zmod(6)
    subset = validate_mult_closed(ring, {1, 3})
    localized, image = localize_submodule(zero_submodule(regular_module(ring)), subset)
    assert localized.module.size == 2
    assert len(image) == 1
    assert image.is_proper
    assert is_primary_submodule(image)


def test_localized_module_fraction_map() -> None:
    """m/1 respects addition."""
    ring = zmod(6)
    module = regular_module(ring)
    localized = localize_module(module, validate_mult_closed(ring, {1, 3}))
    target = localized.module
    for m in module.indices:
        for n in module.indices:
            total = localized.fraction_map[module.add(m, n)]
            assert total == target.add(localized.fraction_map[m], localized.fraction_map[n])


def test_localize_module_rejects_foreign_set() -> None:
    """The set must live in the module's ring."""
    with pytest.raises(ConstructionError):
        localize_module(regular_module(zmod(4)), validate_mult_closed(zmod(6), {1}))
