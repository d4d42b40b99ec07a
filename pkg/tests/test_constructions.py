"""Tests for product and idealization instances."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

try:
    from finalg.classify import is_s_primary, is_s_primary_ideal
    from finalg.constructions import (
        LiftMode,
        idealization_instance,
        lift_ideal,
        lift_multset,
        product_ideal,
        product_instance,
        product_multset,
    )
    from finalg.errors import ConstructionError
    from finalg.modules import cyclic_module, full_submodule, regular_module, zero_submodule
    from finalg.rings import principal_ideal, unit_ideal, validate_mult_closed, zmod
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.classify import is_s_primary, is_s_primary_ideal
    from finalg.constructions import (
        LiftMode,
        idealization_instance,
        lift_ideal,
        lift_multset,
        product_ideal,
        product_instance,
        product_multset,
    )
    from finalg.errors import ConstructionError
    from finalg.modules import cyclic_module, full_submodule, regular_module, zero_submodule
    from finalg.rings import principal_ideal, unit_ideal, validate_mult_closed, zmod


def test_product_multset_and_ideal() -> None:
    """Products are formed componentwise."""
    subsets = [validate_mult_closed(zmod(2), {1}), validate_mult_closed(zmod(3), {1, 2})]
    assert product_multset(subsets).encodings() == ((1, 1), (1, 2))
    ideals = [principal_ideal(zmod(2), 0), unit_ideal(zmod(3))]
    assert product_ideal(ideals).encodings() == ((0, 0), (0, 1), (0, 2))


def test_product_instance_assembles_all_three() -> None:
    """(0) x Z/3 is S-primary in Z/2 x Z/3 when the second set meets Z/3."""
    first, second = regular_module(zmod(2)), regular_module(zmod(3))
    instance = product_instance(
        [first, second],
        [validate_mult_closed(zmod(2), {1}), validate_mult_closed(zmod(3), {1})],
        [zero_submodule(first), full_submodule(second)],
    )
    assert instance.module.size == 6
    assert len(instance.submodule) == 3
    assert is_s_primary(instance.submodule, instance.multset).holds


def test_product_instance_validates_shape() -> None:
    """Mismatched counts, a single factor and mixed rings are refused."""
    module = regular_module(zmod(2))
    subset = validate_mult_closed(zmod(2), {1})
    zero = zero_submodule(module)
    with pytest.raises(ConstructionError, match='Component counts differ'):
        product_instance([module, module], [subset], [zero, zero])
    with pytest.raises(ConstructionError, match='at least two'):
        product_instance([module], [subset], [zero])
    with pytest.raises(ConstructionError, match='different rings'):
        product_instance(
            [module, regular_module(zmod(3))],
            [subset, subset],
            [zero, zero_submodule(regular_module(zmod(3)))],
        )


def test_lift_ideal_requires_pm_inside_n() -> None:
    """p(+)N is an ideal only when pM lies in N."""
    ring = zmod(4)
    carrier = cyclic_module(2, ring)
    two = principal_ideal(ring, 2)
    assert len(lift_ideal(two, zero_submodule(carrier))) == 2
    assert len(lift_ideal(two, full_submodule(carrier))) == 4
    with pytest.raises(ConstructionError):
        lift_ideal(unit_ideal(ring), zero_submodule(carrier))


@pytest.mark.parametrize(('mode', 'size'), [(LiftMode.ZERO, 2), ('full', 4)])
def test_lift_multset_modes(mode: LiftMode | str, size: int) -> None:
    """S(+)0 keeps |S| elements while S(+)M has |S||M|."""
    ring = zmod(4)
    lifted = lift_multset(validate_mult_closed(ring, {1, 3}), cyclic_module(2, ring), mode)
    assert len(lifted) == size


def test_idealization_instance_is_s_primary() -> None:
    """(2)(+)Z/2 is primary in Z/4(+)Z/2, so it is S(+)0-primary too."""
    ring = zmod(4)
    carrier = cyclic_module(2, ring)
    instance = idealization_instance(
        principal_ideal(ring, 2),
        full_submodule(carrier),
        validate_mult_closed(ring, {1, 3}),
        LiftMode.ZERO,
    )
    assert instance.ring.size == 8
    verdict = is_s_primary_ideal(instance.lifted_ideal, instance.lifted_multset)
    assert verdict.holds
    assert verdict.witness == instance.ring.one
