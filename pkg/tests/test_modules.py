"""Tests for modules, submodule lattices, colons and homomorphisms."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

try:
    from finalg.errors import (
        AxiomViolationError,
        CapExceededError,
        ConstructionError,
        NotMaximalError,
    )
    from finalg.modules import (
        ModuleDescriptor,
        annihilator,
        colon_m,
        cyclic_module,
        direct_sum,
        enumerate_homs,
        enumerate_submodules,
        full_submodule,
        generated_submodule,
        hom_image,
        hom_kernel,
        hom_preimage,
        is_faithful,
        is_multiplication,
        is_p_cyclic,
        module_hom,
        prime_submodules,
        product_module,
        quotient_module,
        rad_submodule,
        regular_module,
        submodule,
        submodule_module,
        submodule_product,
        t_p,
        zero_submodule,
    )
    from finalg.rings import principal_ideal, product_ring, zero_ideal, zmod
    from finalg.settings import Limits, use_limits
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.errors import (
        AxiomViolationError,
        CapExceededError,
        ConstructionError,
        NotMaximalError,
    )
    from finalg.modules import (
        ModuleDescriptor,
        annihilator,
        colon_m,
        cyclic_module,
        direct_sum,
        enumerate_homs,
        enumerate_submodules,
        full_submodule,
        generated_submodule,
        hom_image,
        hom_kernel,
        hom_preimage,
        is_faithful,
        is_multiplication,
        is_p_cyclic,
        module_hom,
        prime_submodules,
        product_module,
        quotient_module,
        rad_submodule,
        regular_module,
        submodule,
        submodule_module,
        submodule_product,
        t_p,
        zero_submodule,
    )
    from finalg.rings import principal_ideal, product_ring, zero_ideal, zmod
    from finalg.settings import Limits, use_limits


def test_cyclic_module_requires_divisor() -> None:
    """Z/3 is not a Z/4-module."""
    with pytest.raises(ConstructionError):
        cyclic_module(3, zmod(4))
    with pytest.raises(ConstructionError):
        cyclic_module(2, product_ring([zmod(2), zmod(2)]))


def test_cyclic_module_of_order_one_is_zero() -> None:
    """Z/1 is the zero module, whose only submodule is not proper."""
    module = cyclic_module(1, zmod(4))
    assert module.size == 1
    (only,) = enumerate_submodules(module)
    assert not only.is_proper


def test_submodule_validation() -> None:
    """Subsets that are not closed under the action are rejected."""
    module = regular_module(zmod(4))
    with pytest.raises(AxiomViolationError):
        submodule(module, {0, 1})
    assert submodule(module, {0, 2}).encodings() == (0, 2)
    assert generated_submodule(module, {2}).encodings() == (0, 2)


def test_submodule_lattice_of_regular_z6() -> None:
    """Submodules of a regular module are its ideals."""
    lattice = enumerate_submodules(regular_module(zmod(6)))
    assert [s.encodings() for s in lattice] == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]


def test_annihilator_and_faithfulness() -> None:
    """Z/2 over Z/4 is killed by 2; the regular module is faithful."""
    ring = zmod(4)
    assert annihilator(cyclic_module(2, ring)).encodings() == (0, 2)
    assert not is_faithful(cyclic_module(2, ring))
    assert is_faithful(regular_module(ring))


def test_module_colon() -> None:
    """(0 :_M 2) in Z/4 is the socle (2)."""
    module = regular_module(zmod(4))
    zero = zero_submodule(module)
    assert colon_m(zero, 2).encodings() == (0, 2)
    assert colon_m(zero, zero_ideal(module.ring)) == full_submodule(module)


def test_cyclic_modules_are_multiplication_modules() -> None:
    """Every submodule of a cyclic module has the form IM."""
    assert is_multiplication(regular_module(zmod(6))).holds
    assert is_multiplication(cyclic_module(4, zmod(8))).holds


def test_product_of_submodules() -> None:
    """(2)(2) = (4) inside Z/8."""
    module = regular_module(zmod(8))
    two = submodule(module, {0, 2, 4, 6})
    assert submodule_product(two, two).encodings() == (0, 4)


def test_prime_submodules_and_radical() -> None:
    """In Z/4 the only prime submodule is (2), so rad(0) = (2)."""
    module = regular_module(zmod(4))
    assert [p.encodings() for p in prime_submodules(module)] == [(0, 2)]
    assert rad_submodule(zero_submodule(module)).encodings() == (0, 2)
    assert rad_submodule(full_submodule(module)) == full_submodule(module)


def test_local_submodule_at_a_maximal_ideal() -> None:
    """T_(2) of Z/6 is (2), and Z/6 is (2)-cyclic with the least witness (0, 1)."""
    ring = zmod(6)
    module = regular_module(ring)
    two = principal_ideal(ring, 2)
    assert t_p(module, two).encodings() == (0, 2, 4)
    verdict = is_p_cyclic(module, two)
    assert verdict.holds
    assert verdict.witness == (0, 1)


def test_local_criteria_require_maximal_ideal() -> None:
    """Non-maximal ideals are refused."""
    ring = zmod(6)
    with pytest.raises(NotMaximalError):
        t_p(regular_module(ring), zero_ideal(ring))
    with pytest.raises(NotMaximalError):
        is_p_cyclic(regular_module(ring), zero_ideal(ring))


def test_quotient_module_projection() -> None:
    """Z/4 / (2) has two elements and the projection reduces mod 2."""
    module = regular_module(zmod(4))
    quotient, projection = quotient_module(module, submodule(module, {0, 2}))
    assert quotient.size == 2
    assert projection.table == (0, 1, 0, 1)
    assert projection.is_epimorphism
    assert hom_kernel(projection).encodings() == (0, 2)


def test_submodule_as_module_inclusion() -> None:
    """The inclusion of (2) into Z/4 is injective with image (2)."""
    module = regular_module(zmod(4))
    sub = submodule(module, {0, 2})
    inner, inclusion = submodule_module(sub)
    assert inner.size == 2
    assert hom_image(inclusion, full_submodule(inner)) == sub


def test_homomorphism_enumeration() -> None:
    """Hom(Z/4, Z/2) and Hom(Z/2, Z/4) both have two elements."""
    ring = zmod(4)
    onto = enumerate_homs(regular_module(ring), cyclic_module(2, ring))
    assert [f.table for f in onto] == [(0, 0, 0, 0), (0, 1, 0, 1)]
    into = enumerate_homs(cyclic_module(2, ring), regular_module(ring))
    assert [f.table for f in into] == [(0, 0), (0, 2)]


def test_module_hom_rejects_non_additive_table() -> None:
    """Tables that break additivity are reported with the failing pair."""
    module = regular_module(zmod(4))
    with pytest.raises(AxiomViolationError) as info:
        module_hom(module, module, (0, 1, 1, 1))
    assert info.value.axiom == 'f(x + y) = f(x) + f(y)'


def test_product_module_over_product_ring() -> None:
    """Z/2 x Z/3 as a module over Z/2 x Z/3 has six elements."""
    module = product_module([regular_module(zmod(2)), regular_module(zmod(3))])
    assert module.size == 6
    assert module.ring == product_ring([zmod(2), zmod(3)])
    assert len(enumerate_submodules(module)) == 4


@pytest.fixture(name='klein')
def fixture_klein() -> ModuleDescriptor:
    """Z/2 (+) Z/2 as a module over Z/2."""
    ring = zmod(2)
    return direct_sum([regular_module(ring), cyclic_module(2, ring)])


def test_direct_sum_stays_over_the_common_ring(klein: ModuleDescriptor) -> None:
    """A direct sum keeps the ring of its summands and multiplies sizes."""
    assert klein.size == 4
    assert klein.ring == zmod(2)
    assert klein.elements == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert len(enumerate_submodules(klein)) == 5


def test_direct_sum_rejects_mixed_rings() -> None:
    """Summands over different rings, or a lone summand, are refused."""
    with pytest.raises(ConstructionError):
        direct_sum([regular_module(zmod(2)), regular_module(zmod(4))])
    with pytest.raises(ConstructionError):
        direct_sum([regular_module(zmod(2))])


def test_non_cyclic_direct_sum_is_not_multiplication(klein: ModuleDescriptor) -> None:
    """Over a field, the diagonal of Z/2 (+) Z/2 is not of the form IM."""
    verdict = is_multiplication(klein)
    assert not verdict.holds
    assert verdict.counterexample is not None
    assert verdict.counterexample.encodings() == ((0, 0), (1, 1))
    assert is_faithful(klein)


def test_direct_sum_over_local_ring_is_not_multiplication() -> None:
    """Z/2 (+) Z/4 over the local ring Z/4 is not cyclic, hence not multiplication."""
    ring = zmod(4)
    module = direct_sum([cyclic_module(2, ring), regular_module(ring)])
    assert module.size == 8
    verdict = is_multiplication(module)
    assert not verdict.holds
    assert verdict.counterexample is not None
    assert verdict.counterexample.is_proper


def test_non_cyclic_direct_sum_is_not_p_cyclic(klein: ModuleDescriptor) -> None:
    """With p = (0) in Z/2 the criterion asks for M = Rm, which fails."""
    verdict = is_p_cyclic(klein, zero_ideal(zmod(2)))
    assert not verdict.holds
    assert verdict.witness is None


def test_multiplication_check_respects_cap_after_caching(klein: ModuleDescriptor) -> None:
    """A verdict computed once is still refused under a smaller enumeration cap."""
    assert not is_multiplication(klein).holds
    with use_limits(Limits(enumeration_cap=3)), pytest.raises(CapExceededError):
        is_multiplication(klein)


def test_hom_image_and_preimage_reject_foreign_submodules() -> None:
    """Submodules must belong to the domain (image) or the codomain (preimage)."""
    module = regular_module(zmod(4))
    inner, inclusion = submodule_module(submodule(module, {0, 2}))
    with pytest.raises(ConstructionError, match='domain'):
        hom_image(inclusion, full_submodule(module))
    with pytest.raises(ConstructionError, match='codomain'):
        hom_preimage(inclusion, full_submodule(inner))
    assert hom_preimage(inclusion, full_submodule(module)) == full_submodule(inner)
