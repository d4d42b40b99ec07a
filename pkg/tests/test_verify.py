"""Tests for the property registry, suite runner and separation search."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

try:
    from finalg.codec import ring_from_payload
    from finalg.errors import ConstructionError, UnknownPropertyError, UnknownTargetError
    from finalg.modules import cyclic_module, direct_sum, is_multiplication, regular_module
    from finalg.rings import zmod
    from finalg.verify import (
        ALIASES,
        REGISTRY,
        FamilyMode,
        InstanceFamily,
        Property,
        RingVariant,
        SearchBounds,
        SeparationTarget,
        get_property,
        property_names,
        replay,
        revalidate,
        run_suite,
        search_separation,
    )
    from finalg.verify.families import Payload, family_modules, ring_instances, triple_instances
    from finalg.verify.properties import register
except ModuleNotFoundError:  # pragma: no cover - allow running tests without install
    sys.path.append(str(Path(__file__).resolve().parent.parent / 'src'))
    from finalg.codec import ring_from_payload
    from finalg.errors import ConstructionError, UnknownPropertyError, UnknownTargetError
    from finalg.modules import cyclic_module, direct_sum, is_multiplication, regular_module
    from finalg.rings import zmod
    from finalg.verify import (
        ALIASES,
        REGISTRY,
        FamilyMode,
        InstanceFamily,
        Property,
        RingVariant,
        SearchBounds,
        SeparationTarget,
        get_property,
        property_names,
        replay,
        revalidate,
        run_suite,
        search_separation,
    )
    from finalg.verify.families import Payload, family_modules, ring_instances, triple_instances
    from finalg.verify.properties import register

SMALL = InstanceFamily(name='small', max_ring=4, max_module=4)
MEDIUM = InstanceFamily(name='medium', max_ring=6, max_module=6)

CORE_PROPERTIES = (
    'primary-vs-s-primary',
    's-primary-equivalent-forms',
    's-prime-implies-s-primary',
    's-primary-widening',
    's-primary-saturation',
    'localization-preserves-primary',
    'localization-characterization',
    'primary-colon-witness',
    'colon-witness-maximal',
    'preimage-transfer',
    'image-transfer',
    'hom-image-preimage',
    'intersection-transfer',
    'quotient-transfer',
    'colon-ideal-transfer',
    'colon-ideal-lift',
    'multiplication-characterization',
    'product-form',
    'radical-product-form',
    'intersection-splitting',
    'faithful-fixed-witness',
    'multiplication-local-criterion',
    'multiplication-radical',
    'ideal-product-split',
    'module-product-split',
    'threefold-product-split',
    'jacobson-characterization',
    'quasi-local-characterization',
    'idealization-primary',
    'idealization-s-primary',
    'idealization-radical',
    'torsion-free-quotient',
    'quasi-torsion-free-quotient',
    'domain-torsion-free',
)

STRUCTURAL_PROPERTIES = (
    'ring-axioms',
    'radical-laws',
    'product-ideal-lattice',
    'colon-adjunction',
    'rad-submodule-laws',
    'saturation-membership',
)


def _odd_ring(payload: Payload) -> str | None:
    ring = ring_from_payload(payload['ring'])
    return f'odd ring {ring}' if ring.size % 2 else None


def _broken_ring(payload: Payload) -> str | None:
    msg = f'cannot build {payload["ring"]}'
    raise ConstructionError(msg)


@pytest.fixture(name='odd_property')
def fixture_odd_property(monkeypatch: pytest.MonkeyPatch) -> str:
    """Register a property that fails on every ring of odd order."""
    name = 'even-rings-only'
    monkeypatch.setitem(
        REGISTRY,
        name,
        Property(name=name, summary='fails on odd rings', generate=ring_instances, check=_odd_ring),
    )
    return name


def test_registry_lists_every_result() -> None:
    """Each registered name is unique and resolvable."""
    names = property_names()
    assert set(CORE_PROPERTIES) | set(STRUCTURAL_PROPERTIES) <= set(names)
    assert list(names) == sorted(names)
    assert get_property('ring-axioms').name == 'ring-axioms'


def test_unknown_property_lists_known_names() -> None:
    """Typos are reported with the available names."""
    with pytest.raises(UnknownPropertyError, match='ring-axioms'):
        get_property('ring-axiom')


def test_duplicate_registration_is_rejected() -> None:
    """Names are registered exactly once."""
    with pytest.raises(ValueError, match='already registered'):
        register('ring-axioms', 'again', ring_instances)(_odd_ring)


REFERENCED_RESULTS = {
    'thm1': 's-primary-equivalent-forms',
    'prop4c': 'localization-preserves-primary',
    'thm17': 'module-product-split',
    'thm14': 'multiplication-characterization',
    'thm25': 'idealization-s-primary',
}

ALIAS_NAMES = {
    'thm1-equivalences': 's-primary-equivalent-forms',
    'prop4c-localization': 'localization-preserves-primary',
    'thm17-product': 'module-product-split',
}


def test_every_referenced_result_maps_to_a_property() -> None:
    """Result labels are attached to the properties that check them."""
    by_reference = {prop.reference: prop.name for prop in REGISTRY.values() if prop.reference}
    for reference, name in REFERENCED_RESULTS.items():
        assert by_reference[reference] == name
    assert len(by_reference) == len([p for p in REGISTRY.values() if p.reference])


@pytest.mark.parametrize(('alias', 'name'), sorted(ALIAS_NAMES.items()))
def test_aliases_resolve_to_canonical_properties(alias: str, name: str) -> None:
    """Aliases are accepted wherever a property name is."""
    assert ALIASES[alias] == name
    assert get_property(alias).name == name
    assert alias in get_property(name).as_dict()['aliases']


def test_suite_run_by_alias_reports_canonical_name() -> None:
    """Results carry the canonical property name, not the alias used to run them."""
    result = run_suite('thm17-product', SMALL)
    assert result.property == 'module-product-split'
    assert result.passed, result.failures[:3]


def test_duplicate_alias_is_rejected() -> None:
    """An alias cannot shadow an existing name or alias."""
    with pytest.raises(ValueError, match='thm1-equivalences'):
        register('fresh-property', 'again', ring_instances, aliases=('thm1-equivalences',))(
            _odd_ring
        )
    assert 'fresh-property' not in REGISTRY


def test_families_include_non_multiplication_modules() -> None:
    """Z/2 (+) Z/2 over Z/2 keeps the multiplication checks from holding vacuously."""
    modules = list(family_modules(zmod(2), InstanceFamily(max_module=4)))
    assert modules[0] == regular_module(zmod(2))
    assert modules[-1] == direct_sum([cyclic_module(2, zmod(2)), cyclic_module(2, zmod(2))])
    verdicts = [is_multiplication(module) for module in modules]
    assert [v.holds for v in verdicts] == [True, True, True, False]


@pytest.mark.parametrize('name', CORE_PROPERTIES + STRUCTURAL_PROPERTIES)
def test_property_holds_on_small_family(name: str) -> None:
    """Every result holds for rings and modules of order at most four."""
    result = run_suite(name, SMALL)
    assert result.checked > 0
    assert result.passed, result.failures[:3]


@pytest.mark.slow
@pytest.mark.parametrize('name', CORE_PROPERTIES + STRUCTURAL_PROPERTIES)
def test_property_holds_on_default_family(name: str) -> None:
    """Every result holds over the default family of order at most eight."""
    result = run_suite(name, InstanceFamily())
    assert result.passed, result.failures[:3]


@pytest.mark.parametrize(
    'name', ['ring-axioms', 'radical-laws', 's-primary-equivalent-forms', 'saturation-membership']
)
def test_structural_properties_over_all_ring_variants(name: str) -> None:
    """Product and idealization rings satisfy the same laws."""
    family = InstanceFamily(
        name='variants',
        max_ring=8,
        max_module=8,
        ring_variants=(RingVariant.ZMOD, RingVariant.PRODUCT, RingVariant.IDEALIZATION),
    )
    result = run_suite(name, family)
    assert result.passed, result.failures[:3]


def test_failures_are_reported_in_instance_order(odd_property: str) -> None:
    """Odd rings Z/3 and Z/5 fail at their positions in the family."""
    result = run_suite(odd_property, InstanceFamily(max_ring=5))
    assert result.checked == 4
    assert not result.passed
    assert [failure.index for failure in result.failures] == [1, 3]
    assert result.failures[0].instance == {'ring': {'zmod': 3}}
    assert 'odd ring' in result.failures[0].detail


def test_replay_reproduces_failure(odd_property: str) -> None:
    """A serialized failure replays to the same detail."""
    result = run_suite(odd_property, InstanceFamily(max_ring=3))
    (failure,) = result.failures
    restored = json.loads(json.dumps(failure.to_json_dict()))
    assert replay(odd_property, restored['instance']) == failure.detail
    assert replay(odd_property, {'ring': {'zmod': 4}}) is None


def test_algebra_errors_become_failure_details(monkeypatch: pytest.MonkeyPatch) -> None:
    """A check that raises is recorded as a failure rather than aborting the run."""
    monkeypatch.setitem(
        REGISTRY,
        'always-broken',
        Property(
            name='always-broken', summary='raises', generate=ring_instances, check=_broken_ring
        ),
    )
    result = run_suite('always-broken', InstanceFamily(max_ring=2))
    assert result.failures[0].detail.startswith('ConstructionError: cannot build')


def test_serial_and_parallel_runs_agree() -> None:
    """Worker count changes nothing in the serialized result."""
    serial = run_suite('primary-colon-witness', MEDIUM, workers=1)
    parallel = run_suite('primary-colon-witness', MEDIUM, workers=2)
    assert json.dumps(serial.to_json_dict(), sort_keys=True) == json.dumps(
        parallel.to_json_dict(), sort_keys=True
    )
    assert serial == parallel


def test_progress_callback_counts_every_instance() -> None:
    """The callback receives chunk sizes adding up to the instance count."""
    seen: list[int] = []
    result = run_suite('s-prime-implies-s-primary', MEDIUM, progress=seen.append)
    assert sum(seen) == result.checked


def test_sampled_mode_is_reproducible() -> None:
    """The same seed selects the same subset of instances."""
    family = InstanceFamily(name='sampled', mode=FamilyMode.SAMPLED, seed=7, samples=5)
    first = run_suite('ring-axioms', family)
    second = run_suite('ring-axioms', family)
    assert first.checked == 5
    assert first.to_json_dict() == second.to_json_dict()


def test_family_serialization() -> None:
    """Families serialize with their enum values."""
    assert SMALL.as_dict() == {
        'name': 'small',
        'max_ring': 4,
        'max_module': 4,
        'ring_variants': ['zmod'],
        'mode': 'exhaustive',
        'seed': 0,
        'samples': 200,
    }


def test_triples_come_in_canonical_order() -> None:
    """Z/2 contributes its regular module first, with (0) before the whole module."""
    first, second = list(triple_instances(SMALL))[:2]
    assert first == {'module': {'regular': {'zmod': 2}}, 'sub': [0], 'set': [1]}
    assert second['sub'] == [0, 1]


def test_search_finds_s_primary_not_primary() -> None:
    """(0) in Z/6 with S = {1, 3} is the first S-primary submodule that is not primary."""
    result = search_separation(SeparationTarget.S_PRIMARY_NOT_PRIMARY)
    assert not result.exhausted
    assert result.found == {'module': {'regular': {'zmod': 6}}, 'sub': [0], 'set': [1, 3]}
    assert revalidate(result.target, result.found)


def test_search_finds_s_primary_not_s_prime() -> None:
    """(0) in Z/4 as a cyclic module over Z/4 separates the notions with S = {1, 3}."""
    result = search_separation('s-primary-not-s-prime')
    assert result.found == {
        'module': {'cyclic': {'d': 4, 'ring': {'zmod': 4}}},
        'sub': [0],
        'set': [1, 3],
    }
    assert revalidate(result.target, result.found)


def test_search_can_skip_trivial_set() -> None:
    """Skipping S = {1} finds the same witness after fewer instances."""
    full = search_separation('s-primary-not-primary')
    skipped = search_separation('s-primary-not-primary', SearchBounds(skip_trivial_set=True))
    assert skipped.found == full.found
    assert skipped.examined < full.examined


def test_search_accepts_target_aliases() -> None:
    """converse-4c-failure names the localized converse target."""
    assert (
        SeparationTarget.parse('converse-4c-failure')
        is SeparationTarget.LOCALIZED_PRIMARY_NOT_S_PRIMARY
    )
    result = search_separation('converse-4c-failure', SearchBounds(max_ring=3, max_module=3))
    assert result.target is SeparationTarget.LOCALIZED_PRIMARY_NOT_S_PRIMARY


def test_search_for_localized_converse_terminates() -> None:
    """The converse search either exhausts the family or returns a revalidated instance."""
    result = search_separation(
        SeparationTarget.LOCALIZED_PRIMARY_NOT_S_PRIMARY, SearchBounds(max_ring=6, max_module=6)
    )
    assert result.examined > 0
    if result.found is None:
        assert result.exhausted
    else:
        assert revalidate(result.target, result.found)


def test_search_result_json_shape() -> None:
    """Search results serialize with the target value."""
    result = search_separation('s-primary-not-primary', SearchBounds(max_ring=3, max_module=3))
    assert result.to_json_dict() == {
        'target': 's-primary-not-primary',
        'found': None,
        'exhausted': True,
        'examined': result.examined,
    }


def test_unknown_search_target() -> None:
    """Unknown targets list the valid ones."""
    with pytest.raises(UnknownTargetError, match='s-primary-not-primary'):
        search_separation('nonsense')
