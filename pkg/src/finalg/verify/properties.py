"""Registry of executable properties.

Each property pairs an instance generator with a check. A check returns
``None`` when the instance satisfies the property and a short description of
the violation otherwise.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import reduce

from finalg.classify import (
    is_primary_submodule,
    is_quasi_s_torsion_free,
    is_s_prime,
    is_s_prime_ideal,
    is_s_primary,
    is_s_primary_ideal,
    is_s_torsion_free,
    primary_colon_witness,
    quotient_quasi_torsion_free,
    quotient_torsion_free,
    s_primary_variants,
)
from finalg.codec import (
    cached_module_from_payload,
    decode_element,
    multset_from_payload,
    ring_from_payload,
    submodule_from_payload,
)
from finalg.constructions import (
    LiftMode,
    lift_ideal,
    lift_multset,
    product_ideal,
    product_instance,
    product_multset,
)
from finalg.errors import AxiomViolationError, UnknownPropertyError
from finalg.localization import (
    localize_ring,
    localize_submodule,
    saturate,
    saturation_by_membership,
)
from finalg.modules import (
    ModuleDescriptor,
    ModuleHom,
    Submodule,
    annihilator,
    colon_m,
    colon_r,
    enumerate_submodules,
    full_submodule,
    hom_image,
    hom_kernel,
    hom_preimage,
    ideal_times,
    is_faithful,
    is_multiplication,
    is_p_cyclic,
    module_hom,
    quotient_module,
    rad_submodule,
    submodule_intersection,
    submodule_module,
    submodule_product,
    t_p,
)
from finalg.rings import (
    Ideal,
    MultClosedSet,
    audit_ring,
    colon_ideal,
    enumerate_ideals,
    enumerate_mult_closed,
    ideal_spectrum,
    is_primary_ideal,
    is_quasi_local,
    prime_complement,
    quotient_ring,
    radical_ideal,
    ring_units,
    unit_ideal,
)
from finalg.verify.families import (
    InstanceFamily,
    Payload,
    hom_instances,
    idealization_ideal_instances,
    idealization_instances,
    module_instances,
    module_set_instances,
    prime_field_instances,
    product_ideal_instances,
    product_instances,
    product_ring_instances,
    ring_instances,
    set_instances,
    submodule_instances,
    triple_instances,
)

__all__ = ["ALIASES", "REGISTRY", "Property", "get_property", "property_names"]

Check = Callable[[Payload], 'str | None']
Generator = Callable[[InstanceFamily], Iterator[Payload]]


@dataclass(frozen=True, slots=True)
class Property:
    """A named result checked over every instance of a family.

    ``reference`` labels the published result a property encodes (``None`` for
    structural laws of the toolkit); ``aliases`` are extra names it answers to.
    """

    name: str
    summary: str
    generate: Generator
    check: Check
    reference: str | None = None
    aliases: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, object]:
        return {
            'name': self.name,
            'summary': self.summary,
            'reference': self.reference,
            'aliases': list(self.aliases),
        }


REGISTRY: dict[str, Property] = {}
ALIASES: dict[str, str] = {}


def register(
    name: str,
    summary: str,
    generate: Generator,
    *,
    reference: str | None = None,
    aliases: tuple[str, ...] = (),
) -> Callable[[Check], Check]:
    def decorator(check: Check) -> Check:
        for label in (name, *aliases):
            if label in REGISTRY or label in ALIASES:
                msg = f'Property {label!r} is already registered.'
                raise ValueError(msg)
        REGISTRY[name] = Property(
            name=name,
            summary=summary,
            generate=generate,
            check=check,
            reference=reference,
            aliases=aliases,
        )
        ALIASES.update(dict.fromkeys(aliases, name))
        return check

    return decorator


def get_property(name: str) -> Property:
    """Resolve a canonical name or an alias."""
    try:
        return REGISTRY[ALIASES.get(name, name)]
    except KeyError:
        known = ', '.join(property_names())
        msg = f'Unknown property {name!r}; known properties: {known}.'
        raise UnknownPropertyError(msg) from None


def property_names() -> tuple[str, ...]:
    return tuple(sorted(REGISTRY))


# Payload decoding


def _module(payload: Payload, key: str = 'module') -> ModuleDescriptor:
    return cached_module_from_payload(payload[key])


def _triple(payload: Payload) -> tuple[ModuleDescriptor, Submodule, MultClosedSet]:
    module = _module(payload)
    return (
        module,
        submodule_from_payload(module, payload['sub']),
        multset_from_payload(module.ring, payload['set']),
    )


def _module_and_set(payload: Payload) -> tuple[ModuleDescriptor, MultClosedSet]:
    module = _module(payload)
    return module, multset_from_payload(module.ring, payload['set'])


def _hom(payload: Payload) -> tuple[ModuleHom, MultClosedSet]:
    domain = _module(payload, 'domain')
    codomain = _module(payload, 'codomain')
    table = [codomain.index(decode_element(raw)) for raw in payload['map']]
    return module_hom(domain, codomain, table), multset_from_payload(domain.ring, payload['set'])


def _ideal(payload: Payload, key: str = 'ideal') -> Ideal:
    ring = ring_from_payload(payload['ring'])
    members = {ring.index(decode_element(raw)) for raw in payload[key]}
    return Ideal(ring, frozenset(members))


def _whole_colon(candidate: Submodule) -> Ideal:
    return colon_r(candidate, full_submodule(candidate.module))


def _scaled_inside(module: ModuleDescriptor, s: int, source: Submodule, target: Submodule) -> bool:
    return all(module.act(s, n) in target.elements for n in source.elements)


# Core S-primary results


@register(
    'primary-vs-s-primary',
    'Primary and disjoint implies S-primary; with S inside the units both notions agree.',
    triple_instances,
    reference='lemma0.3',
)
def _primary_vs_s_primary(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    primary = is_primary_submodule(candidate)
    if primary and not verdict.holds:
        return 'primary and disjoint from S but not S-primary'
    if subset.elements <= ring_units(module.ring) and verdict.holds != primary:
        return f'S consists of units but primary={primary}, s_primary={verdict.holds}'
    return None


@register(
    's-primary-equivalent-forms',
    'The element, quotient, submodule and ideal formulations of S-primary agree.',
    triple_instances,
    reference='thm1',
    aliases=('thm1-equivalences',),
)
def _equivalent_forms(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    forms = {'a': verdict.holds, **s_primary_variants(candidate, subset).as_dict()}
    if len(set(forms.values())) > 1:
        return f'formulations disagree: {forms}'
    return None


@register(
    's-prime-implies-s-primary',
    'Every S-prime submodule is S-primary.',
    triple_instances,
)
def _prime_implies_primary(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    if is_s_prime(candidate, subset).holds and not is_s_primary(candidate, subset).holds:
        return 'S-prime but not S-primary'
    return None


@register(
    's-primary-widening',
    'S1-primary stays S2-primary for every larger S2 still disjoint from (P:M).',
    triple_instances,
    reference='prop4a',
)
def _widening(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    if not is_s_primary(candidate, subset).holds:
        return None
    for larger in enumerate_mult_closed(module.ring):
        if not subset.elements <= larger.elements:
            continue
        verdict = is_s_primary(candidate, larger)
        if verdict.applicable and not verdict.holds:
            return f'not S-primary for the larger set {larger}'
    return None


@register(
    's-primary-saturation',
    'P is S-primary exactly when it is S*-primary.',
    triple_instances,
    reference='prop4b',
)
def _saturation(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    star = saturate(subset)
    plain, saturated = is_s_primary(candidate, subset), is_s_primary(candidate, star)
    if (plain.applicable, plain.holds) != (saturated.applicable, saturated.holds):
        return f'S gives {plain}, S* = {star} gives {saturated}'
    return None


@register(
    'localization-preserves-primary',
    'S-primary P localizes to a primary submodule S^-1 P.',
    triple_instances,
    reference='prop4c',
    aliases=('prop4c-localization',),
)
def _localization_preserves(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    if not is_s_primary(candidate, subset).holds:
        return None
    _, localized = localize_submodule(candidate, subset)
    if localized.is_proper and not is_primary_submodule(localized):
        return f'S^-1 P = {localized} is not primary'
    return None


def _colon_dominating_witness(candidate: Submodule, subset: MultClosedSet) -> int | None:
    colons = {s: colon_m(candidate, s) for s in subset.members}
    for s in subset.members:
        if all(other.issubset(colons[s]) for other in colons.values()):
            return s
    return None


@register(
    'localization-characterization',
    'S-primary iff S^-1 P is primary and some (P :_M s) contains every (P :_M s\').',
    triple_instances,
    reference='prop20',
)
def _localization_characterization(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    _, localized = localize_submodule(candidate, subset)
    dominating = _colon_dominating_witness(candidate, subset)
    local_side = is_primary_submodule(localized) and dominating is not None
    if verdict.holds != local_side:
        return f's_primary={verdict.holds} but localized criterion={local_side}'
    return None


@register(
    'primary-colon-witness',
    'S-primary iff (P :_M s) is primary for some s in S.',
    triple_instances,
    reference='thm21',
)
def _primary_colon(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    colon = primary_colon_witness(candidate, subset)
    if colon.holds != verdict.holds:
        return f's_primary={verdict.holds} but primary colon witness={colon.holds}'
    return None


@register(
    'colon-witness-maximal',
    'The S-primary witness s has the largest (P :_M s) and ((P:M) : s).',
    triple_instances,
    reference='lemma19',
)
def _colon_witness_maximal(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.holds or verdict.witness is None:
        return None
    s = verdict.witness
    colon = _whole_colon(candidate)
    module_colon, ideal_colon = colon_m(candidate, s), colon_ideal(colon, s)
    for other in subset.members:
        if not colon_m(candidate, other).issubset(module_colon):
            return f'(P :_M {other}) escapes (P :_M {s})'
        if not colon_ideal(colon, other).issubset(ideal_colon):
            return f'((P:M) : {other}) escapes ((P:M) : {s})'
    return None


# Homomorphisms, submodules and quotients


@register(
    'preimage-transfer',
    'Preimages of S-primary submodules stay S-primary when disjointness holds.',
    hom_instances,
    reference='prop6.1a',
)
def _preimage_transfer(payload: Payload) -> str | None:
    f, subset = _hom(payload)
    for target in enumerate_submodules(f.codomain):
        if not is_s_primary(target, subset).holds:
            continue
        source = hom_preimage(f, target)
        if subset.meets(_whole_colon(source)):
            continue
        if not is_s_primary(source, subset).holds:
            return f'preimage of {target} is not S-primary'
    return None


@register(
    'image-transfer',
    'An epimorphism carries S-primary P containing the kernel to an S-primary image.',
    hom_instances,
    reference='prop6.1b',
)
def _image_transfer(payload: Payload) -> str | None:
    f, subset = _hom(payload)
    if not f.is_epimorphism:
        return None
    kernel = hom_kernel(f)
    for source in enumerate_submodules(f.domain):
        if not kernel.issubset(source) or not is_s_primary(source, subset).holds:
            continue
        if not is_s_primary(hom_image(f, source), subset).holds:
            return f'image of {source} is not S-primary'
    return None


@register(
    'hom-image-preimage',
    'Images and preimages are monotone and f(f^-1(P\')) = P\' meet f(M).',
    hom_instances,
)
def _image_preimage_laws(payload: Payload) -> str | None:
    f, _ = _hom(payload)
    image = hom_image(f, full_submodule(f.domain))
    targets = enumerate_submodules(f.codomain)
    sources = enumerate_submodules(f.domain)
    for target in targets:
        if hom_image(f, hom_preimage(f, target)) != submodule_intersection(target, image):
            return f'f(f^-1({target})) differs from {target} meet f(M)'
    for low, high in itertools.product(targets, repeat=2):
        if low.issubset(high) and not hom_preimage(f, low).issubset(hom_preimage(f, high)):
            return f'preimage not monotone at {low} <= {high}'
    for low, high in itertools.product(sources, repeat=2):
        if low.issubset(high) and not hom_image(f, low).issubset(hom_image(f, high)):
            return f'image not monotone at {low} <= {high}'
    return None


@register(
    'intersection-transfer',
    'L meet P\' is S-primary in L when P\' is S-primary and (P\' :_R L) misses S.',
    module_set_instances,
    reference='cor7a',
)
def _intersection_transfer(payload: Payload) -> str | None:
    module, subset = _module_and_set(payload)
    lattice = enumerate_submodules(module)
    for inner in lattice:
        _, inclusion = submodule_module(inner)
        for target in lattice:
            if subset.meets(colon_r(target, inner)) or not is_s_primary(target, subset).holds:
                continue
            if not is_s_primary(hom_preimage(inclusion, target), subset).holds:
                return f'{inner} meet {target} is not S-primary in {inner}'
    return None


@register(
    'quotient-transfer',
    'For L inside P, P is S-primary in M iff P/L is S-primary in M/L.',
    module_set_instances,
    reference='cor7b',
)
def _quotient_transfer(payload: Payload) -> str | None:
    module, subset = _module_and_set(payload)
    lattice = enumerate_submodules(module)
    for bottom in lattice:
        _, projection = quotient_module(module, bottom)
        for candidate in lattice:
            if not bottom.issubset(candidate):
                continue
            upstairs = is_s_primary(candidate, subset).holds
            downstairs = is_s_primary(hom_image(projection, candidate), subset).holds
            if upstairs != downstairs:
                return f'P = {candidate}, L = {bottom}: {upstairs} upstairs, {downstairs} in M/L'
    return None


# Colon ideals and multiplication modules


@register(
    'colon-ideal-transfer',
    'If P is S-primary then (P:M) is an S-primary ideal.',
    triple_instances,
    reference='prop8a',
)
def _colon_ideal_transfer(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    if is_s_primary(candidate, subset).holds:
        colon = _whole_colon(candidate)
        if not is_s_primary_ideal(colon, subset).holds:
            return f'(P:M) = {colon} is not an S-primary ideal'
    return None


@register(
    'colon-ideal-lift',
    'In a multiplication module, an S-primary (P:M) makes P S-primary.',
    triple_instances,
    reference='prop8b',
)
def _colon_ideal_lift(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    if not is_multiplication(module).holds:
        return None
    if is_s_primary_ideal(_whole_colon(candidate), subset).holds:
        if not is_s_primary(candidate, subset).holds:
            return '(P:M) is S-primary but P is not'
    return None


def _ideal_form_witness(
    module: ModuleDescriptor, candidate: Submodule, subset: MultClosedSet, *, prime: bool
) -> bool:
    whole = full_submodule(module)
    floor = annihilator(module)
    test = is_s_prime_ideal if prime else is_s_primary_ideal
    return any(
        floor.issubset(scalars)
        and ideal_times(scalars, whole) == candidate
        and test(scalars, subset).holds
        for scalars in enumerate_ideals(module.ring)
    )


@register(
    'multiplication-characterization',
    'For multiplication M: P S-primary iff (P:M) is, iff P = IM with I S-primary over Ann(M).',
    triple_instances,
    reference='thm14',
)
def _multiplication_characterization(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    if not is_multiplication(module).holds:
        return None
    primary = is_s_primary(candidate, subset)
    if not primary.applicable:
        return None
    colon = _whole_colon(candidate)
    primary_forms = (
        primary.holds,
        is_s_primary_ideal(colon, subset).holds,
        _ideal_form_witness(module, candidate, subset, prime=False),
    )
    prime_forms = (
        is_s_prime(candidate, subset).holds,
        is_s_prime_ideal(colon, subset).holds,
        _ideal_form_witness(module, candidate, subset, prime=True),
    )
    if len(set(primary_forms)) > 1:
        return f'S-primary forms disagree: {primary_forms}'
    if len(set(prime_forms)) > 1:
        return f'S-prime forms disagree: {prime_forms}'
    return None


def _product_form_holds(
    candidate: Submodule, subset: MultClosedSet, *, use_radical_submodule: bool
) -> bool:
    module = candidate.module
    ring = module.ring
    lattice = enumerate_submodules(module)
    whole = full_submodule(module)
    root = radical_ideal(_whole_colon(candidate)).elements
    radical = rad_submodule(candidate)
    hypotheses = [
        (left, right)
        for left in lattice
        for right in lattice
        if submodule_product(left, right).issubset(candidate)
    ]

    def left_side(s: int, left: Submodule) -> bool:
        if use_radical_submodule:
            return _scaled_inside(module, s, left, radical)
        return all(ring.mul(s, x) in root for x in colon_r(left, whole).elements)

    return any(
        all(
            left_side(s, left) or _scaled_inside(module, s, right, candidate)
            for left, right in hypotheses
        )
        for s in subset.members
    )


@register(
    'product-form',
    'For multiplication M: S-primary iff LN in P forces s(L:M) in the radical or sN in P.',
    triple_instances,
    reference='cor10',
)
def _product_form(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable or not is_multiplication(module).holds:
        return None
    product_side = _product_form_holds(candidate, subset, use_radical_submodule=False)
    if product_side != verdict.holds:
        return f's_primary={verdict.holds} but product form={product_side}'
    return None


@register(
    'radical-product-form',
    'For multiplication M: S-primary iff LN in P forces sL in rad(P) or sN in P.',
    triple_instances,
    reference='cor11',
)
def _radical_product_form(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable or not is_multiplication(module).holds:
        return None
    radical_side = _product_form_holds(candidate, subset, use_radical_submodule=True)
    if radical_side != verdict.holds:
        return f's_primary={verdict.holds} but rad(P) product form={radical_side}'
    return None


@register(
    'intersection-splitting',
    'For multiplication M and S-primary P: N meet L in P gives sN in P or sL in rad(P).',
    triple_instances,
    reference='prop15',
)
def _intersection_splitting(payload: Payload) -> str | None:
    module, candidate, subset = _triple(payload)
    if not is_multiplication(module).holds or not is_s_primary(candidate, subset).holds:
        return None
    radical = rad_submodule(candidate)
    lattice = enumerate_submodules(module)
    for first, second in itertools.product(lattice, repeat=2):
        if not submodule_intersection(first, second).issubset(candidate):
            continue
        if not any(
            _scaled_inside(module, s, first, candidate)
            or _scaled_inside(module, s, second, radical)
            for s in subset.members
        ):
            return f'N = {first}, L = {second} admit no splitting element'
    return None


@register(
    'faithful-fixed-witness',
    'Faithful multiplication M and S-primary (S-prime) p: one s handles every am in pM.',
    module_set_instances,
    reference='lemma13',
)
def _faithful_fixed_witness(payload: Payload) -> str | None:
    module, subset = _module_and_set(payload)
    if not is_faithful(module) or not is_multiplication(module).holds:
        return None
    ring = module.ring
    whole = full_submodule(module)
    for scalars in enumerate_ideals(ring):
        extended = ideal_times(scalars, whole).elements
        pairs = [
            (a, m)
            for a in ring.indices
            for m in module.indices
            if module.act(a, m) in extended
        ]
        checks = (
            (is_s_primary_ideal, radical_ideal(scalars).elements, 'S-primary'),
            (is_s_prime_ideal, scalars.elements, 'S-prime'),
        )
        for test, absorbing, label in checks:
            if not test(scalars, subset).holds:
                continue
            if not any(
                all(ring.mul(s, a) in absorbing or module.act(s, m) in extended for a, m in pairs)
                for s in subset.members
            ):
                return f'{label} ideal {scalars} has no fixed witness on pM'
    return None


@register(
    'multiplication-local-criterion',
    'M is multiplication iff for each maximal p, M = T_p(M) or M is p-cyclic.',
    module_instances,
    reference='remark12b',
)
def _local_criterion(payload: Payload) -> str | None:
    module = _module(payload)
    whole = full_submodule(module)
    local = all(
        t_p(module, maximal) == whole or is_p_cyclic(module, maximal).holds
        for maximal in ideal_spectrum(module.ring).maximals
    )
    multiplication = is_multiplication(module).holds
    if local != multiplication:
        return f'multiplication={multiplication} but local criterion={local}'
    return None


@register(
    'multiplication-radical',
    'For multiplication M and proper P: rad(P) = rad(P:M) M.',
    submodule_instances,
)
def _multiplication_radical(payload: Payload) -> str | None:
    module = _module(payload)
    candidate = submodule_from_payload(module, payload['sub'])
    if not candidate.is_proper or not is_multiplication(module).holds:
        return None
    expected = ideal_times(radical_ideal(_whole_colon(candidate)), full_submodule(module))
    if rad_submodule(candidate) != expected:
        return f'rad(P) = {rad_submodule(candidate)} but rad(P:M)M = {expected}'
    return None


# Products


@register(
    'ideal-product-split',
    'p1 x p2 is S1 x S2-primary iff one factor is S_i-primary and the other meets S_j.',
    product_ideal_instances,
    reference='lemma16',
)
def _ideal_product_split(payload: Payload) -> str | None:
    ideals = [_ideal(part) for part in payload['components']]
    subsets = [
        multset_from_payload(part.ring, component['set'])
        for part, component in zip(ideals, payload['components'], strict=True)
    ]
    whole = is_s_primary_ideal(product_ideal(ideals), product_multset(subsets)).holds
    split = any(
        is_s_primary_ideal(ideals[i], subsets[i]).holds
        and subsets[1 - i].meets(ideals[1 - i])
        for i in (0, 1)
    )
    if whole != split:
        return f'product verdict {whole} but componentwise verdict {split}'
    return None


def _product_split(payload: Payload) -> str | None:
    modules, subs, subsets = [], [], []
    for component in payload['components']:
        module, candidate, subset = _triple(component)
        modules.append(module)
        subs.append(candidate)
        subsets.append(subset)
    instance = product_instance(modules, subsets, subs)
    whole = is_s_primary(instance.submodule, instance.multset).holds
    split = any(
        is_s_primary(subs[i], subsets[i]).holds
        and all(
            subsets[j].meets(_whole_colon(subs[j])) for j in range(len(subs)) if j != i
        )
        for i in range(len(subs))
    )
    if whole != split:
        return f'product verdict {whole} but componentwise verdict {split}'
    return None


register(
    'module-product-split',
    'P1 x P2 is S-primary iff one P_i is S_i-primary and the other colon meets S_j.',
    product_instances,
    reference='thm17',
    aliases=('thm17-product',),
)(_product_split)

register(
    'threefold-product-split',
    'Three-factor products: exactly one S_i-primary factor, every other colon meets S_j.',
    lambda family: product_instances(family, factors=3),
    reference='thm18',
)(_product_split)


# Local rings and the Jacobson radical


def _maximal_criterion(candidate: Submodule) -> bool:
    colon = _whole_colon(candidate)
    maximals = ideal_spectrum(candidate.module.ring).maximals
    return is_primary_ideal(colon) and all(
        is_s_primary(candidate, prime_complement(maximal)).holds for maximal in maximals
    )


@register(
    'jacobson-characterization',
    'With (P:M) inside Jac(R): P primary iff (P:M) primary and P is (R - m)-primary for all m.',
    submodule_instances,
    reference='thm22',
)
def _jacobson_characterization(payload: Payload) -> str | None:
    module = _module(payload)
    candidate = submodule_from_payload(module, payload['sub'])
    if not _whole_colon(candidate).issubset(ideal_spectrum(module.ring).jacobson):
        return None
    primary, criterion = is_primary_submodule(candidate), _maximal_criterion(candidate)
    if primary != criterion:
        return f'primary={primary} but maximal-ideal criterion={criterion}'
    return None


@register(
    'quasi-local-characterization',
    'Over a quasi-local ring: P primary iff (P:M) primary and P is (R - m)-primary.',
    submodule_instances,
    reference='cor23',
)
def _quasi_local_characterization(payload: Payload) -> str | None:
    module = _module(payload)
    if not is_quasi_local(module.ring):
        return None
    candidate = submodule_from_payload(module, payload['sub'])
    primary, criterion = is_primary_submodule(candidate), _maximal_criterion(candidate)
    if primary != criterion:
        return f'primary={primary} but maximal-ideal criterion={criterion}'
    return None


# Idealization


def _idealization_parts(payload: Payload) -> tuple[Ideal, ModuleDescriptor]:
    return _ideal(payload), cached_module_from_payload(payload['carrier'])


@register(
    'idealization-primary',
    'For p inside Ann(M): p primary iff p(+)M primary.',
    idealization_ideal_instances,
    reference='prop24.1',
)
def _idealization_primary(payload: Payload) -> str | None:
    base_ideal, carrier = _idealization_parts(payload)
    if not base_ideal.issubset(annihilator(carrier)):
        return None
    lifted = lift_ideal(base_ideal, full_submodule(carrier))
    if is_primary_ideal(base_ideal) != is_primary_ideal(lifted):
        return f'p primary={is_primary_ideal(base_ideal)} but p(+)M differs'
    return None


@register(
    'idealization-s-primary',
    'p S-primary iff p(+)M is S(+)0-primary iff p(+)M is S(+)M-primary.',
    idealization_instances,
    reference='thm25',
)
def _idealization_s_primary(payload: Payload) -> str | None:
    base_ideal, carrier = _idealization_parts(payload)
    subset = multset_from_payload(base_ideal.ring, payload['set'])
    if subset.meets(base_ideal):
        return None
    lifted = lift_ideal(base_ideal, full_submodule(carrier))
    verdicts = (
        is_s_primary_ideal(base_ideal, subset).holds,
        is_s_primary_ideal(lifted, lift_multset(subset, carrier, LiftMode.ZERO)).holds,
        is_s_primary_ideal(lifted, lift_multset(subset, carrier, LiftMode.FULL)).holds,
    )
    if len(set(verdicts)) > 1:
        return f'verdicts for p, S(+)0, S(+)M disagree: {verdicts}'
    return None


@register(
    'idealization-radical',
    'The radical of I(+)N is rad(I)(+)M.',
    idealization_ideal_instances,
    reference='remark24b',
)
def _idealization_radical(payload: Payload) -> str | None:
    base_ideal, carrier = _idealization_parts(payload)
    whole = full_submodule(carrier)
    expected = lift_ideal(radical_ideal(base_ideal), whole)
    for sub in enumerate_submodules(carrier):
        if not ideal_times(base_ideal, whole).issubset(sub):
            continue
        if radical_ideal(lift_ideal(base_ideal, sub)) != expected:
            return f'radical of I(+)N differs from rad(I)(+)M for N = {sub}'
    return None


# Torsion-free modules


@register(
    'torsion-free-quotient',
    'P is S-primary iff M/P is pi(S)-torsion-free over R/rad(P:M).',
    triple_instances,
    reference='prop27',
)
def _torsion_free_quotient(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    torsion = quotient_torsion_free(candidate, subset)
    if torsion.holds != verdict.holds:
        return f's_primary={verdict.holds} but quotient torsion-free={torsion.holds}'
    return None


@register(
    'quasi-torsion-free-quotient',
    'P is S-primary iff M/P is quasi pi\'(S)-torsion-free over R/(P:M).',
    triple_instances,
    reference='prop29',
)
def _quasi_torsion_free_quotient(payload: Payload) -> str | None:
    _, candidate, subset = _triple(payload)
    verdict = is_s_primary(candidate, subset)
    if not verdict.applicable:
        return None
    torsion = quotient_quasi_torsion_free(candidate, subset)
    if torsion.holds != verdict.holds:
        return f's_primary={verdict.holds} but quotient quasi torsion-free={torsion.holds}'
    return None


@register(
    'domain-torsion-free',
    'Over a finite field every nonzero module is torsion-free and quasi (R - p)-torsion-free.',
    prime_field_instances,
    reference='thm31',
)
def _domain_torsion_free(payload: Payload) -> str | None:
    module = _module(payload)
    ring = module.ring
    spectrum = ideal_spectrum(ring)
    trivial = MultClosedSet(ring, frozenset({ring.one}))
    verdicts = (
        is_s_torsion_free(module, trivial).holds,
        all(
            is_quasi_s_torsion_free(module, prime_complement(prime)).holds
            for prime in spectrum.primes
        ),
        all(
            is_quasi_s_torsion_free(module, prime_complement(maximal)).holds
            for maximal in spectrum.maximals
        ),
    )
    if not all(verdicts):
        return f'torsion-free conditions over a field: {verdicts}'
    return None


# Structural laws


@register('ring-axioms', 'Every family ring satisfies the commutative ring axioms.', ring_instances)
def _ring_axioms(payload: Payload) -> str | None:
    ring = ring_from_payload(payload['ring'])
    try:
        audit_ring(ring)
    except AxiomViolationError as exc:
        return str(exc)
    for x in ring_units(ring):
        if not any(ring.mul(x, y) == ring.one for y in ring.indices):
            return f'{ring.encode(x)!r} listed as a unit without an inverse'
    return None


def _is_field(ring_ideal: Ideal) -> bool:
    quotient = quotient_ring(ring_ideal.ring, ring_ideal)
    return len(ring_units(quotient)) == quotient.size - 1


@register(
    'radical-laws',
    'Radicals are extensive, idempotent and monotone; maximals are prime; Jac is their meet.',
    ring_instances,
)
def _radical_laws(payload: Payload) -> str | None:
    ring = ring_from_payload(payload['ring'])
    ideals = enumerate_ideals(ring)
    spectrum = ideal_spectrum(ring)
    for target in ideals:
        root = radical_ideal(target)
        if not target.issubset(root) or radical_ideal(root) != root:
            return f'radical of {target} is not extensive and idempotent'
        for other in ideals:
            if target.issubset(other) and not root.issubset(radical_ideal(other)):
                return f'radical not monotone at {target} <= {other}'
    if any(maximal not in spectrum.primes for maximal in spectrum.maximals):
        return 'a maximal ideal is not prime'
    field_kernels = [target for target in ideals if target.is_proper and _is_field(target)]
    jacobson = reduce(
        lambda a, b: Ideal(ring, a.elements & b.elements), field_kernels, unit_ideal(ring)
    )
    if jacobson != spectrum.jacobson:
        return f'Jac(R) = {spectrum.jacobson} but the meet of field kernels is {jacobson}'
    return None


@register(
    'product-ideal-lattice',
    'Ideals of Z/a x Z/b are exactly the products of component ideals.',
    product_ring_instances,
)
def _product_ideal_lattice(payload: Payload) -> str | None:
    ring = ring_from_payload(payload['ring'])
    left, right = ring.construction.components  # type: ignore[union-attr]
    products = {
        product_ideal([a, b]).elements
        for a in enumerate_ideals(left)
        for b in enumerate_ideals(right)
    }
    lattice = {target.elements for target in enumerate_ideals(ring)}
    if products != lattice:
        return f'{len(lattice)} ideals but {len(products)} componentwise products'
    return None


@register(
    'colon-adjunction',
    'r lies in (N :_R K) exactly when rK is inside N, and (N :_M (N :_R M)) contains N.',
    module_instances,
)
def _colon_adjunction(payload: Payload) -> str | None:
    module = _module(payload)
    lattice = enumerate_submodules(module)
    whole = full_submodule(module)
    for target, source in itertools.product(lattice, repeat=2):
        colon = colon_r(target, source)
        for r in module.ring.indices:
            if (r in colon) != _scaled_inside(module, r, source, target):
                return f'membership of {module.ring.encode(r)!r} in ({target} : {source})'
    for target in lattice:
        if not target.issubset(colon_m(target, colon_r(target, whole))):
            return f'(N :_M (N :_R M)) misses part of {target}'
    return None


@register(
    'rad-submodule-laws',
    'rad is extensive, idempotent and monotone on submodules.',
    module_instances,
)
def _rad_laws(payload: Payload) -> str | None:
    module = _module(payload)
    lattice = enumerate_submodules(module)
    radicals = {sub: rad_submodule(sub) for sub in lattice}
    for sub, radical in radicals.items():
        if not sub.issubset(radical) or rad_submodule(radical) != radical:
            return f'rad({sub}) = {radical} is not extensive and idempotent'
    for low, high in itertools.product(lattice, repeat=2):
        if low.issubset(high) and not radicals[low].issubset(radicals[high]):
            return f'rad not monotone at {low} <= {high}'
    return None


@register(
    'saturation-membership',
    'S* matches the us = uxa membership test, contains S, and is idempotent.',
    set_instances,
)
def _saturation_membership(payload: Payload) -> str | None:
    ring = ring_from_payload(payload['ring'])
    subset = multset_from_payload(ring, payload['set'])
    star = saturate(subset)
    if star.elements != saturation_by_membership(subset):
        return f'S* = {star} disagrees with the membership test'
    if not subset.elements <= star.elements or saturate(star) != star:
        return f'S* = {star} is not an idempotent enlargement of S'
    localized = localize_ring(subset)
    units = ring_units(localized.ring)
    if any(localized.fraction_map[s] not in units for s in subset.members):
        return 'some s/1 is not a unit of S^-1 R'
    return None
