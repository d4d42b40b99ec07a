"""Finite modules over finite rings: lattices, residuals, radicals and homomorphisms.

Module elements are addressed by position in canonical order, exactly like
ring elements (see :mod:`finalg.rings`).
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce

from .errors import AxiomViolationError, ConstructionError, NotMaximalError
from .rings import (
    Encoding,
    Ideal,
    RingDescriptor,
    Zmod,
    is_maximal_ideal,
    principal_ideal,
    product_ring,
    require_enumerable,
)
from .settings import get_limits

__all__ = [
    "CyclicZmod",
    "DirectSum",
    "LocalizedModuleOf",
    "ModuleDescriptor",
    "ModuleHom",
    "MultiplicationVerdict",
    "PCyclicVerdict",
    "ProductModule",
    "QuotientModule",
    "Regular",
    "SubmoduleAsModule",
    "Submodule",
    "annihilator",
    "assemble_module",
    "audit_module",
    "colon_m",
    "colon_r",
    "cyclic_module",
    "cyclic_submodule",
    "describe_module",
    "direct_sum",
    "enumerate_homs",
    "enumerate_submodules",
    "full_submodule",
    "generated_submodule",
    "hom_image",
    "hom_kernel",
    "hom_preimage",
    "ideal_times",
    "identity_hom",
    "is_faithful",
    "is_multiplication",
    "is_p_cyclic",
    "module_hom",
    "prime_submodules",
    "product_module",
    "quotient_module",
    "rad_submodule",
    "satisfies_prime_condition",
    "regular_module",
    "submodule",
    "submodule_intersection",
    "submodule_module",
    "submodule_product",
    "submodule_sum",
    "t_p",
    "zero_submodule",
]


@dataclass(frozen=True, slots=True)
class Regular:
    """R as a module over itself."""

    ring: RingDescriptor


@dataclass(frozen=True, slots=True)
class CyclicZmod:
    """Z/d as a module over Z/n (d divides n)."""

    d: int
    ring: RingDescriptor


@dataclass(frozen=True, slots=True)
class ProductModule:
    """M_1 x ... x M_k over R_1 x ... x R_k."""

    components: tuple[ModuleDescriptor, ...]


@dataclass(frozen=True, slots=True)
class DirectSum:
    """M_1 (+) ... (+) M_k over one ring R, acting diagonally."""

    components: tuple[ModuleDescriptor, ...]


@dataclass(frozen=True, slots=True)
class QuotientModule:
    """M/N, each class encoded by its least element."""

    base: ModuleDescriptor
    sub: frozenset[int]


@dataclass(frozen=True, slots=True)
class SubmoduleAsModule:
    """A submodule L of M regarded as a module in its own right."""

    base: ModuleDescriptor
    sub: frozenset[int]


@dataclass(frozen=True, slots=True)
class LocalizedModuleOf:
    """S^-1 M over S^-1 R."""

    base: ModuleDescriptor
    denominators: frozenset[int]


ModuleConstruction = (
    Regular
    | CyclicZmod
    | ProductModule
    | DirectSum
    | QuotientModule
    | SubmoduleAsModule
    | LocalizedModuleOf
)


@dataclass(frozen=True, eq=False)
class ModuleDescriptor:
    """A finite module with table-driven addition and scalar action."""

    construction: ModuleConstruction
    ring: RingDescriptor
    elements: tuple[Encoding, ...]
    add_table: tuple[tuple[int, ...], ...] = field(repr=False)
    act_table: tuple[tuple[int, ...], ...] = field(repr=False)
    neg_table: tuple[int, ...] = field(repr=False)
    zero: int

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, ModuleDescriptor):
            return NotImplemented
        return self.construction == other.construction

    def __hash__(self) -> int:
        return hash(self.construction)

    def __str__(self) -> str:
        return describe_module(self)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def indices(self) -> range:
        return range(len(self.elements))

    @cached_property
    def _positions(self) -> dict[Encoding, int]:
        return {encoding: position for position, encoding in enumerate(self.elements)}

    def index(self, encoding: Encoding) -> int:
        try:
            return self._positions[encoding]
        except (KeyError, TypeError):
            msg = f'{encoding!r} is not an element of {self}.'
            raise ConstructionError(msg) from None

    def encode(self, m: int) -> Encoding:
        return self.elements[m]

    def add(self, m: int, n: int) -> int:
        return self.add_table[m][n]

    def neg(self, m: int) -> int:
        return self.neg_table[m]

    def sub(self, m: int, n: int) -> int:
        return self.add_table[m][self.neg_table[n]]

    def act(self, r: int, m: int) -> int:
        """Scalar action ``r . m``."""
        return self.act_table[r][m]


def describe_module(module: ModuleDescriptor) -> str:
    construction = module.construction
    if isinstance(construction, Regular):
        return f'regular({construction.ring})'
    if isinstance(construction, CyclicZmod):
        return f'Z/{construction.d} over {construction.ring}'
    if isinstance(construction, ProductModule):
        return ' x '.join(f'({describe_module(part)})' for part in construction.components)
    if isinstance(construction, DirectSum):
        return ' (+) '.join(f'({describe_module(part)})' for part in construction.components)
    if isinstance(construction, QuotientModule):
        return f'({describe_module(construction.base)})/N[{len(construction.sub)}]'
    if isinstance(construction, SubmoduleAsModule):
        return f'L[{len(construction.sub)}] <= {describe_module(construction.base)}'
    return f'S^-1({describe_module(construction.base)})'


def assemble_module(
    construction: ModuleConstruction,
    ring: RingDescriptor,
    encodings: Sequence[Encoding],
    add: Callable[[int, int], int],
    act: Callable[[int, int], int],
    *,
    zero: int,
) -> ModuleDescriptor:
    """Materialise a module from raw operations on positions of ``encodings``."""
    size = len(encodings)
    order = sorted(range(size), key=lambda raw: encodings[raw])
    position = [0] * size
    for new, raw in enumerate(order):
        position[raw] = new
    add_table = tuple(
        tuple(position[add(order[i], order[j])] for j in range(size)) for i in range(size)
    )
    act_table = tuple(
        tuple(position[act(r, order[m])] for m in range(size)) for r in ring.indices
    )
    zero_pos = position[zero]
    module = ModuleDescriptor(
        construction=construction,
        ring=ring,
        elements=tuple(encodings[raw] for raw in order),
        add_table=add_table,
        act_table=act_table,
        neg_table=tuple(add_table[m].index(zero_pos) for m in range(size)),
        zero=zero_pos,
    )
    if size * ring.size <= get_limits().audit_bound**2:
        audit_module(module)
    return module


def audit_module(module: ModuleDescriptor) -> None:
    """Check the module axioms exhaustively."""
    ring, enc, renc = module.ring, module.encode, module.ring.encode
    add, act = module.add_table, module.act_table
    for m in module.indices:
        if act[ring.one][m] != m:
            raise AxiomViolationError('1 . m = m', (enc(m),))
        for n in module.indices:
            if add[m][n] != add[n][m]:
                raise AxiomViolationError('additive commutativity', (enc(m), enc(n)))
            for r in ring.indices:
                if act[r][add[m][n]] != add[act[r][m]][act[r][n]]:
                    raise AxiomViolationError('r(m + n) = rm + rn', (renc(r), enc(m), enc(n)))
        for r in ring.indices:
            for s in ring.indices:
                if act[ring.mul(r, s)][m] != act[r][act[s][m]]:
                    raise AxiomViolationError('(rs)m = r(sm)', (renc(r), renc(s), enc(m)))
                if act[ring.add(r, s)][m] != add[act[r][m]][act[s][m]]:
                    raise AxiomViolationError('(r + s)m = rm + sm', (renc(r), renc(s), enc(m)))


@lru_cache(maxsize=256)
def regular_module(ring: RingDescriptor) -> ModuleDescriptor:
    return assemble_module(
        Regular(ring), ring, ring.elements, ring.add, ring.mul, zero=ring.zero
    )


@lru_cache(maxsize=256)
def cyclic_module(d: int, ring: RingDescriptor) -> ModuleDescriptor:
    """Z/d as a Z/n-module; the action is multiplication mod d."""
    construction = ring.construction
    if not isinstance(construction, Zmod):
        msg = f'Cyclic Z/d modules are defined over Z/n rings, not {ring}.'
        raise ConstructionError(msg)
    n = construction.n
    if d < 1 or n % d:
        msg = f'Z/{d} is not a Z/{n}-module: {d} does not divide {n}.'
        raise ConstructionError(msg)
    return assemble_module(
        CyclicZmod(d, ring),
        ring,
        list(range(d)),
        lambda m, k: (m + k) % d,
        lambda r, m: (ring.encode(r) * m) % d,
        zero=0,
    )


def product_module(
    components: Sequence[ModuleDescriptor], ring: RingDescriptor | None = None
) -> ModuleDescriptor:
    """Componentwise product over the product of the component rings."""
    parts = tuple(components)
    if not parts:
        msg = 'A product module needs at least one component.'
        raise ConstructionError(msg)
    expected = product_ring([part.ring for part in parts])
    if ring is not None and ring != expected:
        msg = f'Product module components do not match the ring {ring}.'
        raise ConstructionError(msg)
    tuples = list(itertools.product(*(part.indices for part in parts)))
    slot = {coords: raw for raw, coords in enumerate(tuples)}
    ring_coords = {
        expected.index(tuple(part.ring.encode(c) for part, c in zip(parts, combo, strict=True))):
        combo
        for combo in itertools.product(*(part.ring.indices for part in parts))
    }

    def add(m: int, n: int) -> int:
        return slot[
            tuple(
                part.add(a, b) for part, a, b in zip(parts, tuples[m], tuples[n], strict=True)
            )
        ]

    def act(r: int, m: int) -> int:
        return slot[
            tuple(
                part.act(a, b)
                for part, a, b in zip(parts, ring_coords[r], tuples[m], strict=True)
            )
        ]

    return assemble_module(
        ProductModule(parts),
        expected,
        [tuple(part.encode(c) for part, c in zip(parts, coords, strict=True)) for coords in tuples],
        add,
        act,
        zero=slot[tuple(part.zero for part in parts)],
    )


def direct_sum(components: Sequence[ModuleDescriptor]) -> ModuleDescriptor:
    """M_1 (+) ... (+) M_k over their common ring; r acts on every coordinate."""
    parts = tuple(components)
    if len(parts) < 2:  # noqa: PLR2004
        msg = 'A direct sum needs at least two summands.'
        raise ConstructionError(msg)
    ring = parts[0].ring
    if any(part.ring != ring for part in parts[1:]):
        msg = 'Direct summands must be modules over the same ring.'
        raise ConstructionError(msg)
    tuples = list(itertools.product(*(part.indices for part in parts)))
    slot = {coords: raw for raw, coords in enumerate(tuples)}

    def add(m: int, n: int) -> int:
        return slot[
            tuple(
                part.add(a, b) for part, a, b in zip(parts, tuples[m], tuples[n], strict=True)
            )
        ]

    def act(r: int, m: int) -> int:
        return slot[tuple(part.act(r, a) for part, a in zip(parts, tuples[m], strict=True))]

    return assemble_module(
        DirectSum(parts),
        ring,
        [tuple(part.encode(c) for part, c in zip(parts, coords, strict=True)) for coords in tuples],
        add,
        act,
        zero=slot[tuple(part.zero for part in parts)],
    )


@dataclass(frozen=True, slots=True)
class Submodule:
    """A submodule given by its explicit element positions."""

    module: ModuleDescriptor
    elements: frozenset[int]

    def __contains__(self, m: object) -> bool:
        return m in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __str__(self) -> str:
        inner = ', '.join(repr(e) for e in self.encodings())
        return f'{{{inner}}}'

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.module.size

    def issubset(self, other: Submodule) -> bool:
        return self.elements <= other.elements

    def encodings(self) -> tuple[Encoding, ...]:
        return tuple(self.module.encode(m) for m in sorted(self.elements))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), tuple(sorted(self.elements)))


def submodule(module: ModuleDescriptor, elements: Iterable[int]) -> Submodule:
    """Validate ``elements`` as a submodule (0, sums, scalar multiples)."""
    members = frozenset(elements)
    if any(m not in module.indices for m in members):
        msg = 'Submodule elements must be positions of module elements.'
        raise ConstructionError(msg)
    enc = module.encode
    if module.zero not in members:
        raise AxiomViolationError('submodule contains 0', ())
    for m in members:
        for n in members:
            if module.add(m, n) not in members:
                raise AxiomViolationError('submodule closed under addition', (enc(m), enc(n)))
        for r in module.ring.indices:
            if module.act(r, m) not in members:
                raise AxiomViolationError(
                    'submodule closed under scalars', (module.ring.encode(r), enc(m))
                )
    return Submodule(module, members)


def zero_submodule(module: ModuleDescriptor) -> Submodule:
    return Submodule(module, frozenset({module.zero}))


def full_submodule(module: ModuleDescriptor) -> Submodule:
    return Submodule(module, frozenset(module.indices))


def cyclic_submodule(module: ModuleDescriptor, m: int) -> Submodule:
    """Rm."""
    return Submodule(module, frozenset(module.act(r, m) for r in module.ring.indices))


def submodule_sum(first: Submodule, second: Submodule) -> Submodule:
    module = first.module
    return Submodule(
        module, frozenset(module.add(a, b) for a in first.elements for b in second.elements)
    )


def submodule_intersection(first: Submodule, second: Submodule) -> Submodule:
    return Submodule(first.module, first.elements & second.elements)


def generated_submodule(module: ModuleDescriptor, generators: Iterable[int]) -> Submodule:
    """Smallest submodule containing ``generators``."""
    return reduce(
        submodule_sum,
        (cyclic_submodule(module, g) for g in generators),
        zero_submodule(module),
    )


@lru_cache(maxsize=512)
def _submodule_lattice(module: ModuleDescriptor) -> tuple[Submodule, ...]:
    found = {cyclic_submodule(module, m).elements for m in module.indices}
    frontier = set(found)
    while frontier:
        fresh: set[frozenset[int]] = set()
        for a in frontier:
            for b in found:
                total = frozenset(module.add(x, y) for x in a for y in b)
                if total not in found:
                    fresh.add(total)
        found |= fresh
        frontier = fresh
    return tuple(
        sorted((Submodule(module, members) for members in found), key=Submodule.sort_key)
    )


def enumerate_submodules(module: ModuleDescriptor) -> tuple[Submodule, ...]:
    """Complete submodule lattice via sums of cyclic submodules."""
    require_enumerable(f'module {module}', module.size)
    return _submodule_lattice(module)


def colon_r(target: Submodule, source: Submodule) -> Ideal:
    """(N :_R K) = { r : rK in N }."""
    module = target.module
    ring = module.ring
    return Ideal(
        ring,
        frozenset(
            r
            for r in ring.indices
            if all(module.act(r, k) in target.elements for k in source.elements)
        ),
    )


def annihilator(module: ModuleDescriptor) -> Ideal:
    """Ann_R(M) = (0 :_R M)."""
    return colon_r(zero_submodule(module), full_submodule(module))


def is_faithful(module: ModuleDescriptor) -> bool:
    return len(annihilator(module)) == 1


def colon_m(target: Submodule, scalars: Ideal | int) -> Submodule:
    """(N :_M J) = { m : Jm in N }; an integer ``s`` stands for the ideal Rs."""
    module = target.module
    if isinstance(scalars, int):
        scalars = principal_ideal(module.ring, scalars)
    return Submodule(
        module,
        frozenset(
            m
            for m in module.indices
            if all(module.act(j, m) in target.elements for j in scalars.elements)
        ),
    )


def ideal_times(scalars: Ideal, target: Submodule) -> Submodule:
    """IN, the submodule generated by the products ``i n``."""
    module = target.module
    return generated_submodule(
        module, {module.act(i, n) for i in scalars.elements for n in target.elements}
    )


@dataclass(frozen=True, slots=True)
class MultiplicationVerdict:
    holds: bool
    counterexample: Submodule | None = None


@lru_cache(maxsize=256)
def _multiplication_verdict(module: ModuleDescriptor) -> MultiplicationVerdict:
    whole = full_submodule(module)
    for candidate in reversed(_submodule_lattice(module)):
        if ideal_times(colon_r(candidate, whole), whole) != candidate:
            return MultiplicationVerdict(holds=False, counterexample=candidate)
    return MultiplicationVerdict(holds=True)


def is_multiplication(module: ModuleDescriptor) -> MultiplicationVerdict:
    """Every submodule N equals (N :_R M) M.

    The counterexample is the greatest failing submodule in canonical order.
    """
    require_enumerable(f'module {module}', module.size)
    return _multiplication_verdict(module)


def submodule_product(first: Submodule, second: Submodule) -> Submodule:
    """KL = (K :_R M)(L :_R M) M."""
    whole = full_submodule(first.module)
    left, right = colon_r(first, whole), colon_r(second, whole)
    return ideal_times(left, ideal_times(right, whole))


def satisfies_prime_condition(candidate: Submodule) -> bool:
    """Proper, and rm in P forces r in (P:M) or m in P."""
    if not candidate.is_proper:
        return False
    module = candidate.module
    colon = colon_r(candidate, full_submodule(module)).elements
    members = candidate.elements
    return all(
        r in colon or m in members
        for r in module.ring.indices
        for m in module.indices
        if module.act(r, m) in members
    )


def prime_submodules(module: ModuleDescriptor) -> tuple[Submodule, ...]:
    return tuple(c for c in enumerate_submodules(module) if satisfies_prime_condition(c))


def rad_submodule(target: Submodule) -> Submodule:
    """Intersection of the prime submodules containing N; rad(M) = M."""
    module = target.module
    containing = [p for p in prime_submodules(module) if target.issubset(p)]
    return reduce(submodule_intersection, containing, full_submodule(module))


def _require_maximal(maximal: Ideal) -> None:
    if not is_maximal_ideal(maximal):
        msg = f'{maximal} is not a maximal ideal of {maximal.ring}.'
        raise NotMaximalError(msg)


def t_p(module: ModuleDescriptor, maximal: Ideal) -> Submodule:
    """T_p(M) = { m : (1 - r)m = 0 for some r in p }."""
    _require_maximal(maximal)
    ring = module.ring
    return submodule(
        module,
        (
            m
            for m in module.indices
            if any(
                module.act(ring.sub(ring.one, r), m) == module.zero for r in maximal.elements
            )
        ),
    )


@dataclass(frozen=True, slots=True)
class PCyclicVerdict:
    holds: bool
    witness: tuple[int, int] | None = None


def is_p_cyclic(module: ModuleDescriptor, maximal: Ideal) -> PCyclicVerdict:
    """Search the least (q, m) with q in p and (1 - q)M inside Rm."""
    _require_maximal(maximal)
    ring = module.ring
    for q in sorted(maximal.elements):
        unit_part = ring.sub(ring.one, q)
        scaled = {module.act(unit_part, m) for m in module.indices}
        for m in module.indices:
            if scaled <= cyclic_submodule(module, m).elements:
                return PCyclicVerdict(holds=True, witness=(q, m))
    return PCyclicVerdict(holds=False)


def quotient_module(base: ModuleDescriptor, sub: Submodule) -> tuple[ModuleDescriptor, ModuleHom]:
    """M/N together with the canonical projection."""
    if sub.module != base:
        msg = 'The submodule must belong to the module being divided.'
        raise ConstructionError(msg)
    representative = [-1] * base.size
    for m in base.indices:
        if representative[m] >= 0:
            continue
        for n in sub.elements:
            representative[base.add(m, n)] = m
    reps = sorted(set(representative))
    slot = {rep: raw for raw, rep in enumerate(reps)}
    quotient = assemble_module(
        QuotientModule(base, sub.elements),
        base.ring,
        [base.encode(rep) for rep in reps],
        lambda x, y: slot[representative[base.add(reps[x], reps[y])]],
        lambda r, x: slot[representative[base.act(r, reps[x])]],
        zero=slot[representative[base.zero]],
    )
    table = tuple(quotient.index(base.encode(representative[m])) for m in base.indices)
    return quotient, ModuleHom(base, quotient, table)


def submodule_module(sub: Submodule) -> tuple[ModuleDescriptor, ModuleHom]:
    """L as a module, with its inclusion into the ambient module."""
    base = sub.module
    members = sorted(sub.elements)
    slot = {m: raw for raw, m in enumerate(members)}
    inner = assemble_module(
        SubmoduleAsModule(base, sub.elements),
        base.ring,
        [base.encode(m) for m in members],
        lambda x, y: slot[base.add(members[x], members[y])],
        lambda r, x: slot[base.act(r, members[x])],
        zero=slot[base.zero],
    )
    table = tuple(base.index(inner.encode(x)) for x in inner.indices)
    return inner, ModuleHom(inner, base, table)


@dataclass(frozen=True, slots=True)
class ModuleHom:
    """An R-linear map stored as a total table of positions."""

    domain: ModuleDescriptor
    codomain: ModuleDescriptor
    table: tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.table[m]

    @property
    def is_epimorphism(self) -> bool:
        return len(set(self.table)) == self.codomain.size


def module_hom(
    domain: ModuleDescriptor, codomain: ModuleDescriptor, table: Sequence[int]
) -> ModuleHom:
    """Validate additivity and linearity of ``table`` on every input."""
    if domain.ring != codomain.ring:
        msg = 'Homomorphisms must connect modules over the same ring.'
        raise ConstructionError(msg)
    if len(table) != domain.size or any(v not in codomain.indices for v in table):
        msg = 'The map must send every domain element to a codomain element.'
        raise ConstructionError(msg)
    f = tuple(table)
    for m in domain.indices:
        for n in domain.indices:
            if f[domain.add(m, n)] != codomain.add(f[m], f[n]):
                raise AxiomViolationError(
                    'f(x + y) = f(x) + f(y)', (domain.encode(m), domain.encode(n))
                )
        for r in domain.ring.indices:
            if f[domain.act(r, m)] != codomain.act(r, f[m]):
                raise AxiomViolationError(
                    'f(r x) = r f(x)', (domain.ring.encode(r), domain.encode(m))
                )
    return ModuleHom(domain, codomain, f)


def identity_hom(module: ModuleDescriptor) -> ModuleHom:
    return ModuleHom(module, module, tuple(module.indices))


def _require_owner(sub: Submodule, module: ModuleDescriptor, role: str) -> None:
    if sub.module != module:
        msg = f'{sub} is a submodule of {sub.module}, not of the {role} {module}.'
        raise ConstructionError(msg)


def hom_image(f: ModuleHom, sub: Submodule) -> Submodule:
    _require_owner(sub, f.domain, 'domain')
    return submodule(f.codomain, {f.table[m] for m in sub.elements})


def hom_preimage(f: ModuleHom, sub: Submodule) -> Submodule:
    _require_owner(sub, f.codomain, 'codomain')
    return submodule(f.domain, {m for m in f.domain.indices if f.table[m] in sub.elements})


def hom_kernel(f: ModuleHom) -> Submodule:
    return hom_preimage(f, zero_submodule(f.codomain))


def _generators(module: ModuleDescriptor) -> list[int]:
    chosen: list[int] = []
    span = zero_submodule(module)
    for m in module.indices:
        if m not in span.elements:
            chosen.append(m)
            span = submodule_sum(span, cyclic_submodule(module, m))
    return chosen


def enumerate_homs(domain: ModuleDescriptor, codomain: ModuleDescriptor) -> tuple[ModuleHom, ...]:
    """Every R-linear map, found by extending generator images and validating."""
    if domain.ring != codomain.ring:
        return ()
    ring = domain.ring
    gens = _generators(domain)
    found: list[ModuleHom] = []
    for images in itertools.product(codomain.indices, repeat=len(gens)):
        table = [-1] * domain.size
        consistent = True
        for coeffs in itertools.product(ring.indices, repeat=len(gens)):
            source, target = domain.zero, codomain.zero
            for r, g, image in zip(coeffs, gens, images, strict=True):
                source = domain.add(source, domain.act(r, g))
                target = codomain.add(target, codomain.act(r, image))
            if table[source] < 0:
                table[source] = target
            elif table[source] != target:
                consistent = False
                break
        if consistent:
            try:
                found.append(module_hom(domain, codomain, table))
            except AxiomViolationError:
                continue
    return tuple(sorted(found, key=lambda hom: hom.table))
