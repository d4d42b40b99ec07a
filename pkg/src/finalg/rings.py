"""Finite commutative rings with exact table arithmetic and their ideal theory.

Every ring is materialised: its elements are listed in canonical order
(lexicographic on encodings) and addition/multiplication are lookup tables.
Throughout the package an element is addressed by its position in that order,
so ``0 <= x < ring.size``; :meth:`RingDescriptor.encode` and
:meth:`RingDescriptor.index` translate to and from the canonical encoding.
For ``Zmod(n)`` the position of a residue is the residue itself.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from typing import TYPE_CHECKING, Union

from .errors import AxiomViolationError, CapExceededError, ConstructionError
from .settings import get_limits

if TYPE_CHECKING:
    from .modules import ModuleDescriptor

Encoding = Union[int, tuple['Encoding', ...]]  # noqa: UP007

__all__ = [
    "Encoding",
    "Ideal",
    "IdealizationOf",
    "LocalizationOf",
    "MultClosedSet",
    "ProductOf",
    "QuotientOf",
    "RingDescriptor",
    "Spectrum",
    "Zmod",
    "assemble_ring",
    "colon_ideal",
    "enumerate_ideals",
    "enumerate_mult_closed",
    "generated_ideal",
    "ideal",
    "ideal_intersection",
    "ideal_product",
    "ideal_spectrum",
    "ideal_sum",
    "idealization_ring",
    "image_mult_closed",
    "is_maximal_ideal",
    "is_primary_ideal",
    "is_prime_ideal",
    "is_quasi_local",
    "principal_ideal",
    "prime_complement",
    "product_ring",
    "quotient_projection",
    "quotient_ring",
    "radical_ideal",
    "require_enumerable",
    "ring_units",
    "unit_ideal",
    "validate_mult_closed",
    "zero_ideal",
    "zmod",
]


@dataclass(frozen=True, slots=True)
class Zmod:
    """The residue ring Z/n."""

    n: int


@dataclass(frozen=True, slots=True)
class ProductOf:
    """Direct product of component rings."""

    components: tuple[RingDescriptor, ...]


@dataclass(frozen=True, slots=True)
class QuotientOf:
    """Quotient of ``base`` by the ideal whose positions are ``modulus``."""

    base: RingDescriptor
    modulus: frozenset[int]


@dataclass(frozen=True, slots=True)
class IdealizationOf:
    """The idealization R(+)M with (a,m)(b,m') = (ab, am' + bm)."""

    base: RingDescriptor
    carrier: ModuleDescriptor


@dataclass(frozen=True, slots=True)
class LocalizationOf:
    """Ring of fractions of ``base`` with denominators from ``denominators``."""

    base: RingDescriptor
    denominators: frozenset[int]


RingConstruction = Zmod | ProductOf | QuotientOf | IdealizationOf | LocalizationOf


@dataclass(frozen=True, eq=False)
class RingDescriptor:
    """A finite commutative ring with identity.

    Equality and hashing follow the construction tree, so two independently
    built copies of ``Zmod(4)`` compare equal.
    """

    construction: RingConstruction
    elements: tuple[Encoding, ...]
    add_table: tuple[tuple[int, ...], ...] = field(repr=False)
    mul_table: tuple[tuple[int, ...], ...] = field(repr=False)
    neg_table: tuple[int, ...] = field(repr=False)
    zero: int
    one: int

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self.construction == other.construction

    def __hash__(self) -> int:
        return hash(self.construction)

    def __str__(self) -> str:
        return describe_ring(self)

    @property
    def size(self) -> int:
        """Number of elements (the ring's cardinality)."""
        return len(self.elements)

    @property
    def indices(self) -> range:
        return range(len(self.elements))

    @cached_property
    def _positions(self) -> dict[Encoding, int]:
        return {encoding: position for position, encoding in enumerate(self.elements)}

    def index(self, encoding: Encoding) -> int:
        """Return the position of ``encoding``; raise ``ConstructionError`` if absent."""
        try:
            return self._positions[encoding]
        except (KeyError, TypeError):
            msg = f'{encoding!r} is not an element of {self}.'
            raise ConstructionError(msg) from None

    def encode(self, x: int) -> Encoding:
        return self.elements[x]

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x][self.neg_table[y]]

    def power(self, x: int, exponent: int) -> int:
        """Return ``x ** exponent`` for ``exponent >= 0``."""
        if exponent < 0:
            msg = 'Negative exponents are not defined in a ring.'
            raise ValueError(msg)
        result = self.one
        base = x
        while exponent:
            if exponent & 1:
                result = self.mul_table[result][base]
            base = self.mul_table[base][base]
            exponent >>= 1
        return result

    def is_nilpotent_modulo(self, x: int, target: frozenset[int]) -> bool:
        """Return ``True`` when some power ``x**t`` (1 <= t <= |R|) lies in ``target``."""
        value = x
        for _ in range(self.size):
            if value in target:
                return True
            value = self.mul_table[value][x]
        return False


def describe_ring(ring: RingDescriptor) -> str:
    """Human-readable name for the construction tree."""
    construction = ring.construction
    if isinstance(construction, Zmod):
        return f'Z/{construction.n}'
    if isinstance(construction, ProductOf):
        return ' x '.join(f'({describe_ring(part)})' for part in construction.components)
    if isinstance(construction, QuotientOf):
        return f'({describe_ring(construction.base)})/I[{len(construction.modulus)}]'
    if isinstance(construction, IdealizationOf):
        return f'({describe_ring(construction.base)})(+){construction.carrier}'
    return f'S^-1({describe_ring(construction.base)})'


def assemble_ring(
    construction: RingConstruction,
    encodings: Sequence[Encoding],
    add: Callable[[int, int], int],
    mul: Callable[[int, int], int],
    *,
    zero: int,
    one: int,
) -> RingDescriptor:
    """Materialise a ring from raw operations on positions of ``encodings``.

    The raw order is re-sorted canonically; the ring axioms are audited when the
    cardinality is within the configured audit bound.
    """
    size = len(encodings)
    if size < 2:  # noqa: PLR2004
        msg = 'A ring with identity must satisfy 1 != 0 (cardinality at least 2).'
        raise ConstructionError(msg)
    order = sorted(range(size), key=lambda raw: encodings[raw])
    position = [0] * size
    for new, raw in enumerate(order):
        position[raw] = new
    add_table = tuple(
        tuple(position[add(order[i], order[j])] for j in range(size)) for i in range(size)
    )
    mul_table = tuple(
        tuple(position[mul(order[i], order[j])] for j in range(size)) for i in range(size)
    )
    zero_pos = position[zero]
    if zero_pos == position[one]:
        msg = 'A ring with identity must satisfy 1 != 0.'
        raise ConstructionError(msg)
    neg_table = tuple(add_table[x].index(zero_pos) for x in range(size))
    ring = RingDescriptor(
        construction=construction,
        elements=tuple(encodings[raw] for raw in order),
        add_table=add_table,
        mul_table=mul_table,
        neg_table=neg_table,
        zero=zero_pos,
        one=position[one],
    )
    if size <= get_limits().audit_bound:
        audit_ring(ring)
    return ring


def audit_ring(ring: RingDescriptor) -> None:
    """Check every ring axiom on all element pairs and triples."""
    add, mul, enc = ring.add_table, ring.mul_table, ring.encode
    for x in ring.indices:
        if add[x][ring.zero] != x:
            raise AxiomViolationError('additive identity', (enc(x),))
        if mul[x][ring.one] != x:
            raise AxiomViolationError('multiplicative identity', (enc(x),))
        for y in ring.indices:
            if add[x][y] != add[y][x]:
                raise AxiomViolationError('additive commutativity', (enc(x), enc(y)))
            if mul[x][y] != mul[y][x]:
                raise AxiomViolationError('commutativity', (enc(x), enc(y)))
            for z in ring.indices:
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise AxiomViolationError('additive associativity', (enc(x), enc(y), enc(z)))
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise AxiomViolationError('associativity', (enc(x), enc(y), enc(z)))
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    raise AxiomViolationError('distributivity', (enc(x), enc(y), enc(z)))


@lru_cache(maxsize=256)
def zmod(n: int) -> RingDescriptor:
    """Return Z/n for ``n >= 2``."""
    if n < 2:  # noqa: PLR2004
        msg = f'Z/n requires n >= 2, got {n}.'
        raise ConstructionError(msg)
    return assemble_ring(
        Zmod(n),
        list(range(n)),
        lambda x, y: (x + y) % n,
        lambda x, y: (x * y) % n,
        zero=0,
        one=1 % n,
    )


def product_ring(components: Sequence[RingDescriptor]) -> RingDescriptor:
    """Direct product with componentwise operations."""
    parts = tuple(components)
    if not parts:
        msg = 'A product ring needs at least one component.'
        raise ConstructionError(msg)
    tuples = list(itertools.product(*(part.indices for part in parts)))
    slot = {coords: raw for raw, coords in enumerate(tuples)}

    def combine(op: Callable[[RingDescriptor, int, int], int]) -> Callable[[int, int], int]:
        def apply(x: int, y: int) -> int:
            return slot[
                tuple(
                    op(part, a, b) for part, a, b in zip(parts, tuples[x], tuples[y], strict=True)
                )
            ]

        return apply

    return assemble_ring(
        ProductOf(parts),
        [tuple(part.encode(c) for part, c in zip(parts, coords, strict=True)) for coords in tuples],
        combine(RingDescriptor.add),
        combine(RingDescriptor.mul),
        zero=slot[tuple(part.zero for part in parts)],
        one=slot[tuple(part.one for part in parts)],
    )


def _coset_representatives(ring: RingDescriptor, modulus: frozenset[int]) -> list[int]:
    """Map every position to the least position of its coset."""
    representative = [-1] * ring.size
    for x in ring.indices:
        if representative[x] >= 0:
            continue
        for i in modulus:
            representative[ring.add(x, i)] = x
    return representative


def quotient_ring(base: RingDescriptor, modulus: Ideal) -> RingDescriptor:
    """Return R/I; the class of ``x`` is encoded by the least element of ``x + I``."""
    if modulus.ring != base:
        msg = 'The modulus must be an ideal of the base ring.'
        raise ConstructionError(msg)
    if not modulus.is_proper:
        msg = 'Cannot form the quotient by the unit ideal.'
        raise ConstructionError(msg)
    representative = _coset_representatives(base, modulus.elements)
    reps = sorted(set(representative))
    slot = {rep: raw for raw, rep in enumerate(reps)}
    return assemble_ring(
        QuotientOf(base, modulus.elements),
        [base.encode(rep) for rep in reps],
        lambda x, y: slot[representative[base.add(reps[x], reps[y])]],
        lambda x, y: slot[representative[base.mul(reps[x], reps[y])]],
        zero=slot[representative[base.zero]],
        one=slot[representative[base.one]],
    )


def quotient_projection(quotient: RingDescriptor) -> tuple[int, ...]:
    """Canonical projection R -> R/I as a table indexed by base positions."""
    construction = quotient.construction
    if not isinstance(construction, QuotientOf):
        msg = f'{quotient} is not a quotient ring.'
        raise ConstructionError(msg)
    base = construction.base
    representative = _coset_representatives(base, construction.modulus)
    return tuple(quotient.index(base.encode(representative[x])) for x in base.indices)


def idealization_ring(base: RingDescriptor, carrier: ModuleDescriptor) -> RingDescriptor:
    """Return R(+)M, whose elements are pairs ``(a, m)``."""
    if carrier.ring != base:
        msg = 'The idealization carrier must be a module over the base ring.'
        raise ConstructionError(msg)
    width = carrier.size

    def add(x: int, y: int) -> int:
        (a, m), (b, n) = divmod(x, width), divmod(y, width)
        return base.add(a, b) * width + carrier.add(m, n)

    def mul(x: int, y: int) -> int:
        (a, m), (b, n) = divmod(x, width), divmod(y, width)
        second = carrier.add(carrier.act(a, n), carrier.act(b, m))
        return base.mul(a, b) * width + second

    return assemble_ring(
        IdealizationOf(base, carrier),
        [(base.encode(a), carrier.encode(m)) for a in base.indices for m in carrier.indices],
        add,
        mul,
        zero=base.zero * width + carrier.zero,
        one=base.one * width + carrier.zero,
    )


@dataclass(frozen=True, slots=True)
class Ideal:
    """An ideal given by its explicit element positions."""

    ring: RingDescriptor
    elements: frozenset[int]

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __str__(self) -> str:
        inner = ', '.join(repr(e) for e in self.encodings())
        return f'{{{inner}}}'

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.elements

    def issubset(self, other: Ideal) -> bool:
        return self.elements <= other.elements

    def encodings(self) -> tuple[Encoding, ...]:
        return tuple(self.ring.encode(x) for x in sorted(self.elements))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), tuple(sorted(self.elements)))


def _check_ideal(ring: RingDescriptor, members: frozenset[int]) -> None:
    enc = ring.encode
    if ring.zero not in members:
        raise AxiomViolationError('ideal contains 0', ())
    for x in members:
        if ring.neg(x) not in members:
            raise AxiomViolationError('ideal closed under negation', (enc(x),))
        for y in members:
            if ring.add(x, y) not in members:
                raise AxiomViolationError('ideal closed under addition', (enc(x), enc(y)))
        for r in ring.indices:
            if ring.mul(r, x) not in members:
                raise AxiomViolationError('ideal absorbs multiplication', (enc(r), enc(x)))


def ideal(ring: RingDescriptor, elements: Iterable[int]) -> Ideal:
    """Validate ``elements`` as an ideal of ``ring``."""
    members = frozenset(elements)
    if any(x not in ring.indices for x in members):
        msg = 'Ideal elements must be positions of ring elements.'
        raise ConstructionError(msg)
    _check_ideal(ring, members)
    return Ideal(ring, members)


def zero_ideal(ring: RingDescriptor) -> Ideal:
    return Ideal(ring, frozenset({ring.zero}))


def unit_ideal(ring: RingDescriptor) -> Ideal:
    return Ideal(ring, frozenset(ring.indices))


def principal_ideal(ring: RingDescriptor, x: int) -> Ideal:
    """Return Rx."""
    return Ideal(ring, frozenset(ring.mul(r, x) for r in ring.indices))


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    ring = first.ring
    return Ideal(ring, frozenset(ring.add(a, b) for a in first.elements for b in second.elements))


def ideal_intersection(first: Ideal, second: Ideal) -> Ideal:
    return Ideal(first.ring, first.elements & second.elements)


def generated_ideal(ring: RingDescriptor, generators: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``generators``."""
    return reduce(
        ideal_sum,
        (principal_ideal(ring, g) for g in generators),
        zero_ideal(ring),
    )


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    """IJ, the ideal generated by all products ``ij``."""
    ring = first.ring
    return generated_ideal(
        ring, {ring.mul(a, b) for a in first.elements for b in second.elements}
    )


def colon_ideal(target: Ideal, s: int) -> Ideal:
    """(I :_R s) = { r : s r in I }."""
    ring = target.ring
    return Ideal(ring, frozenset(r for r in ring.indices if ring.mul(s, r) in target.elements))


def ring_units(ring: RingDescriptor) -> frozenset[int]:
    """u(R) = { x : xy = 1 for some y }."""
    return frozenset(x for x in ring.indices if ring.one in ring.mul_table[x])


def require_enumerable(what: str, size: int) -> None:
    cap = get_limits().enumeration_cap
    if size > cap:
        raise CapExceededError(what, size, cap)


@lru_cache(maxsize=512)
def _ideal_lattice(ring: RingDescriptor) -> tuple[Ideal, ...]:
    found = {principal_ideal(ring, x).elements for x in ring.indices}
    frontier = set(found)
    while frontier:
        fresh: set[frozenset[int]] = set()
        for a in frontier:
            for b in found:
                total = frozenset(ring.add(x, y) for x in a for y in b)
                if total not in found:
                    fresh.add(total)
        found |= fresh
        frontier = fresh
    ideals = (Ideal(ring, members) for members in found)
    return tuple(sorted(ideals, key=Ideal.sort_key))


def enumerate_ideals(ring: RingDescriptor) -> tuple[Ideal, ...]:
    """Complete ideal lattice, computed by closing principal ideals under sums."""
    require_enumerable(f'ring {ring}', ring.size)
    return _ideal_lattice(ring)


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Prime and maximal ideals together with the Jacobson radical."""

    primes: tuple[Ideal, ...]
    maximals: tuple[Ideal, ...]
    jacobson: Ideal


def is_prime_ideal(candidate: Ideal) -> bool:
    ring, members = candidate.ring, candidate.elements
    if not candidate.is_proper:
        return False
    return all(
        a in members or b in members
        for a in ring.indices
        for b in ring.indices
        if ring.mul(a, b) in members
    )


def is_primary_ideal(candidate: Ideal) -> bool:
    """Proper, and ab in I forces b in I or a in the radical of I."""
    ring, members = candidate.ring, candidate.elements
    if not candidate.is_proper:
        return False
    root = radical_ideal(candidate).elements
    return all(
        b in members or a in root
        for a in ring.indices
        for b in ring.indices
        if ring.mul(a, b) in members
    )


@lru_cache(maxsize=512)
def _spectrum(ring: RingDescriptor) -> Spectrum:
    lattice = _ideal_lattice(ring)
    proper = [candidate for candidate in lattice if candidate.is_proper]
    primes = tuple(candidate for candidate in proper if is_prime_ideal(candidate))
    maximals = tuple(
        candidate
        for candidate in proper
        if not any(candidate.elements < other.elements for other in proper)
    )
    jacobson = reduce(ideal_intersection, maximals, unit_ideal(ring))
    return Spectrum(primes=primes, maximals=maximals, jacobson=jacobson)


def ideal_spectrum(ring: RingDescriptor) -> Spectrum:
    """Spec(R), Max(R) and Jac(R)."""
    require_enumerable(f'ring {ring}', ring.size)
    return _spectrum(ring)


def is_maximal_ideal(candidate: Ideal) -> bool:
    return candidate in ideal_spectrum(candidate.ring).maximals


def is_quasi_local(ring: RingDescriptor) -> bool:
    """``True`` when the ring has exactly one maximal ideal."""
    return len(ideal_spectrum(ring).maximals) == 1


def radical_ideal(target: Ideal) -> Ideal:
    """{ r : r^t in I for some 1 <= t <= |R| }."""
    ring = target.ring
    return Ideal(
        ring,
        frozenset(r for r in ring.indices if ring.is_nilpotent_modulo(r, target.elements)),
    )


@dataclass(frozen=True, slots=True)
class MultClosedSet:
    """A validated multiplicatively closed subset (1 in S, 0 not in S)."""

    ring: RingDescriptor
    elements: frozenset[int]

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        inner = ', '.join(repr(e) for e in self.encodings())
        return f'{{{inner}}}'

    @property
    def members(self) -> tuple[int, ...]:
        """Members in canonical order (the order witnesses are searched in)."""
        return tuple(sorted(self.elements))

    def encodings(self) -> tuple[Encoding, ...]:
        return tuple(self.ring.encode(x) for x in self.members)

    def meets(self, other: Ideal) -> bool:
        return not self.elements.isdisjoint(other.elements)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), self.members)


def validate_mult_closed(ring: RingDescriptor, elements: Iterable[int]) -> MultClosedSet:
    """Check 1 in S, 0 not in S and closure; report the offending pair on failure."""
    members = frozenset(elements)
    if any(x not in ring.indices for x in members):
        msg = 'Set elements must be positions of ring elements.'
        raise ConstructionError(msg)
    if ring.one not in members:
        raise AxiomViolationError('1 in S', (ring.encode(ring.one),), 'missing identity')
    if ring.zero in members:
        raise AxiomViolationError('0 not in S', (ring.encode(ring.zero),), 'contains zero')
    for x in sorted(members):
        for y in sorted(members):
            product = ring.mul(x, y)
            if product not in members:
                raise AxiomViolationError(
                    'S closed under products',
                    (ring.encode(x), ring.encode(y)),
                    f'product {ring.encode(product)!r} is not in S',
                )
    return MultClosedSet(ring, members)


def _multiplicative_closure(ring: RingDescriptor, seed: frozenset[int]) -> frozenset[int]:
    closed = set(seed) | {ring.one}
    frontier = list(closed)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(closed):
                product = ring.mul(x, y)
                if product not in closed:
                    closed.add(product)
                    fresh.append(product)
        frontier = fresh
    return frozenset(closed)


@lru_cache(maxsize=256)
def _mult_closed_sets(ring: RingDescriptor) -> tuple[MultClosedSet, ...]:
    start = _multiplicative_closure(ring, frozenset())
    found = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for current in frontier:
            for x in ring.indices:
                if x in current or x == ring.zero:
                    continue
                grown = _multiplicative_closure(ring, current | {x})
                if ring.zero in grown or grown in found:
                    continue
                found.add(grown)
                fresh.append(grown)
        frontier = fresh
    sets = (MultClosedSet(ring, members) for members in found)
    return tuple(sorted(sets, key=MultClosedSet.sort_key))


def enumerate_mult_closed(ring: RingDescriptor) -> tuple[MultClosedSet, ...]:
    """All multiplicatively closed subsets, in canonical order."""
    cap = get_limits().subset_cap
    if ring.size > cap:
        raise CapExceededError(f'subsets of {ring}', ring.size, cap)
    return _mult_closed_sets(ring)


def prime_complement(prime: Ideal) -> MultClosedSet:
    """R - p for a prime ideal p."""
    if not is_prime_ideal(prime):
        msg = f'{prime} is not a prime ideal.'
        raise ConstructionError(msg)
    ring = prime.ring
    return validate_mult_closed(ring, set(ring.indices) - prime.elements)


def image_mult_closed(subset: MultClosedSet, quotient: RingDescriptor) -> MultClosedSet:
    """pi(S) in R/I; fails with ``AxiomViolationError`` when S meets I."""
    projection = quotient_projection(quotient)
    return validate_mult_closed(quotient, {projection[s] for s in subset.elements})
