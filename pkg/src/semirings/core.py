"""Finite semirings as explicit operation tables.

A semiring is a carrier {0, .., order-1} with addition and multiplication
given by full Cayley tables: (S, +) a commutative monoid with identity
`zero`, (S, *) a monoid with identity `one`, two-sided distributivity, and
`zero` annihilating everything.  Everything in this module is a pure read
over immutable tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class SemiringError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedTableError(SemiringError):
    """Tables are structurally broken, before any axiom is judged."""


class InvalidSemiringError(SemiringError):
    """Well-formed tables that violate at least one semiring axiom."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(
            f"{len(report.violations)} axiom violation(s), "
            f"first: {first.axiom} at witness {first.witness}"
        )


class DomainError(SemiringError):
    """An operation was applied outside its documented domain."""


class InternalCheckError(SemiringError):
    """A check that provably cannot fail did fail; a bug, not bad input."""


@dataclass(frozen=True)
class AxiomViolation:
    # witness is always a triple; axioms quantifying fewer than three
    # elements pad the unused trailing positions with 0.
    axiom: str
    witness: tuple[int, int, int]


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: tuple[AxiomViolation, ...]


@dataclass(frozen=True)
class ElementSet:
    """Subset of a fixed carrier, stored as a bitmask."""

    mask: int
    carrier_order: int

    @classmethod
    def empty(cls, order: int) -> "ElementSet":
        return cls(0, order)

    @classmethod
    def full(cls, order: int) -> "ElementSet":
        return cls((1 << order) - 1, order)

    @classmethod
    def of(cls, members: Iterable[int], order: int) -> "ElementSet":
        mask = 0
        for i in members:
            if not 0 <= i < order:
                raise ValueError(f"element {i} outside carrier of order {order}")
            mask |= 1 << i
        return cls(mask, order)

    def _same_carrier(self, other: "ElementSet") -> None:
        if self.carrier_order != other.carrier_order:
            raise ValueError("set operations require equal carrier orders")

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.carrier_order and bool((self.mask >> i) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def add(self, i: int) -> "ElementSet":
        if not 0 <= i < self.carrier_order:
            raise ValueError(f"element {i} outside carrier")
        return ElementSet(self.mask | (1 << i), self.carrier_order)

    def union(self, other: "ElementSet") -> "ElementSet":
        self._same_carrier(other)
        return ElementSet(self.mask | other.mask, self.carrier_order)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        self._same_carrier(other)
        return ElementSet(self.mask & other.mask, self.carrier_order)

    def difference(self, other: "ElementSet") -> "ElementSet":
        self._same_carrier(other)
        return ElementSet(self.mask & ~other.mask, self.carrier_order)

    def complement(self) -> "ElementSet":
        return ElementSet(~self.mask & ((1 << self.carrier_order) - 1),
                          self.carrier_order)

    def issubset(self, other: "ElementSet") -> bool:
        self._same_carrier(other)
        return self.mask & ~other.mask == 0


@dataclass(frozen=True)
class FiniteSemiring:
    """Validated operation tables with distinguished zero and one.

    Immutable; construct through :func:`make_semiring` so the axioms are
    checked exactly once.
    """

    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    labels: tuple[str, ...]

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def sum(self, xs: Iterable[int]) -> int:
        acc = self.zero
        for x in xs:
            acc = self.add[acc][x]
        return acc

    def product(self, xs: Iterable[int]) -> int:
        acc = self.one
        for x in xs:
            acc = self.mul[acc][x]
        return acc

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def label(self, i: int) -> str:
        return self.labels[i]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise DomainError(f"unknown element label {label!r}") from None

    def __repr__(self) -> str:
        return f"FiniteSemiring(order={self.order}, labels={list(self.labels)})"


@dataclass(frozen=True)
class ClassReport:
    """The distinguished subsets of a semiring, computed exhaustively."""

    idempotents: ElementSet
    nilpotents: ElementSet
    nilidempotents: ElementSet
    additively_invertible: ElementSet
    additive_inverse_witness: dict[int, int]
    center: ElementSet
    units: ElementSet
    unit_witness: dict[int, int]
    nilpotency_index: dict[int, int]


def _tables_as_tuples(table) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


def _check_structure(add, mul, zero: int, one: int) -> int:
    n = len(add)
    if n == 0:
        raise MalformedTableError("tables must have at least one element")
    if len(mul) != n:
        raise MalformedTableError("add and mul tables must have equal order")
    for name, table in (("add", add), ("mul", mul)):
        for i, row in enumerate(table):
            if len(row) != n:
                raise MalformedTableError(f"{name} row {i} has length "
                                          f"{len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise MalformedTableError(
                        f"{name}[{i}][{j}] = {v!r} is not an element index")
    for name, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedTableError(f"{name} = {v!r} is not an element index")
    return n


def validate(add, mul, zero: int, one: int) -> AxiomReport:
    """Check every semiring axiom, listing all violated instances.

    Structural problems (non-square tables, out-of-range entries) raise
    MalformedTableError instead of being reported as axiom violations.
    """
    n = _check_structure(add, mul, zero, one)
    rng = range(n)
    bad: list[AxiomViolation] = []

    for a in rng:
        if add[zero][a] != a or add[a][zero] != a:
            bad.append(AxiomViolation("add-identity", (a, 0, 0)))
        if mul[one][a] != a or mul[a][one] != a:
            bad.append(AxiomViolation("mul-identity", (a, 0, 0)))
        if mul[zero][a] != zero:
            bad.append(AxiomViolation("left-annihilation", (a, 0, 0)))
        if mul[a][zero] != zero:
            bad.append(AxiomViolation("right-annihilation", (a, 0, 0)))
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                bad.append(AxiomViolation("add-commutativity", (a, b, 0)))
    for a in rng:
        for b in rng:
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    bad.append(AxiomViolation("add-associativity", (a, b, c)))
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    bad.append(AxiomViolation("mul-associativity", (a, b, c)))
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    bad.append(AxiomViolation("left-distributivity", (a, b, c)))
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    bad.append(AxiomViolation("right-distributivity", (a, b, c)))
    return AxiomReport(valid=not bad, violations=tuple(bad))


def make_semiring(add, mul, zero: int, one: int,
                  labels: Iterable[str] | None = None) -> FiniteSemiring:
    """Validate tables and build a FiniteSemiring, or raise."""
    report = validate(add, mul, zero, one)
    if not report.valid:
        raise InvalidSemiringError(report)
    n = len(add)
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(labels)
    if len(labels) != n:
        raise MalformedTableError(f"{len(labels)} labels for order {n}")
    if len(set(labels)) != n:
        raise MalformedTableError("labels must be pairwise distinct")
    return FiniteSemiring(order=n, add=_tables_as_tuples(add),
                          mul=_tables_as_tuples(mul),
                          zero=zero, one=one, labels=labels)


def reindex(S: FiniteSemiring, perm: Iterable[int]) -> FiniteSemiring:
    """Relabel S along perm (perm[old] = new index); an isomorphic copy."""
    perm = tuple(perm)
    if sorted(perm) != list(S.elements):
        raise DomainError("perm must be a permutation of the carrier")
    inv = [0] * S.order
    for old, new in enumerate(perm):
        inv[new] = old
    add = tuple(tuple(perm[S.add[inv[i]][inv[j]]] for j in S.elements)
                for i in S.elements)
    mul = tuple(tuple(perm[S.mul[inv[i]][inv[j]]] for j in S.elements)
                for i in S.elements)
    labels = tuple(S.labels[inv[i]] for i in S.elements)
    return FiniteSemiring(order=S.order, add=add, mul=mul,
                          zero=perm[S.zero], one=perm[S.one], labels=labels)


def canonical_slots(S: FiniteSemiring) -> FiniteSemiring:
    """Move zero to index 0 and one to index 1, keeping other relative order."""
    rest = [e for e in S.elements if e not in (S.zero, S.one)]
    order_list = [S.zero] + ([S.one] if S.one != S.zero else []) + rest
    perm = [0] * S.order
    for new, old in enumerate(order_list):
        perm[old] = new
    return reindex(S, perm)


def nilpotency_index(S: FiniteSemiring, a: int) -> int | None:
    """Smallest k with a^k = 0, or None.

    The power sequence a, a^2, ... takes values in a carrier of size
    `order`, so it enters its cycle within `order` steps; zero, being
    multiplicatively absorbing, appears among the first `order` powers or
    not at all.
    """
    x = a
    for k in range(1, S.order + 1):
        if x == S.zero:
            return k
        x = S.times(x, a)
    return None


def is_nilpotent(S: FiniteSemiring, a: int) -> bool:
    return nilpotency_index(S, a) is not None


def scalar_repeat(S: FiniteSemiring, n: int, a: int) -> int:
    """n-fold sum a + a + ... + a; the empty sum (n = 0) is zero."""
    if n < 0:
        raise DomainError("repeat count must be nonnegative")
    acc = S.zero
    for _ in range(n):
        acc = S.plus(acc, a)
    return acc


def additive_inverse(S: FiniteSemiring, a: int) -> int | None:
    """Smallest-index b with a + b = 0, or None."""
    for b in S.elements:
        if S.plus(a, b) == S.zero:
            return b
    return None


def power(S: FiniteSemiring, a: int, k: int) -> int:
    """a^k with a^0 = 1, by repeated squaring."""
    if k < 0:
        raise DomainError("exponent must be nonnegative")
    result = S.one
    base = a
    while k:
        if k & 1:
            result = S.times(result, base)
        base = S.times(base, base)
        k >>= 1
    return result


def element_classes(S: FiniteSemiring) -> ClassReport:
    """Classify every element by exhaustive testing."""
    idem = [e for e in S.elements if S.times(e, e) == e]
    nil_index: dict[int, int] = {}
    for a in S.elements:
        k = nilpotency_index(S, a)
        if k is not None:
            nil_index[a] = k
    nilpotents = sorted(nil_index)
    nilidem = [e for e in S.elements
               if any(S.times(e, e) == S.plus(e, x) for x in nilpotents)]
    add_inv: dict[int, int] = {}
    for a in S.elements:
        b = additive_inverse(S, a)
        if b is not None:
            add_inv[a] = b
    center = [a for a in S.elements
              if all(S.times(a, b) == S.times(b, a) for b in S.elements)]
    unit_wit: dict[int, int] = {}
    for u in S.elements:
        for v in S.elements:
            if S.times(u, v) == S.one and S.times(v, u) == S.one:
                unit_wit[u] = v
                break
    n = S.order
    return ClassReport(
        idempotents=ElementSet.of(idem, n),
        nilpotents=ElementSet.of(nilpotents, n),
        nilidempotents=ElementSet.of(nilidem, n),
        additively_invertible=ElementSet.of(add_inv, n),
        additive_inverse_witness=add_inv,
        center=ElementSet.of(center, n),
        units=ElementSet.of(unit_wit, n),
        unit_witness=unit_wit,
        nilpotency_index=nil_index,
    )


def noncommuting_pair(S: FiniteSemiring) -> tuple[int, int] | None:
    for a in S.elements:
        for b in S.elements:
            if S.times(a, b) != S.times(b, a):
                return (a, b)
    return None


def is_commutative(S: FiniteSemiring) -> bool:
    return noncommuting_pair(S) is None


def non_idempotent_element(S: FiniteSemiring) -> int | None:
    for a in S.elements:
        if S.times(a, a) != a:
            return a
    return None


def is_boolean(S: FiniteSemiring) -> bool:
    """Every element idempotent."""
    return non_idempotent_element(S) is None
