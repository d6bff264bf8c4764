"""The two symbolic infinite semirings: the nonnegative integers, and
polynomials a + bx + cy over noncommuting x, y with x^2=x, y^2=y, xy=x,
yx=y.

Both models expose the same surface as a finite semiring (zero, one, add,
mul) plus exact predicates for the questions a finite sweep cannot decide.
Where a predicate rests on an argument rather than enumeration (noted per
method), tests cross-check it on a bounded window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DEFAULT_WINDOW = 10


@dataclass(frozen=True)
class SymbolicNat:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("value must be nonnegative")

    def __repr__(self) -> str:
        return f"SymbolicNat({self.value})"


@dataclass(frozen=True)
class SymbolicTriple:
    """The element a*1 + b*x + c*y with nonnegative integer coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("coefficients must be nonnegative")

    def __repr__(self) -> str:
        return f"SymbolicTriple({self.a}, {self.b}, {self.c})"


class NatModel:
    """The semiring of nonnegative integers under ordinary + and *."""

    zero = SymbolicNat(0)
    one = SymbolicNat(1)

    def add(self, u: SymbolicNat, v: SymbolicNat) -> SymbolicNat:
        return SymbolicNat(u.value + v.value)

    def mul(self, u: SymbolicNat, v: SymbolicNat) -> SymbolicNat:
        return SymbolicNat(u.value * v.value)

    def idempotents(self) -> tuple[SymbolicNat, ...]:
        # n^2 = n over the integers only for 0 and 1
        return (self.zero, self.one)

    def is_idempotent(self, u: SymbolicNat) -> bool:
        return u.value * u.value == u.value

    def is_nilpotent(self, u: SymbolicNat) -> bool:
        # n^k = 0 forces n = 0; powers of positive integers stay positive
        return u.value == 0

    def label(self, u: SymbolicNat) -> str:
        return str(u.value)

    def is_commutative(self) -> bool:
        return True

    def is_boolean(self) -> bool:
        return False

    def boolean_counterexample(self) -> SymbolicNat:
        return SymbolicNat(2)  # 2*2 = 4 != 2

    def additive_certificate(self, u: SymbolicNat) -> tuple[SymbolicNat, ...]:
        """u as a sum of idempotents; the empty tuple denotes zero."""
        return (self.one,) * u.value

    def complement_to_one(self, u: SymbolicNat) -> SymbolicNat | None:
        """f with u + f = 1, decided exactly by integer arithmetic."""
        if u.value <= 1:
            return SymbolicNat(1 - u.value)
        return None

    def elements_window(self, bound: int = DEFAULT_WINDOW) -> Iterator[SymbolicNat]:
        for v in range(bound + 1):
            yield SymbolicNat(v)


class TripleModel:
    """Polynomials a + bx + cy over noncommuting x, y with the rewriting
    x^2=x, y^2=y, xy=x, yx=y; every nonempty word collapses to its first
    letter, which gives the closed-form product below."""

    zero = SymbolicTriple(0, 0, 0)
    one = SymbolicTriple(1, 0, 0)
    x = SymbolicTriple(0, 1, 0)
    y = SymbolicTriple(0, 0, 1)

    def add(self, u: SymbolicTriple, v: SymbolicTriple) -> SymbolicTriple:
        return SymbolicTriple(u.a + v.a, u.b + v.b, u.c + v.c)

    def mul(self, u: SymbolicTriple, v: SymbolicTriple) -> SymbolicTriple:
        return SymbolicTriple(
            u.a * v.a,
            u.a * v.b + v.a * u.b + u.b * v.b + u.b * v.c,
            u.a * v.c + v.a * u.c + u.c * v.b + u.c * v.c,
        )

    def idempotents(self) -> tuple[SymbolicTriple, ...]:
        # Coefficientwise, u*u = u solves to exactly these four; tests
        # cross-check on a window.
        return (self.zero, self.one, self.x, self.y)

    def is_idempotent(self, u: SymbolicTriple) -> bool:
        return self.mul(u, u) == u

    def is_nilpotent(self, u: SymbolicTriple) -> bool:
        # Coefficients never shrink under powering (all products of
        # nonnegative terms), so only zero has a vanishing power.
        return u == self.zero

    def label(self, u: SymbolicTriple) -> str:
        parts = []
        if u.a:
            parts.append(str(u.a))
        for coeff, var in ((u.b, "x"), (u.c, "y")):
            if coeff == 1:
                parts.append(var)
            elif coeff:
                parts.append(f"{coeff}{var}")
        return "+".join(parts) if parts else "0"

    def is_commutative(self) -> bool:
        return False

    def noncommuting_pair(self) -> tuple[SymbolicTriple, SymbolicTriple]:
        return (self.x, self.y)  # xy = x while yx = y

    def is_boolean(self) -> bool:
        return False

    def boolean_counterexample(self) -> SymbolicTriple:
        return SymbolicTriple(2, 0, 0)

    def additive_certificate(self, u: SymbolicTriple) -> tuple[SymbolicTriple, ...]:
        """u as a sum of idempotents; the empty tuple denotes zero."""
        return (self.one,) * u.a + (self.x,) * u.b + (self.y,) * u.c

    def complement_to_one(self, u: SymbolicTriple) -> SymbolicTriple | None:
        """f with u + f = 1, decided exactly: addition is componentwise
        over nonnegative integers, so u + f = 1 needs b = c = 0, a <= 1."""
        if u.a <= 1 and u.b == 0 and u.c == 0:
            return SymbolicTriple(1 - u.a, 0, 0)
        return None

    def elements_window(self, bound: int = DEFAULT_WINDOW) -> Iterator[SymbolicTriple]:
        for a in range(bound + 1):
            for b in range(bound + 1):
                for c in range(bound + 1):
                    yield SymbolicTriple(a, b, c)

    def nilpotents_in_window(self, bound: int = DEFAULT_WINDOW,
                             max_power: int = 8) -> list[SymbolicTriple]:
        """Brute-force window sweep backing up is_nilpotent."""
        found = []
        for u in self.elements_window(bound):
            p = u
            for _ in range(max_power):
                if p == self.zero:
                    found.append(u)
                    break
                p = self.mul(p, u)
        return found


def nat_model() -> NatModel:
    return NatModel()


def nn_triple_model() -> TripleModel:
    return TripleModel()
