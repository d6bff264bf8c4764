"""Constructors for the semirings used throughout: presets, residue rings,
polynomial quotients, matrix and triangular semirings, direct products."""

from __future__ import annotations

from .core import (
    DomainError,
    FiniteSemiring,
    canonical_slots,
    make_semiring,
)

DEFAULT_MAX_ELEMENTS = 4096


def boolean_semiring() -> FiniteSemiring:
    """The two-element semiring {0, 1} with 1 + 1 = 1."""
    return make_semiring(((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1, ("0", "1"))


def zmod(n: int) -> FiniteSemiring:
    """Integers mod n; zmod(1) is the trivial semiring."""
    if n < 1:
        raise DomainError("modulus must be at least 1")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return make_semiring(add, mul, 0, 1 % n, tuple(str(i) for i in range(n)))


def _require_zmod(base: FiniteSemiring) -> int:
    n = base.order
    for i in range(n):
        for j in range(n):
            if base.add[i][j] != (i + j) % n or base.mul[i][j] != (i * j) % n:
                raise DomainError("base must carry the zmod(n) tables")
    if base.zero != 0 or base.one != 1 % n:
        raise DomainError("base must carry the zmod(n) tables")
    return n


def _poly_label(coeffs: tuple[int, ...]) -> str:
    parts = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            var = "x" if d == 1 else f"x^{d}"
            parts.append(var if c == 1 else f"{c}{var}")
    return "+".join(parts) if parts else "0"


def poly_quotient(base: FiniteSemiring, modulus: list[int]) -> FiniteSemiring:
    """Residues of base[x] modulo a monic polynomial.

    `modulus` lists coefficients from the constant term up; entries are
    reduced mod n first, so x^2 - 1 over zmod(3) may be given as [-1, 0, 1].
    """
    n = _require_zmod(base)
    mod = [c % n for c in modulus]
    d = len(mod) - 1
    if d < 1:
        raise DomainError("modulus must have degree at least 1")
    if mod[-1] != 1:
        raise DomainError("modulus must be monic")

    count = n ** d

    def decode(e: int) -> tuple[int, ...]:
        return tuple((e // n ** i) % n for i in range(d))

    def encode(coeffs) -> int:
        return sum(c * n ** i for i, c in enumerate(coeffs))

    def reduce(raw: list[int]) -> tuple[int, ...]:
        # monic division: x^d = -(mod[0] + ... + mod[d-1] x^(d-1))
        raw = [c % n for c in raw]
        for deg in range(len(raw) - 1, d - 1, -1):
            c = raw[deg]
            if c:
                raw[deg] = 0
                for i in range(d):
                    raw[deg - d + i] = (raw[deg - d + i] - c * mod[i]) % n
        return tuple((raw + [0] * d)[:d])

    elements = [decode(e) for e in range(count)]
    add = [[encode(tuple((a + b) % n for a, b in zip(u, v))) for v in elements]
           for u in elements]
    mul_rows = []
    for u in elements:
        row = []
        for v in elements:
            raw = [0] * (2 * d - 1)
            for i, a in enumerate(u):
                for j, b in enumerate(v):
                    raw[i + j] += a * b
            row.append(encode(reduce(raw)))
        mul_rows.append(row)
    labels = tuple(_poly_label(u) for u in elements)
    return make_semiring(add, mul_rows, 0, 1 % count, labels)


def _matrix_universe(S: FiniteSemiring, n: int, positions, max_elements: int):
    count = S.order ** len(positions)
    if count > max_elements:
        raise DomainError(
            f"{count} elements exceeds the size cap {max_elements}")

    def decode(e: int):
        mat = [[S.zero] * n for _ in range(n)]
        for p, (i, j) in enumerate(positions):
            mat[i][j] = (e // S.order ** p) % S.order
        return tuple(tuple(row) for row in mat)

    mats = [decode(e) for e in range(count)]
    index = {m: e for e, m in enumerate(mats)}
    return mats, index


def _matrix_label(S: FiniteSemiring, mat) -> str:
    return "[" + ";".join(" ".join(S.labels[v] for v in row) for row in mat) + "]"


def _finish_matrix_semiring(S: FiniteSemiring, n: int, mats, index) -> FiniteSemiring:
    def madd(a, b):
        return tuple(tuple(S.plus(x, y) for x, y in zip(ra, rb))
                     for ra, rb in zip(a, b))

    def mmul(a, b):
        return tuple(tuple(S.sum(S.times(a[i][k], b[k][j]) for k in range(n))
                           for j in range(n))
                     for i in range(n))

    add = [[index[madd(a, b)] for b in mats] for a in mats]
    mul = [[index[mmul(a, b)] for b in mats] for a in mats]
    zero = index[tuple(tuple(S.zero for _ in range(n)) for _ in range(n))]
    one = index[tuple(tuple(S.one if i == j else S.zero for j in range(n))
                      for i in range(n))]
    labels = tuple(_matrix_label(S, m) for m in mats)
    return canonical_slots(make_semiring(add, mul, zero, one, labels))


def matrix_semiring(S: FiniteSemiring, n: int,
                    max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemiring:
    """Full n-by-n matrices over S with entrywise sum and row-by-column product."""
    if n < 1:
        raise DomainError("matrix dimension must be at least 1")
    positions = [(i, j) for i in range(n) for j in range(n)]
    mats, index = _matrix_universe(S, n, positions, max_elements)
    return _finish_matrix_semiring(S, n, mats, index)


def triangular_semiring(S: FiniteSemiring, n: int,
                        max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteSemiring:
    """Upper triangular n-by-n matrices over S."""
    if n < 1:
        raise DomainError("matrix dimension must be at least 1")
    positions = [(i, j) for i in range(n) for j in range(n) if i <= j]
    mats, index = _matrix_universe(S, n, positions, max_elements)
    return _finish_matrix_semiring(S, n, mats, index)


def direct_product(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Componentwise operations on pairs, labelled "(s,t)"."""
    pairs = [(a, b) for b in T.elements for a in S.elements]
    index = {p: e for e, p in enumerate(pairs)}
    add = [[index[(S.plus(a, c), T.plus(b, d))] for (c, d) in pairs]
           for (a, b) in pairs]
    mul = [[index[(S.times(a, c), T.times(b, d))] for (c, d) in pairs]
           for (a, b) in pairs]
    labels = tuple(f"({S.labels[a]},{T.labels[b]})" for (a, b) in pairs)
    zero = index[(S.zero, T.zero)]
    one = index[(S.one, T.one)]
    return canonical_slots(make_semiring(add, mul, zero, one, labels))


def from_preset(name: str):
    """Resolve a preset name to a FiniteSemiring or a symbolic model.

    Composite presets: product:A,B[,C...], matrix:BASE,n, triangular:BASE,n,
    where the component presets must not themselves contain commas.
    """
    from .presentation import presentation
    from .symbolic import nat_model, nn_triple_model

    if name == "bool":
        return boolean_semiring()
    if name == "t2b":
        return triangular_semiring(boolean_semiring(), 2)
    if name == "m2z2":
        return matrix_semiring(zmod(2), 2)
    if name == "z2x-sq":
        return poly_quotient(zmod(2), [0, 0, 1])
    if name == "z3x-sqm1":
        return poly_quotient(zmod(3), [-1, 0, 1])
    if name == "bxy-presentation":
        result = presentation(
            ("x", "y"),
            [("x+y", "0"), ("x*y", "0"), ("y*x", "0"),
             ("x*x", "0"), ("y*y", "0")],
            additively_idempotent=True,
        )
        if result.status != "finite":
            raise DomainError("bxy presentation did not close; raise the bound")
        return result.semiring
    if name == "nat":
        return nat_model()
    if name == "nn-triple":
        return nn_triple_model()
    if name.startswith("zmod:"):
        return zmod(int(name.split(":", 1)[1]))
    if name.startswith("product:"):
        parts = name.split(":", 1)[1].split(",")
        if len(parts) < 2:
            raise DomainError("product preset needs at least two components")
        result = from_preset(parts[0])
        for part in parts[1:]:
            result = direct_product(result, from_preset(part))
        return result
    if name.startswith(("matrix:", "triangular:")):
        kind, rest = name.split(":", 1)
        try:
            base_name, dim = rest.rsplit(",", 1)
            n = int(dim)
        except ValueError:
            raise DomainError(f"malformed preset {name!r}") from None
        base = from_preset(base_name)
        builder = matrix_semiring if kind == "matrix" else triangular_semiring
        return builder(base, n)
    raise DomainError(f"unknown preset {name!r}")


PRESET_NAMES = ("bool", "zmod:n", "t2b", "m2z2", "z2x-sq", "z3x-sqm1",
                "bxy-presentation", "nat", "nn-triple", "product:...",
                "matrix:...", "triangular:...")
