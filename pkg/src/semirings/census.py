"""Census of small semirings up to isomorphism, and theorem scans over it.

Enumeration is staged: first the commutative addition monoids with identity
at index 0, up to relabeling that fixes 0; then, per additive table and per
choice of the multiplicative identity, a backtracking fill of the
multiplication table pruned cell-by-cell by associativity and
distributivity.  Duplicates collapse under a canonical key, the
lexicographically least relabeling fixing zero at 0 and one at 1.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import (
    DomainError,
    FiniteSemiring,
    is_boolean,
    is_commutative,
    make_semiring,
    reindex,
    validate,
)
from .fileformat import serialize_semiring
from .ops import (
    GEN_IDEMPOTENTS,
    GEN_NILIDEMPOTENTS,
    MODE_ADD,
    MODE_MULT,
    THEOREM_IDS,
    VERDICT_VIOLATION,
    check_theorem,
    generation_certificate,
    idempotent_without_nilorthogonal_complement,
    idempotent_without_orthogonal_complement,
    invariant_vectors,
    nilpotent_outside_center,
    nilpotent_outside_v_and_z,
)

DEFAULT_MAX_ORDER = 4

_GENERIC_LABELS = ("0", "1", "a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class ScanEntry:
    order: int
    key: str  # canonical key, hex
    flags: dict[str, bool]
    verdicts: dict[str, str]


@dataclass(frozen=True)
class ScanReport:
    orders: tuple[int, ...]
    counts: dict[int, int]
    entries: tuple[ScanEntry, ...]
    tallies: dict[str, dict[str, int]]
    violations: tuple[dict, ...]


def _flatten(S: FiniteSemiring, perm: list[int]) -> bytes:
    inv = [0] * S.order
    for old, new in enumerate(perm):
        inv[new] = old
    out = bytearray([S.order])
    for table in (S.add, S.mul):
        for i in range(S.order):
            row = table[inv[i]]
            for j in range(S.order):
                out.append(perm[row[inv[j]]])
    return bytes(out)


def _canonical_search(S: FiniteSemiring) -> tuple[bytes, list[int]]:
    vecs = invariant_vectors(S)
    pinned = {S.zero: 0}
    if S.one != S.zero:
        pinned[S.one] = 1
    rest = [e for e in S.elements if e not in pinned]
    blocks: dict[tuple, list[int]] = {}
    for e in rest:
        blocks.setdefault(vecs[e], []).append(e)
    block_list = [blocks[v] for v in sorted(blocks)]
    base = [0] * S.order
    for e, p in pinned.items():
        base[e] = p
    best_key: bytes | None = None
    best_perm: list[int] | None = None
    for arrangement in itertools.product(
            *[itertools.permutations(b) for b in block_list]):
        perm = list(base)
        p = len(pinned)
        for block in arrangement:
            for e in block:
                perm[e] = p
                p += 1
        key = _flatten(S, perm)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm
    assert best_key is not None and best_perm is not None
    return best_key, best_perm


def canonical_form(S: FiniteSemiring) -> bytes:
    """Canonical key: least relabeled table pair over bijections fixing
    zero at 0 and one at 1, searched within invariant-vector blocks.

    Keys of two validated semirings are equal iff the semirings are
    isomorphic: the candidate permutation set is itself an isomorphism
    invariant, so isomorphic inputs minimize over the same relabelings.
    """
    return _canonical_search(S)[0]


def canonical_relabel(S: FiniteSemiring) -> FiniteSemiring:
    """The canonical representative of S's isomorphism class."""
    _, perm = _canonical_search(S)
    return reindex(S, perm)


def _monoid_canonical(table: tuple[tuple[int, ...], ...], n: int) -> bytes:
    best = None
    for perm_rest in itertools.permutations(range(1, n)):
        perm = [0] + list(perm_rest)
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        flat = bytes(perm[table[inv[i]][inv[j]]]
                     for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    assert best is not None
    return best


def enumerate_commutative_monoids(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Commutative monoid tables on {0..n-1} with identity 0, one table per
    isomorphism class (isomorphisms fix 0)."""
    if n == 1:
        return [((0,),)]
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    found: dict[bytes, tuple[tuple[int, ...], ...]] = {}
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            table[0][a] = table[a][0] = a
        for (i, j), v in zip(cells, values):
            table[i][j] = table[j][i] = v
        ok = True
        for a in range(n):
            for b in range(n):
                tab = table[a][b]
                for c in range(n):
                    if table[tab][c] != table[a][table[b][c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        frozen = tuple(tuple(row) for row in table)
        found.setdefault(_monoid_canonical(frozen, n), frozen)
    return [found[k] for k in sorted(found)]


def _complete_mul_tables(add, n: int, one: int):
    """Backtrack over the free multiplication cells, pruning each partial
    table by every associativity and distributivity instance whose operands
    are already determined."""
    mul = [[-1] * n for _ in range(n)]
    for a in range(n):
        mul[0][a] = mul[a][0] = 0
        mul[one][a] = mul[a][one] = a
    free = [(i, j) for i in range(n) for j in range(n) if mul[i][j] == -1]

    def consistent() -> bool:
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    bc = mul[b][c]
                    if ab != -1 and bc != -1 and mul[ab][c] != -1 \
                            and mul[a][bc] != -1 and mul[ab][c] != mul[a][bc]:
                        return False
                    # a(b+c) == ab + ac
                    s = add[b][c]
                    if mul[a][s] != -1 and ab != -1 and mul[a][c] != -1 \
                            and mul[a][s] != add[ab][mul[a][c]]:
                        return False
                    # (a+b)c == ac + bc
                    t = add[a][b]
                    if mul[t][c] != -1 and mul[a][c] != -1 and bc != -1 \
                            and mul[t][c] != add[mul[a][c]][mul[b][c]]:
                        return False
        return True

    def fill(k: int):
        if k == len(free):
            yield tuple(tuple(row) for row in mul)
            return
        i, j = free[k]
        for v in range(n):
            mul[i][j] = v
            if consistent():
                yield from fill(k + 1)
        mul[i][j] = -1

    yield from fill(0)


def enumerate_semirings(order: int,
                        max_order: int = DEFAULT_MAX_ORDER) -> list[FiniteSemiring]:
    """All semirings of the given order up to isomorphism, as canonical
    representatives sorted by canonical key."""
    if order > max_order:
        raise DomainError(f"order {order} above configured maximum {max_order}")
    if order < 1:
        raise DomainError("order must be positive")
    if order == 1:
        return [make_semiring(((0,),), ((0,),), 0, 0, ("0",))]
    found: dict[bytes, FiniteSemiring] = {}
    labels = _GENERIC_LABELS[:order]
    for add in enumerate_commutative_monoids(order):
        for one in range(1, order):
            for mul in _complete_mul_tables(add, order, one):
                if not validate(add, mul, 0, one).valid:
                    continue
                S = make_semiring(add, mul, 0, one, None)
                key, perm = _canonical_search(S)
                if key not in found:
                    canon = reindex(S, perm)
                    found[key] = FiniteSemiring(
                        order=canon.order, add=canon.add, mul=canon.mul,
                        zero=canon.zero, one=canon.one, labels=labels)
    return [found[k] for k in sorted(found)]


SCAN_FLAGS = (
    "boolean",
    "commutative",
    "mult-gen-idempotents",
    "mult-gen-nilidempotents",
    "add-gen-idempotents",
    "orthogonal-complements",
    "nilorthogonal-complements",
    "nil-in-z",
    "nil-in-vz",
)


def _entry_flags(S: FiniteSemiring) -> dict[str, bool]:
    return {
        "boolean": is_boolean(S),
        "commutative": is_commutative(S),
        "mult-gen-idempotents":
            generation_certificate(S, MODE_MULT, GEN_IDEMPOTENTS).generated,
        "mult-gen-nilidempotents":
            generation_certificate(S, MODE_MULT, GEN_NILIDEMPOTENTS).generated,
        "add-gen-idempotents":
            generation_certificate(S, MODE_ADD, GEN_IDEMPOTENTS).generated,
        "orthogonal-complements":
            idempotent_without_orthogonal_complement(S) is None,
        "nilorthogonal-complements":
            idempotent_without_nilorthogonal_complement(S) is None,
        "nil-in-z": nilpotent_outside_center(S) is None,
        "nil-in-vz": nilpotent_outside_v_and_z(S) is None,
    }


def _scan_entry(S: FiniteSemiring, theorem_ids) -> tuple[ScanEntry, list[dict]]:
    key = canonical_form(S).hex()
    verdicts = {}
    violations = []
    for theorem in theorem_ids:
        report = check_theorem(S, theorem)
        verdicts[theorem] = report.verdict
        if report.verdict == VERDICT_VIOLATION:
            violations.append({
                "order": S.order,
                "key": key,
                "theorem": theorem,
                "failed_conclusions": [c.name for c in report.conclusions
                                       if not c.holds],
                "semiring": serialize_semiring(S),
            })
    entry = ScanEntry(order=S.order, key=key, flags=_entry_flags(S),
                      verdicts=verdicts)
    return entry, violations


def scan(orders, theorem_ids=THEOREM_IDS, include_trivial: bool = False,
         workers: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> ScanReport:
    """Run the chosen theorems over every catalog semiring of the given
    orders; results are merged in catalog order, so the report does not
    depend on the worker count."""
    orders = tuple(orders)
    for theorem in theorem_ids:
        if theorem not in THEOREM_IDS:
            raise DomainError(f"unknown theorem id {theorem!r}")
    catalog: list[FiniteSemiring] = []
    counts: dict[int, int] = {}
    for order in orders:
        batch = enumerate_semirings(order, max_order=max_order)
        if not include_trivial:
            batch = [S for S in batch if S.order > 1]
        counts[order] = len(batch)
        catalog.extend(batch)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda S: _scan_entry(S, theorem_ids),
                                    catalog))
    else:
        results = [_scan_entry(S, theorem_ids) for S in catalog]

    entries = tuple(entry for entry, _ in results)
    violations: list[dict] = []
    for _, batch in results:
        if batch:
            violations.extend(batch)
            break  # a refuted theorem aborts the scan
    tallies: dict[str, dict[str, int]] = {}
    for theorem in theorem_ids:
        tally = {"confirmed": 0, "vacuous": 0, "VIOLATION": 0}
        for entry in entries:
            tally[entry.verdicts[theorem]] += 1
        tallies[theorem] = tally
    return ScanReport(orders=orders, counts=counts, entries=entries,
                      tallies=tallies, violations=tuple(violations))
