"""Constructive procedures and theorem checks over finite semirings:
closures and generation certificates, orthogonal and nilorthogonal
complements, nilidempotent lifting, unipotent inversion, Peirce
factorization, isomorphism search, and per-theorem verdicts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constructors import boolean_semiring, zmod
from .core import (
    ClassReport,
    DomainError,
    ElementSet,
    FiniteSemiring,
    InternalCheckError,
    additive_inverse,
    canonical_slots,
    element_classes,
    is_nilpotent,
    make_semiring,
    nilpotency_index,
    noncommuting_pair,
    non_idempotent_element,
    power,
    scalar_repeat,
)

MODE_MULT = "multiplicative"
MODE_ADD = "additive"
GEN_IDEMPOTENTS = "idempotents"
GEN_NILIDEMPOTENTS = "nilidempotents"

HYP_MULT_GEN_IDEM = "mult-generated by idempotents"
HYP_MULT_GEN_NILIDEM = "mult-generated by nilidempotents"
HYP_ADD_GEN_IDEM = "add-generated by idempotents"
HYP_ORTH_COMPLEMENTS = "every idempotent has an orthogonal complement"
HYP_NILORTH_COMPLEMENTS = "every idempotent has a nilorthogonal complement"
HYP_NIL_IN_V_AND_Z = "Nil ⊆ V ∩ Z"
HYP_NIL_IN_Z = "Nil ⊆ Z"
CONCL_COMMUTATIVE = "commutative"
CONCL_BOOLEAN = "Boolean"

THEOREM_IDS = ("main", "main2", "mainnilid", "additivecom")

VERDICT_CONFIRMED = "confirmed"
VERDICT_VACUOUS = "vacuous"
VERDICT_VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class GenerationCertificate:
    mode: str
    generator_class: str
    generated: bool
    expressions: dict[int, tuple[int, ...]]
    uncovered: ElementSet


@dataclass(frozen=True)
class ComplementWitness:
    e: int
    f: int
    kind: str  # "orthogonal" | "nilorthogonal"
    x: int     # nilpotent correction; 0 for orthogonal


@dataclass(frozen=True)
class LiftTrace:
    g0: int
    z0: int
    steps: tuple[tuple[int, int, int], ...]  # (g_k, z_k, w_k) per iteration
    f: int
    correction: int
    iterations: int


@dataclass(frozen=True)
class PeirceResult:
    primitives: tuple[int, ...]
    factors: tuple[FiniteSemiring, ...]
    carriers: tuple[tuple[int, ...], ...]  # factor index -> parent elements
    iso: dict[int, tuple[int, ...]]
    factor_classification: tuple[str, ...]


@dataclass(frozen=True)
class ClauseCheck:
    name: str
    holds: bool
    witness: tuple[int, ...] | None  # counterexample when the clause fails


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    hypotheses: tuple[ClauseCheck, ...]
    conclusions: tuple[ClauseCheck, ...]
    verdict: str


def _closure(S: FiniteSemiring, G: ElementSet, op) -> ElementSet:
    if G.carrier_order != S.order:
        raise DomainError("generator set indexes a different carrier")
    if not G:
        raise DomainError("closure of the empty set is undefined here")
    members = set(G)
    changed = True
    while changed:
        changed = False
        snapshot = list(members)
        for a in snapshot:
            for b in snapshot:
                c = op(a, b)
                if c not in members:
                    members.add(c)
                    changed = True
    return ElementSet.of(members, S.order)


def mult_closure(S: FiniteSemiring, G: ElementSet) -> ElementSet:
    """Least superset of G closed under multiplication."""
    return _closure(S, G, S.times)


def add_closure(S: FiniteSemiring, G: ElementSet) -> ElementSet:
    """Least superset of G closed under addition."""
    return _closure(S, G, S.plus)


def _generator_set(S: FiniteSemiring, generator_class: str,
                   classes: ClassReport | None = None) -> ElementSet:
    classes = classes or element_classes(S)
    if generator_class == GEN_IDEMPOTENTS:
        return classes.idempotents
    if generator_class == GEN_NILIDEMPOTENTS:
        return classes.nilidempotents
    raise DomainError(f"unknown generator class {generator_class!r}")


def generation_certificate(S: FiniteSemiring, mode: str,
                           generator_class: str) -> GenerationCertificate:
    """Breadth-first closure keeping one shortest expression per element.

    Expressions are sequences of generators whose ordered product (additive
    mode: sum) re-evaluates to the element; BFS over right-extension finds
    shortest ones because every length-k word is a length-(k-1) word
    extended by one generator.
    """
    if mode == MODE_MULT:
        op = S.times
    elif mode == MODE_ADD:
        op = S.plus
    else:
        raise DomainError(f"unknown generation mode {mode!r}")
    gens = sorted(_generator_set(S, generator_class))
    expressions: dict[int, tuple[int, ...]] = {}
    queue: list[int] = []
    for g in gens:
        if g not in expressions:
            expressions[g] = (g,)
            queue.append(g)
    head = 0
    while head < len(queue):
        e = queue[head]
        head += 1
        for g in gens:
            c = op(e, g)
            if c not in expressions:
                expressions[c] = expressions[e] + (g,)
                queue.append(c)
    covered = ElementSet.of(expressions, S.order)
    uncovered = covered.complement()
    return GenerationCertificate(mode=mode, generator_class=generator_class,
                                 generated=not uncovered,
                                 expressions=expressions, uncovered=uncovered)


def _require_idempotent(S: FiniteSemiring, e: int) -> None:
    if S.times(e, e) != e:
        raise DomainError(f"element {S.labels[e]!r} is not idempotent")


def orthogonal_complement(S: FiniteSemiring, e: int) -> ComplementWitness | None:
    """Smallest-index idempotent f with e + f = 1 and ef = fe = 0."""
    _require_idempotent(S, e)
    for f in S.elements:
        if (S.times(f, f) == f and S.plus(e, f) == S.one
                and S.times(e, f) == S.zero and S.times(f, e) == S.zero):
            return ComplementWitness(e=e, f=f, kind="orthogonal", x=S.zero)
    return None


def _nilorth_candidates(S: FiniteSemiring, e: int, classes: ClassReport):
    for f in S.elements:
        if f not in classes.nilidempotents:
            continue
        if S.times(e, f) not in classes.nilpotents:
            continue
        if S.times(f, e) not in classes.nilpotents:
            continue
        ef_sum = S.plus(e, f)
        for x in classes.nilpotents:
            if S.plus(S.one, x) == ef_sum:
                yield ComplementWitness(e=e, f=f, kind="nilorthogonal", x=x)


def nilorthogonal_complement(S: FiniteSemiring, e: int) -> ComplementWitness | None:
    """First (f, x) in lexicographic index order with f nilidempotent,
    x nilpotent, e + f = 1 + x, and ef, fe both nilpotent."""
    _require_idempotent(S, e)
    classes = element_classes(S)
    for witness in _nilorth_candidates(S, e, classes):
        return witness
    return None


def nilorthogonal_complements(S: FiniteSemiring, e: int) -> list[ComplementWitness]:
    """All valid (f, x) witnesses, in lexicographic index order."""
    _require_idempotent(S, e)
    classes = element_classes(S)
    return list(_nilorth_candidates(S, e, classes))


def orthogonal_decompositions(S: FiniteSemiring, b: int,
                              max_len: int) -> list[tuple[int, ...]]:
    """All sets of nonzero mutually orthogonal idempotents summing to b,
    of size up to max_len, as sorted tuples in canonical order."""
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    idems = [e for e in S.elements
             if S.times(e, e) == e and e != S.zero]
    found: list[tuple[int, ...]] = []
    for r in range(1, max_len + 1):
        for combo in itertools.combinations(idems, r):
            if any(S.times(u, v) != S.zero or S.times(v, u) != S.zero
                   for u, v in itertools.combinations(combo, 2)):
                continue
            if S.sum(combo) == b:
                found.append(combo)
    return found


def _lift_cap(S: FiniteSemiring, z: int) -> int:
    nu = nilpotency_index(S, z)
    assert nu is not None
    # ceil(log2(nu)) + 2; the defect shrinks as z^(2^k) * s per iteration.
    return max(0, (nu - 1).bit_length()) + 2


def _try_lift(S: FiniteSemiring, g: int, z: int) -> LiftTrace | None:
    """Run the correction iteration from defect z; None if the cap is hit."""
    if z == S.zero:
        return LiftTrace(g0=g, z0=z, steps=(), f=g, correction=S.zero,
                         iterations=0)
    cap = _lift_cap(S, z)
    gk, zk = g, z
    steps: list[tuple[int, int, int]] = []
    ws: list[int] = []
    for _ in range(cap):
        neg_zk = additive_inverse(S, zk)
        if neg_zk is None:
            return None
        w = S.plus(zk, scalar_repeat(S, 2, S.times(gk, neg_zk)))
        gk = S.plus(gk, w)
        zk_sq = S.times(zk, zk)
        neg_zk_sq = additive_inverse(S, zk_sq)
        if neg_zk_sq is None:
            return None
        zk = S.plus(scalar_repeat(S, 4, S.times(zk_sq, zk)),
                    scalar_repeat(S, 3, neg_zk_sq))
        ws.append(w)
        steps.append((gk, zk, w))
        if S.times(gk, gk) != S.plus(gk, zk):
            raise InternalCheckError(
                "lift iteration lost its defect equation; this contradicts "
                "the derivation it implements")
        if zk == S.zero:
            correction = S.sum(ws)
            f = gk
            if S.times(f, f) != f or S.plus(g, correction) != f \
                    or not is_nilpotent(S, correction):
                raise InternalCheckError("lift postconditions failed")
            return LiftTrace(g0=g, z0=z, steps=tuple(steps), f=f,
                             correction=correction, iterations=len(steps))
    return None


def lift_nilidempotent(S: FiniteSemiring, g: int) -> LiftTrace:
    """Correct a nilidempotent g into an idempotent f = g + n, n nilpotent.

    Defect candidates z with g*g = g + z are tried in index order; a
    candidate is admissible when z is nilpotent, additively invertible and
    central.  The iteration g <- g + (z + 2g(-z)) squeezes the defect to
    zero within ceil(log2(nilpotency index)) + 2 rounds.
    """
    classes = element_classes(S)
    g_sq = S.times(g, g)
    if g not in classes.nilidempotents:
        raise DomainError(f"element {S.labels[g]!r} is not nilidempotent")
    admissible = [z for z in classes.nilpotents
                  if g_sq == S.plus(g, z)
                  and z in classes.additively_invertible
                  and z in classes.center]
    if not admissible:
        raise DomainError(
            f"no admissible defect for {S.labels[g]!r}: need a central, "
            "additively invertible nilpotent z with g*g = g + z")
    for z in admissible:
        trace = _try_lift(S, g, z)
        if trace is not None:
            return trace
    raise InternalCheckError(
        "every admissible defect exceeded the iteration cap; this "
        "contradicts the termination argument")


def invert_unipotent(S: FiniteSemiring, x: int) -> int:
    """Two-sided inverse of 1 + x for nilpotent, additively invertible x.

    Uses the telescoping product (1 + (-x))(1 + x^2)(1 + x^4)... whose
    product with 1 + x collapses to 1 - x^(2^k) = 1.
    """
    nu = nilpotency_index(S, x)
    if nu is None:
        raise DomainError(f"element {S.labels[x]!r} is not nilpotent")
    neg_x = additive_inverse(S, x)
    if neg_x is None:
        raise DomainError(f"element {S.labels[x]!r} is not additively invertible")
    k = max(1, (nu - 1).bit_length())
    y = S.plus(S.one, neg_x)
    for j in range(1, k):
        y = S.times(y, S.plus(S.one, power(S, x, 2 ** j)))
    u = S.plus(S.one, x)
    if S.times(u, y) != S.one or S.times(y, u) != S.one:
        raise InternalCheckError("telescoping product is not an inverse; "
                                 "this contradicts the construction")
    return y


FACTOR_ISO_BOOL = "iso-to-bool"
FACTOR_ISO_Z2 = "iso-to-z2"
FACTOR_NO_NONTRIVIAL_IDEMPOTENTS = "other-no-nontrivial-idempotents"
FACTOR_OTHER = "other"


def _classify_factor(F: FiniteSemiring) -> str:
    if isomorphic(F, boolean_semiring()) is not None:
        return FACTOR_ISO_BOOL
    if isomorphic(F, zmod(2)) is not None:
        return FACTOR_ISO_Z2
    nontrivial = [e for e in F.elements
                  if F.times(e, e) == e and e not in (F.zero, F.one)]
    if not nontrivial:
        return FACTOR_NO_NONTRIVIAL_IDEMPOTENTS
    return FACTOR_OTHER


def peirce_decompose(S: FiniteSemiring) -> PeirceResult:
    """Split a commutative semiring along its primitive idempotents.

    Requires every idempotent to have an orthogonal complement.  Primitive
    means minimal nonzero under e <= f iff ef = e.  The factor at e is the
    carrier e*S with identity e; the map s -> (e_1 s, ..., e_k s) is
    verified to be an isomorphism onto the direct product.
    """
    pair = noncommuting_pair(S)
    if pair is not None:
        a, b = pair
        raise DomainError(
            f"not commutative: {S.labels[a]!r} and {S.labels[b]!r} do not commute")
    idems = [e for e in S.elements if S.times(e, e) == e]
    for e in idems:
        if orthogonal_complement(S, e) is None:
            raise DomainError(
                f"idempotent {S.labels[e]!r} has no orthogonal complement")
    nonzero = [e for e in idems if e != S.zero]
    primitives = [e for e in nonzero
                  if all(g == e or S.times(g, e) != g for g in nonzero)]
    for u, v in itertools.combinations(primitives, 2):
        if S.times(u, v) != S.zero or S.times(v, u) != S.zero:
            raise InternalCheckError(
                "primitive idempotents are not pairwise orthogonal")
    if S.sum(primitives) != S.one:
        raise InternalCheckError("primitive idempotents do not sum to 1")

    factors: list[FiniteSemiring] = []
    carriers: list[tuple[int, ...]] = []
    for e in primitives:
        carrier = sorted({S.times(e, s) for s in S.elements})
        pos = {v: i for i, v in enumerate(carrier)}
        add = [[pos[S.plus(a, b)] for b in carrier] for a in carrier]
        mul = [[pos[S.times(a, b)] for b in carrier] for a in carrier]
        factor = canonical_slots(make_semiring(
            add, mul, pos[S.zero], pos[e],
            tuple(S.labels[v] for v in carrier)))
        # carrier reported in the factor's element order
        order_map = {factor.labels[i]: i for i in factor.elements}
        arranged = [0] * len(carrier)
        for v in carrier:
            arranged[order_map[S.labels[v]]] = v
        factors.append(factor)
        carriers.append(tuple(arranged))

    iso: dict[int, tuple[int, ...]] = {}
    for s in S.elements:
        image = []
        for e, factor, carrier in zip(primitives, factors, carriers):
            component = S.times(e, s)
            image.append(carrier.index(component))
        iso[s] = tuple(image)

    expected = 1
    for factor in factors:
        expected *= factor.order
    if expected != S.order or len(set(iso.values())) != S.order:
        raise InternalCheckError("Peirce map is not a bijection")
    for a in S.elements:
        for b in S.elements:
            sum_img = tuple(F.plus(x, y) for F, x, y
                            in zip(factors, iso[a], iso[b]))
            prod_img = tuple(F.times(x, y) for F, x, y
                             in zip(factors, iso[a], iso[b]))
            if iso[S.plus(a, b)] != sum_img or iso[S.times(a, b)] != prod_img:
                raise InternalCheckError("Peirce map is not a homomorphism")

    classification = tuple(_classify_factor(F) for F in factors)
    return PeirceResult(primitives=tuple(primitives), factors=tuple(factors),
                        carriers=tuple(carriers), iso=iso,
                        factor_classification=classification)


def _invariant_vector(S: FiniteSemiring, a: int,
                      classes: ClassReport) -> tuple:
    def orbit_profile(step):
        seen: dict[int, int] = {}
        x = a
        i = 0
        while x not in seen:
            seen[x] = i
            x = step(x)
            i += 1
        return (seen[x], i - seen[x])  # (tail length, cycle length)

    return (
        a in classes.idempotents,
        classes.nilpotency_index.get(a, 0),
        a in classes.additively_invertible,
        a in classes.units,
        orbit_profile(lambda x: S.plus(x, a)),
        orbit_profile(lambda x: S.times(x, a)),
    )


def invariant_vectors(S: FiniteSemiring) -> list[tuple]:
    classes = element_classes(S)
    return [_invariant_vector(S, a, classes) for a in S.elements]


def isomorphic(S: FiniteSemiring, T: FiniteSemiring) -> tuple[int, ...] | None:
    """Search for a bijection preserving both tables, fixing zero and one.

    Backtracking over candidate images pruned by per-element invariant
    vectors; pruning affects speed only, a full table check guards the
    returned witness.
    """
    if S.order != T.order:
        return None
    vec_s = invariant_vectors(S)
    vec_t = invariant_vectors(T)
    candidates: list[list[int]] = []
    for a in S.elements:
        cands = [b for b in T.elements if vec_t[b] == vec_s[a]]
        candidates.append(cands)
    mapping = [-1] * S.order
    used = [False] * T.order

    def pin(a: int, b: int) -> bool:
        if vec_s[a] != vec_t[b]:
            return False
        mapping[a] = b
        used[b] = True
        return True

    if not pin(S.zero, T.zero):
        return None
    if S.one != S.zero and not pin(S.one, T.one):
        return None
    free = [a for a in S.elements if mapping[a] == -1]
    free.sort(key=lambda a: len(candidates[a]))

    def consistent(a: int) -> bool:
        for u in S.elements:
            if mapping[u] == -1:
                continue
            for x, y in ((a, u), (u, a)):
                s_add = S.plus(x, y)
                if mapping[s_add] != -1 and \
                        mapping[s_add] != T.plus(mapping[x], mapping[y]):
                    return False
                s_mul = S.times(x, y)
                if mapping[s_mul] != -1 and \
                        mapping[s_mul] != T.times(mapping[x], mapping[y]):
                    return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(free):
            return True
        a = free[i]
        for b in candidates[a]:
            if used[b]:
                continue
            mapping[a] = b
            used[b] = True
            if consistent(a) and backtrack(i + 1):
                return True
            mapping[a] = -1
            used[b] = False
        return False

    if not backtrack(0):
        return None
    for a in S.elements:
        for b in S.elements:
            if mapping[S.plus(a, b)] != T.plus(mapping[a], mapping[b]):
                raise InternalCheckError("isomorphism witness fails addition")
            if mapping[S.times(a, b)] != T.times(mapping[a], mapping[b]):
                raise InternalCheckError("isomorphism witness fails multiplication")
    return tuple(mapping)


def _first_uncovered(cert: GenerationCertificate) -> tuple[int, ...] | None:
    if cert.generated:
        return None
    return (min(cert.uncovered),)


def check_generation(S: FiniteSemiring, mode: str,
                     generator_class: str) -> tuple[bool, tuple[int, ...] | None]:
    cert = generation_certificate(S, mode, generator_class)
    return cert.generated, _first_uncovered(cert)


def idempotent_without_orthogonal_complement(S: FiniteSemiring) -> int | None:
    for e in S.elements:
        if S.times(e, e) == e and orthogonal_complement(S, e) is None:
            return e
    return None


def idempotent_without_nilorthogonal_complement(S: FiniteSemiring) -> int | None:
    classes = element_classes(S)
    for e in S.elements:
        if S.times(e, e) != e:
            continue
        if next(iter(_nilorth_candidates(S, e, classes)), None) is None:
            return e
    return None


def nilpotent_outside_center(S: FiniteSemiring) -> int | None:
    classes = element_classes(S)
    for x in classes.nilpotents:
        if x not in classes.center:
            return x
    return None


def nilpotent_outside_v_and_z(S: FiniteSemiring) -> int | None:
    classes = element_classes(S)
    for x in classes.nilpotents:
        if x not in classes.additively_invertible or x not in classes.center:
            return x
    return None


def _hyp_checks(S: FiniteSemiring, theorem: str) -> list[ClauseCheck]:
    def gen(name, mode, gclass):
        ok, witness = check_generation(S, mode, gclass)
        return ClauseCheck(name, ok, witness)

    def complement(name, finder):
        e = finder(S)
        return ClauseCheck(name, e is None, None if e is None else (e,))

    def nil_condition(name, finder):
        x = finder(S)
        return ClauseCheck(name, x is None, None if x is None else (x,))

    if theorem == "main":
        return [
            gen(HYP_MULT_GEN_IDEM, MODE_MULT, GEN_IDEMPOTENTS),
            complement(HYP_ORTH_COMPLEMENTS,
                       idempotent_without_orthogonal_complement),
        ]
    if theorem == "main2":
        return [
            gen(HYP_MULT_GEN_IDEM, MODE_MULT, GEN_IDEMPOTENTS),
            complement(HYP_NILORTH_COMPLEMENTS,
                       idempotent_without_nilorthogonal_complement),
            nil_condition(HYP_NIL_IN_V_AND_Z, nilpotent_outside_v_and_z),
        ]
    if theorem == "mainnilid":
        return [
            gen(HYP_MULT_GEN_NILIDEM, MODE_MULT, GEN_NILIDEMPOTENTS),
            complement(HYP_NILORTH_COMPLEMENTS,
                       idempotent_without_nilorthogonal_complement),
            nil_condition(HYP_NIL_IN_V_AND_Z, nilpotent_outside_v_and_z),
        ]
    if theorem == "additivecom":
        return [
            gen(HYP_ADD_GEN_IDEM, MODE_ADD, GEN_IDEMPOTENTS),
            complement(HYP_ORTH_COMPLEMENTS,
                       idempotent_without_orthogonal_complement),
            nil_condition(HYP_NIL_IN_Z, nilpotent_outside_center),
        ]
    raise DomainError(f"unknown theorem id {theorem!r}")


def _conclusion_checks(S: FiniteSemiring, theorem: str) -> list[ClauseCheck]:
    pair = noncommuting_pair(S)
    conclusions = [ClauseCheck(CONCL_COMMUTATIVE, pair is None, pair)]
    if theorem in ("main", "main2"):
        a = non_idempotent_element(S)
        conclusions.append(
            ClauseCheck(CONCL_BOOLEAN, a is None, None if a is None else (a,)))
    return conclusions


def check_theorem(S: FiniteSemiring, theorem: str) -> TheoremReport:
    """Evaluate one theorem's hypotheses and conclusions on S.

    confirmed: everything holds.  vacuous: some hypothesis fails.
    VIOLATION: hypotheses hold but a conclusion fails, which would refute
    the statement being tested and must abort any suite loudly.
    """
    hypotheses = _hyp_checks(S, theorem)
    conclusions = _conclusion_checks(S, theorem)
    if all(h.holds for h in hypotheses):
        verdict = VERDICT_CONFIRMED if all(c.holds for c in conclusions) \
            else VERDICT_VIOLATION
    else:
        verdict = VERDICT_VACUOUS
    return TheoremReport(theorem=theorem, hypotheses=tuple(hypotheses),
                         conclusions=tuple(conclusions), verdict=verdict)
