"""Exact factorizations R = A•C of fusion rings: recognition, recovery of
the canonical matched pair, and certification of the isomorphism
R ≅ A ⋈ C.

All index bookkeeping below is in parent (R) basis indices unless a name
says otherwise; the canonical matched pair re-indexes A and C as
standalone rings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InternalInconsistencyError
from .grading import Grading, adjoint_subring, universal_grading
from .groups import FiniteGroup
from .matched_pair import (GroupMatchedPair, RingMatchedPair,
                           validate_ring_matched_pair)
from .report import Report, ReportBuilder
from .rings import FusionRing, Subring, subring_generated


@dataclass(frozen=True, eq=False)
class Factorization:
    R: FusionRing
    A: Subring
    C: Subring
    pair_table: dict   # (a, c) -> b  with  b_a * b_c = b_b
    pair_inv: dict     # b -> (a, c)
    co_table: dict     # (c, a) -> b  with  b_c * b_a = b_b
    co_inv: dict       # b -> (c, a)


def _is_subring(R: FusionRing, indices) -> str:
    """Empty string if `indices` carries a fusion subring, else a witness."""
    s = set(indices)
    if R.unit_index not in s:
        return "missing unit"
    for i in s:
        if R.dual[i] not in s:
            return f"not closed under dual at {i}"
    for i, j in itertools.product(sorted(s), repeat=2):
        for k in R.product(i, j):
            if k not in s:
                return f"product {i}*{j} leaves the set at {k}"
    return ""


def check_exact_factorization(R: FusionRing, a_indices, c_indices):
    """Verify R = A•C for the proposed basis index sets.

    Returns a Factorization on success, or a failing Report naming the
    offending pair or collision.
    """
    rb = ReportBuilder()
    wa = _is_subring(R, a_indices)
    rb.add("A_subring", not wa, wa)
    wc = _is_subring(R, c_indices)
    rb.add("C_subring", not wc, wc)
    if wa or wc:
        return rb.build()

    A = Subring(R, tuple(a_indices))
    C = Subring(R, tuple(c_indices))

    def build_table(first, second, name):
        table, inv = {}, {}
        for i, j in itertools.product(first, second):
            prod = R.product(i, j)
            if list(prod.values()) != [1]:
                rb.add(name, False, f"product {i}*{j} is not basic")
                return None, None
            b = next(iter(prod))
            if b in inv:
                rb.add(name, False, f"collision at basis {b}: {inv[b]} vs ({i},{j})")
                return None, None
            table[(i, j)] = b
            inv[b] = (i, j)
        if len(table) != R.rank:
            rb.add(name, False,
                   f"{len(table)} products cover only part of the {R.rank} basis elements")
            return None, None
        rb.add(name, True)
        return table, inv

    pair_table, pair_inv = build_table(A.indices, C.indices, "bijection")
    if pair_table is None:
        return rb.build()
    co_table, co_inv = build_table(C.indices, A.indices, "symmetric_table")
    if co_table is None:
        return rb.build()
    return Factorization(R, A, C, pair_table, pair_inv, co_table, co_inv)


def recover_actions(f: Factorization):
    """Recover ℓ_c and r_a from c·a = ℓ_c(a)·r_a(c).

    Returns (ell, r): ell[c][a] = ℓ_c(a) and r[a][c] = r_a(c), all in
    parent indices.  Verifies ℓ_1 = id, the anti/composition laws on
    composable triples, and triviality on the adjoint bases; failures
    raise InternalInconsistencyError since an exact factorization
    forces them.
    """
    R = f.R
    ell = {c: {} for c in f.C.indices}
    r = {a: {} for a in f.A.indices}
    for c, a in itertools.product(f.C.indices, f.A.indices):
        ap, cp = f.pair_inv[f.co_table[(c, a)]]
        ell[c][a] = ap
        r[a][c] = cp

    unit = R.unit_index
    if any(ell[unit][a] != a for a in f.A.indices):
        raise InternalInconsistencyError("ℓ_1 is not the identity")
    if any(r[unit][c] != c for c in f.C.indices):
        raise InternalInconsistencyError("r_1 is not the identity")

    for c1, c2 in itertools.product(f.C.indices, repeat=2):
        for c3 in R.product(c1, c2):
            if any(ell[c3][a] != ell[c1][ell[c2][a]] for a in f.A.indices):
                raise InternalInconsistencyError(
                    f"ℓ composition law fails at (c1,c2,c3)=({c1},{c2},{c3})")
    for a1, a2 in itertools.product(f.A.indices, repeat=2):
        for a3 in R.product(a1, a2):
            if any(r[a3][c] != r[a2][r[a1][c]] for c in f.C.indices):
                raise InternalInconsistencyError(
                    f"r composition law fails at (a1,a2,a3)=({a1},{a2},{a3})")

    ring_C, to_parent_C = f.C.as_ring()
    ad_C = {to_parent_C[l] for l in adjoint_subring(ring_C).indices}
    if any(ell[c][a] != a for c in ad_C for a in f.A.indices):
        raise InternalInconsistencyError("ℓ_c ≠ id for adjoint c")
    ring_A, to_parent_A = f.A.as_ring()
    ad_A = {to_parent_A[l] for l in adjoint_subring(ring_A).indices}
    if any(r[a][c] != c for a in ad_A for c in f.C.indices):
        raise InternalInconsistencyError("r_a ≠ id for adjoint a")
    return ell, r


def _sanitize_labels(R: FusionRing) -> FusionRing:
    """Strip the reserved '⋈' separator from labels so the ring can be
    fed back into ring_bicrossed; labels are cosmetic."""
    from .matched_pair import BOWTIE

    if not any(BOWTIE in s for s in R.basis_labels):
        return R
    labels = [s.replace(BOWTIE, "·") for s in R.basis_labels]
    seen = {}
    for i, s in enumerate(labels):
        if s in seen:
            labels[i] = f"{s}#{i}"
        seen[labels[i]] = i
    return FusionRing(tuple(labels), R.unit_index, R.dual, dict(R.N))


def canonical_matched_pair(f: Factorization) -> RingMatchedPair:
    """The matched pair over (U(A), U(C)) recovered from the factorization.

    ▷ is the common ℓ_c over each U(C)-degree class, ◁ the common r_a over
    each U(A)-degree class; ▶/◀ follow from degree bookkeeping.
    """
    ell, r = recover_actions(f)
    ring_A, to_parent_A = f.A.as_ring()
    ring_C, to_parent_C = f.C.as_ring()
    ring_A = _sanitize_labels(ring_A)
    ring_C = _sanitize_labels(ring_C)
    loc_A = {p: l for l, p in to_parent_A.items()}
    loc_C = {p: l for l, p in to_parent_C.items()}
    UA = universal_grading(ring_A)
    UC = universal_grading(ring_C)
    H, Kg = UA.group, UC.group

    # ▷ per U(C) element: ℓ_c must agree across the degree class.
    act_l = []
    for k in range(Kg.order):
        reps = [c for c in f.C.indices if UC.degree[loc_C[c]] == k]
        perms = {tuple(loc_A[ell[c][to_parent_A[l]]] for l in range(ring_A.rank))
                 for c in reps}
        if len(perms) != 1:
            raise InternalInconsistencyError(
                f"ℓ_c depends on more than the degree in U(C) class {k}")
        act_l.append(perms.pop())
    act_r = []
    for h in range(H.order):
        reps = [a for a in f.A.indices if UA.degree[loc_A[a]] == h]
        perms = {tuple(loc_C[r[a][to_parent_C[l]]] for l in range(ring_C.rank))
                 for a in reps}
        if len(perms) != 1:
            raise InternalInconsistencyError(
                f"r_a depends on more than the degree in U(A) class {h}")
        act_r.append(perms.pop())

    # ▶ and ◀ from |k▷a| = k▶|a| and |c◁h| = |c|◀h.
    gl = [[-1] * H.order for _ in range(Kg.order)]
    for k, l in itertools.product(range(Kg.order), range(ring_A.rank)):
        h = UA.degree[l]
        img = UA.degree[act_l[k][l]]
        if gl[k][h] not in (-1, img):
            raise InternalInconsistencyError("k▶h is not well-defined by degrees")
        gl[k][h] = img
    gr = [[-1] * H.order for _ in range(Kg.order)]
    for h, l in itertools.product(range(H.order), range(ring_C.rank)):
        k = UC.degree[l]
        img = UC.degree[act_r[h][l]]
        if gr[k][h] not in (-1, img):
            raise InternalInconsistencyError("k◀h is not well-defined by degrees")
        gr[k][h] = img
    if any(x == -1 for row in gl for x in row) or any(x == -1 for row in gr for x in row):
        raise InternalInconsistencyError("degree action tables are incomplete")

    gmp = GroupMatchedPair(H, Kg,
                           tuple(tuple(row) for row in gl),
                           tuple(tuple(row) for row in gr))
    rmp = RingMatchedPair(ring_A, ring_C, UA, UC, gmp,
                          tuple(act_l), tuple(act_r))
    report = validate_ring_matched_pair(rmp)
    if not report.passed:
        raise InternalInconsistencyError(
            f"recovered matched pair fails validation: {report.failures()[0].name}")
    return rmp


def certify_theorem_iso(f: Factorization) -> Report:
    """Certify that ψ(a⋈c) = a·c is a fusion ring isomorphism from the
    bicrossed product of the canonical matched pair onto R."""
    from .matched_pair import ring_bicrossed

    rmp = canonical_matched_pair(f)
    B = ring_bicrossed(rmp)
    R = f.R
    _, to_parent_A = f.A.as_ring()
    _, to_parent_C = f.C.as_ring()
    nc = rmp.C.rank

    # B's basis order is (a-major, c-minor) over local indices.
    psi = [f.pair_table[(to_parent_A[i // nc], to_parent_C[i % nc])]
           for i in range(B.rank)]
    rb = ReportBuilder()
    bij = sorted(psi) == list(range(R.rank))
    rb.add("bijection", bij, "" if bij else "ψ is not a bijection onto B(R)")

    ok = psi[B.unit_index] == R.unit_index
    rb.add("unit", ok, "" if ok else "ψ does not preserve the unit")

    witness = ""
    for i in range(B.rank):
        if psi[B.dual[i]] != R.dual[psi[i]]:
            witness = f"i={i}"
            break
    rb.add("duality", not witness, witness)

    witness = ""
    for i, j, k in itertools.product(range(B.rank), repeat=3):
        if B.n(i, j, k) != R.n(psi[i], psi[j], psi[k]):
            witness = f"(i,j,k)=({i},{j},{k})"
            break
    rb.add("structure_constants", not witness, witness)
    return rb.build()
