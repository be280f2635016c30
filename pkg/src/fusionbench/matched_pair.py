"""Matched pairs of groups and of fusion rings, and their bicrossed
(Zappa-Szep) products.

Conventions for action tables:
  GroupMatchedPair.act_l[k][h] = k ▶ h   (left K-action on the set H)
  GroupMatchedPair.act_r[k][h] = k ◀ h   (right H-action on the set K)
  RingMatchedPair.act_l[k][a]  = k ▷ a   (K permuting the basis of A)
  RingMatchedPair.act_r[h][c]  = c ◁ h   (H permuting the basis of C)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, InputError, VerificationError
from .grading import Grading, verify_grading
from .groups import FiniteGroup
from .report import Report, ReportBuilder
from .rings import FusionRing, _check_u64

VALIDATION_CAP = 64
BOWTIE = "⋈"


@dataclass(frozen=True, eq=False)
class GroupMatchedPair:
    H: FiniteGroup
    K: FiniteGroup
    act_l: tuple[tuple[int, ...], ...]  # [k][h] = k ▶ h
    act_r: tuple[tuple[int, ...], ...]  # [k][h] = k ◀ h

    def __post_init__(self):
        nh, nk = self.H.order, self.K.order
        for name, tab, rng in (("act_l", self.act_l, nh), ("act_r", self.act_r, nk)):
            if len(tab) != nk or any(len(row) != nh for row in tab):
                raise InputError(f"{name} must be a {nk}x{nh} table")
            if any(not 0 <= x < rng for row in tab for x in row):
                raise InputError(f"{name} entry out of range")

    def l(self, k: int, h: int) -> int:
        return self.act_l[k][h]

    def r(self, k: int, h: int) -> int:
        return self.act_r[k][h]


def validate_group_matched_pair(p: GroupMatchedPair) -> Report:
    H, K = p.H, p.K
    rb = ReportBuilder()

    witness = ""
    for k, t, h in itertools.product(range(K.order), range(K.order), range(H.order)):
        if p.l(K.mul(k, t), h) != p.l(k, p.l(t, h)):
            witness = f"(k,t,h)=({k},{t},{h})"
            break
    if not witness:
        bad = next((h for h in range(H.order) if p.l(K.identity, h) != h), None)
        if bad is not None:
            witness = f"e_K acts nontrivially at h={bad}"
    rb.add("left_action", not witness, witness)

    witness = ""
    for k, h, g in itertools.product(range(K.order), range(H.order), range(H.order)):
        if p.r(p.r(k, h), g) != p.r(k, H.mul(h, g)):
            witness = f"(k,h,g)=({k},{h},{g})"
            break
    if not witness:
        bad = next((k for k in range(K.order) if p.r(k, H.identity) != k), None)
        if bad is not None:
            witness = f"e_H acts nontrivially at k={bad}"
    rb.add("right_action", not witness, witness)

    id_ok = all(p.l(k, H.identity) == H.identity for k in range(K.order)) and \
        all(p.r(K.identity, h) == K.identity for h in range(H.order))
    rb.add("identity_fixed", id_ok, "" if id_ok else "k▶e or e◀h moved an identity")

    witness = ""
    for k, t, h in itertools.product(range(K.order), range(K.order), range(H.order)):
        if p.r(K.mul(k, t), h) != K.mul(p.r(k, p.l(t, h)), p.r(t, h)):
            witness = f"(k,t,h)=({k},{t},{h})"
            break
    rb.add("right_action_compat", not witness, witness)

    witness = ""
    for k, h, g in itertools.product(range(K.order), range(H.order), range(H.order)):
        if p.l(k, H.mul(h, g)) != H.mul(p.l(k, h), p.l(p.r(k, h), g)):
            witness = f"(k,h,g)=({k},{h},{g})"
            break
    rb.add("left_action_compat", not witness, witness)
    return rb.build()


def group_bicrossed(p: GroupMatchedPair) -> FiniteGroup:
    """Group on H x K with (h,k)(g,t) = (h(k▶g), (k◀g)t)."""
    report = validate_group_matched_pair(p)
    if not report.passed:
        raise VerificationError("group matched pair is invalid", report)
    H, K = p.H, p.K
    pairs = list(itertools.product(range(H.order), range(K.order)))
    index = {q: i for i, q in enumerate(pairs)}
    labels = tuple(f"{H.element_labels[h]}{BOWTIE}{K.element_labels[k]}" for h, k in pairs)
    table = tuple(
        tuple(index[(H.mul(h, p.l(k, g)), K.mul(p.r(k, g), t))] for g, t in pairs)
        for h, k in pairs
    )
    return FiniteGroup(labels, table, index[(H.identity, K.identity)])


@dataclass(frozen=True, eq=False)
class RingMatchedPair:
    A: FusionRing
    C: FusionRing
    grading_A: Grading  # grading of A by H
    grading_C: Grading  # grading of C by K
    gmp: GroupMatchedPair  # over (H, K)
    act_l: tuple[tuple[int, ...], ...]  # [k][a] = k ▷ a
    act_r: tuple[tuple[int, ...], ...]  # [h][c] = c ◁ h

    def __post_init__(self):
        if self.grading_A.group is not self.gmp.H or self.grading_C.group is not self.gmp.K:
            raise InputError("group matched pair must be over the grading groups")
        nk, nh = self.gmp.K.order, self.gmp.H.order
        na, nc = self.A.rank, self.C.rank
        if len(self.act_l) != nk or any(sorted(row) != list(range(na)) for row in self.act_l):
            raise InputError("act_l must hold one A-basis permutation per K element")
        if len(self.act_r) != nh or any(sorted(row) != list(range(nc)) for row in self.act_r):
            raise InputError("act_r must hold one C-basis permutation per H element")

    @property
    def H(self) -> FiniteGroup:
        return self.gmp.H

    @property
    def K(self) -> FiniteGroup:
        return self.gmp.K

    def tri_l(self, k: int, a: int) -> int:
        """k ▷ a"""
        return self.act_l[k][a]

    def tri_r(self, c: int, h: int) -> int:
        """c ◁ h"""
        return self.act_r[h][c]

    def deg_a(self, a: int) -> int:
        return self.grading_A.degree[a]

    def deg_c(self, c: int) -> int:
        return self.grading_C.degree[c]


def validate_ring_matched_pair(m: RingMatchedPair) -> Report:
    A, C, H, K = m.A, m.C, m.H, m.K
    if max(A.rank, C.rank, H.order, K.order) > VALIDATION_CAP:
        raise CapExceededError(
            f"matched pair validation capped at size {VALIDATION_CAP}")
    rb = ReportBuilder()

    ga = verify_grading(A, H, m.grading_A.degree)
    rb.add("grading_A", ga.passed,
           "" if ga.passed else f"{ga.failures()[0].name}: {ga.failures()[0].witness}")
    gc = verify_grading(C, K, m.grading_C.degree)
    rb.add("grading_C", gc.passed,
           "" if gc.passed else f"{gc.failures()[0].name}: {gc.failures()[0].witness}")

    gp = validate_group_matched_pair(m.gmp)
    rb.add("group_pair", gp.passed,
           "" if gp.passed else f"{gp.failures()[0].name}: {gp.failures()[0].witness}")

    witness = ""
    eK = K.identity
    if any(m.act_l[eK][a] != a for a in range(A.rank)):
        witness = "e_K acts nontrivially on B(A)"
    else:
        for k, t, a in itertools.product(range(K.order), range(K.order), range(A.rank)):
            if m.tri_l(K.mul(k, t), a) != m.tri_l(k, m.tri_l(t, a)):
                witness = f"(k,t,a)=({k},{t},{a})"
                break
    rb.add("left_action", not witness, witness)

    witness = ""
    eH = H.identity
    if any(m.act_r[eH][c] != c for c in range(C.rank)):
        witness = "e_H acts nontrivially on B(C)"
    else:
        for h, g, c in itertools.product(range(H.order), range(H.order), range(C.rank)):
            if m.tri_r(m.tri_r(c, h), g) != m.tri_r(c, H.mul(h, g)):
                witness = f"(h,g,c)=({h},{g},{c})"
                break
    rb.add("right_action", not witness, witness)

    witness = ""
    for k, a in itertools.product(range(K.order), range(A.rank)):
        if m.deg_a(m.tri_l(k, a)) != m.gmp.l(k, m.deg_a(a)):
            witness = f"|k▷a| mismatch at (k,a)=({k},{a})"
            break
    if not witness:
        for h, c in itertools.product(range(H.order), range(C.rank)):
            if m.deg_c(m.tri_r(c, h)) != m.gmp.r(m.deg_c(c), h):
                witness = f"|c◁h| mismatch at (h,c)=({h},{c})"
                break
    rb.add("degree_compat", not witness, witness)

    witness = ""
    for k, a1, a2 in itertools.product(range(K.order), range(A.rank), range(A.rank)):
        kk = m.gmp.r(k, m.deg_a(a1))
        for x in set(A.product(a1, a2)) | set(
                A.product(m.tri_l(k, a1), m.tri_l(kk, a2))):
            if A.n(a1, a2, x) != A.n(m.tri_l(k, a1), m.tri_l(kk, a2), m.tri_l(k, x)):
                witness = f"(k,a,a')=({k},{a1},{a2})"
                break
        if witness:
            break
    rb.add("twisted_left", not witness, witness)

    witness = ""
    for h, c1, c2 in itertools.product(range(H.order), range(C.rank), range(C.rank)):
        hh = m.gmp.l(m.deg_c(c2), h)
        for x in set(C.product(c1, c2)) | set(
                C.product(m.tri_r(c1, hh), m.tri_r(c2, h))):
            if C.n(c1, c2, x) != C.n(m.tri_r(c1, hh), m.tri_r(c2, h), m.tri_r(x, h)):
                witness = f"(h,c,c')=({h},{c1},{c2})"
                break
        if witness:
            break
    rb.add("twisted_right", not witness, witness)

    unit_ok = all(m.tri_l(k, A.unit_index) == A.unit_index for k in range(K.order)) and \
        all(m.tri_r(C.unit_index, h) == C.unit_index for h in range(H.order))
    rb.add("unit_action", unit_ok, "" if unit_ok else "an action moved a unit")

    witness = ""
    for k, a in itertools.product(range(K.order), range(A.rank)):
        if A.dual[m.tri_l(k, a)] != m.tri_l(m.gmp.r(k, m.deg_a(a)), A.dual[a]):
            witness = f"(k▷a)* mismatch at (k,a)=({k},{a})"
            break
    if not witness:
        for h, c in itertools.product(range(H.order), range(C.rank)):
            if C.dual[m.tri_r(c, h)] != m.tri_r(C.dual[c], m.gmp.l(m.deg_c(c), h)):
                witness = f"(c◁h)* mismatch at (h,c)=({h},{c})"
                break
    rb.add("dual_compat", not witness, witness)
    return rb.build()


def bowtie_label(la: str, lc: str) -> str:
    return f"{la}{BOWTIE}{lc}"


def ring_bicrossed(m: RingMatchedPair) -> FusionRing:
    """Bicrossed product fusion ring on pairs a⋈c with structure constants
    N[(a1,c1),(a2,c2),(a,c)] = N_A[a1, |c1|▷a2, a] * N_C[c1◁|a2|, c2, c]
    and dual (a⋈c)* = (|c|⁻¹ ▷ a*) ⋈ (c* ◁ |a|⁻¹)."""
    report = validate_ring_matched_pair(m)
    if not report.passed:
        raise VerificationError("ring matched pair is invalid", report)
    A, C, H, K = m.A, m.C, m.H, m.K
    if any(BOWTIE in s for s in A.basis_labels + C.basis_labels):
        raise InputError(f"input basis labels may not contain {BOWTIE!r}")

    pairs = list(itertools.product(range(A.rank), range(C.rank)))
    index = {q: i for i, q in enumerate(pairs)}
    labels = tuple(bowtie_label(A.basis_labels[a], C.basis_labels[c]) for a, c in pairs)
    N = {}
    for (a1, c1), (a2, c2) in itertools.product(pairs, repeat=2):
        i = index[(a1, c1)]
        j = index[(a2, c2)]
        left = A.product(a1, m.tri_l(m.deg_c(c1), a2))
        right = C.product(m.tri_r(c1, m.deg_a(a2)), c2)
        for (a, na), (c, nc) in itertools.product(left.items(), right.items()):
            N[(i, j, index[(a, c)])] = _check_u64(na * nc, f"bicrossed N at ({i},{j})")
    dual = tuple(
        index[(m.tri_l(K.inv(m.deg_c(c)), A.dual[a]),
               m.tri_r(C.dual[c], H.inv(m.deg_a(a))))]
        for a, c in pairs
    )
    return FusionRing(labels, index[(A.unit_index, C.unit_index)], dual, N)
