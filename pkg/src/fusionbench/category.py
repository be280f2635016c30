"""Associator data for multiplicity-free fusion rings and numerical
coherence checks.

F-block convention: for simples a,b,c and target simple d, the block
assoc[(a,b,c,d)] is the matrix of the associator (a⊗b)⊗c -> a⊗(b⊗c)
restricted to d, with rows indexed by the admissible left intermediates e
(N[a,b,e] = N[e,c,d] = 1) and columns by the admissible right
intermediates f (N[b,c,f] = N[a,f,d] = 1), both in increasing index
order.  Entry [e,f] is the coefficient carried from the left path through
e to the right path through f.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ParameterError, VerificationError
from .grading import Grading
from .groups import FiniteGroup, cyclic_group, is_automorphism
from .matched_pair import (GroupMatchedPair, RingMatchedPair, ring_bicrossed)
from .report import Report, ReportBuilder
from .rings import FusionRing

DEFAULT_TOL = 1e-9
TRIANGLE_TOL = 1e-12


# ---------------------------------------------------------------------------
# Scalar parameter tables


@dataclass(frozen=True, eq=False)
class Bicharacter:
    group: FiniteGroup
    table: tuple[tuple[complex, ...], ...]

    def __post_init__(self):
        n = self.group.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError("bicharacter table must be square of group order")

    def __call__(self, g: int, h: int) -> complex:
        return self.table[g][h]


@dataclass(frozen=True, eq=False)
class ThreeCocycle:
    group: FiniteGroup
    table: tuple  # [g][h][k] -> complex

    def __post_init__(self):
        n = self.group.order
        if len(self.table) != n or any(
                len(p) != n or any(len(row) != n for row in p) for p in self.table):
            raise InputError("3-cocycle table must be cubic of group order")

    def __call__(self, g: int, h: int, k: int) -> complex:
        return self.table[g][h][k]


def validate_bicharacter(b: Bicharacter, tol: float = DEFAULT_TOL) -> Report:
    G = b.group
    if not G.is_abelian():
        raise InputError("bicharacters require an abelian group")
    rb = ReportBuilder()
    n = G.order

    res, witness = 0.0, ""
    for g, h in itertools.product(range(n), repeat=2):
        d = abs(b(g, h) - b(h, g))
        if d > res:
            res, witness = d, f"(g,h)=({g},{h})"
    rb.add("symmetric", res <= tol, witness if res > tol else "", res)

    res, witness = 0.0, ""
    for g, h, k in itertools.product(range(n), repeat=3):
        d = abs(b(G.mul(g, h), k) - b(g, k) * b(h, k))
        if d > res:
            res, witness = d, f"(g,h,k)=({g},{h},{k})"
    rb.add("bimultiplicative", res <= tol, witness if res > tol else "", res)

    degenerate = next(
        (g for g in range(n)
         if g != G.identity and all(abs(b(g, h) - 1) <= tol for h in range(n))),
        None)
    rb.add("non_degenerate", degenerate is None,
           "" if degenerate is None else f"chi({degenerate},.) = 1")

    res, witness = 0.0, ""
    for g, h in itertools.product(range(n), repeat=2):
        d = abs(abs(b(g, h)) - 1)
        if d > res:
            res, witness = d, f"(g,h)=({g},{h})"
    rb.add("unimodular", res <= tol, witness if res > tol else "", res)
    return rb.build()


def validate_cocycle(w: ThreeCocycle, tol: float = DEFAULT_TOL) -> Report:
    G = w.group
    rb = ReportBuilder()
    n, e = G.order, G.identity

    res, witness = 0.0, ""
    for g, h in itertools.product(range(n), repeat=2):
        for val, where in ((w(e, g, h), f"(e,{g},{h})"),
                           (w(g, e, h), f"({g},e,{h})"),
                           (w(g, h, e), f"({g},{h},e)")):
            d = abs(val - 1)
            if d > res:
                res, witness = d, where
    rb.add("normalized", res <= tol, witness if res > tol else "", res)

    res, witness = 0.0, ""
    for g, h, k in itertools.product(range(n), repeat=3):
        d = abs(abs(w(g, h, k)) - 1)
        if d > res:
            res, witness = d, f"({g},{h},{k})"
    rb.add("unimodular", res <= tol, witness if res > tol else "", res)

    res, witness = 0.0, ""
    for g, h, k, l in itertools.product(range(n), repeat=4):
        lhs = w(h, k, l) * w(g, G.mul(h, k), l) * w(g, h, k)
        rhs = w(G.mul(g, h), k, l) * w(g, h, G.mul(k, l))
        d = abs(lhs - rhs)
        if d > res:
            res, witness = d, f"({g},{h},{k},{l})"
    rb.add("cocycle_identity", res <= tol, witness if res > tol else "", res)
    return rb.build()


# ---------------------------------------------------------------------------
# Category data


@dataclass(frozen=True, eq=False)
class FusionCategoryData:
    ring: FusionRing
    assoc: dict  # (a,b,c,d) -> Block
    unit_l: tuple[complex, ...]
    unit_r: tuple[complex, ...]

    def fsym(self, a, b, c, d, e, f) -> complex:
        block = self.assoc.get((a, b, c, d))
        if block is None:
            raise InputError(f"missing associator block ({a},{b},{c},{d})")
        try:
            return block.mat[block.row_index[e], block.col_index[f]]
        except KeyError:
            return 0j


@dataclass(frozen=True, eq=False)
class Block:
    rows: tuple[int, ...]  # admissible left intermediates e, increasing
    cols: tuple[int, ...]  # admissible right intermediates f, increasing
    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "row_index", {e: i for i, e in enumerate(self.rows)})
        object.__setattr__(self, "col_index", {f: i for i, f in enumerate(self.cols)})


def _admissible(R: FusionRing, a, b, c, d):
    """(rows, cols) of the (a,b,c,d) block for a multiplicity-free ring."""
    rows = tuple(e for e in R.product(a, b) if R.n(e, c, d) == 1)
    cols = tuple(f for f in R.product(b, c) if R.n(a, f, d) == 1)
    return rows, cols


def _make_category(R: FusionRing, entry) -> FusionCategoryData:
    """Populate every admissible block using entry(a,b,c,d,e,f) -> complex."""
    if not R.is_multiplicity_free():
        raise InputError("categorical layer requires a multiplicity-free ring")
    n = R.rank
    assoc = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        targets = set()
        for e in R.product(a, b):
            targets.update(R.product(e, c))
        for d in sorted(targets):
            rows, cols = _admissible(R, a, b, c, d)
            if len(rows) != len(cols):
                raise InputError(
                    f"non-square admissible block ({a},{b},{c},{d})")
            mat = np.array(
                [[complex(entry(a, b, c, d, e, f)) for f in cols] for e in rows],
                dtype=complex).reshape(len(rows), len(cols))
            assoc[(a, b, c, d)] = Block(rows, cols, mat)
    ones = tuple(1 + 0j for _ in range(n))
    return FusionCategoryData(R, assoc, ones, ones)


# ---------------------------------------------------------------------------
# Ring constructors


def group_ring(G: FiniteGroup) -> FusionRing:
    N = {(i, j, G.mul(i, j)): 1 for i in range(G.order) for j in range(G.order)}
    dual = tuple(G.inv(i) for i in range(G.order))
    return FusionRing(G.element_labels, G.identity, dual, N)


def ty_ring(G: FiniteGroup, x_label: str = "X") -> FusionRing:
    """Tambara-Yamagami ring: basis G ∪ {X}, gX = Xg = X, X² = Σ_g g."""
    n = G.order
    x = n
    N = {(i, j, G.mul(i, j)): 1 for i in range(n) for j in range(n)}
    for g in range(n):
        N[(g, x, x)] = 1
        N[(x, g, x)] = 1
        N[(x, x, g)] = 1
    dual = tuple(G.inv(i) for i in range(n)) + (x,)
    return FusionRing(G.element_labels + (x_label,), G.identity, dual, N)


def fibonacci_ring() -> FusionRing:
    return FusionRing(("1", "x"), 0, (0, 1),
                      {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1,
                       (1, 1, 0): 1, (1, 1, 1): 1})


# ---------------------------------------------------------------------------
# Category constructors


def trivial_cocycle(G: FiniteGroup) -> ThreeCocycle:
    n = G.order
    one = 1 + 0j
    return ThreeCocycle(G, tuple(tuple((one,) * n for _ in range(n)) for _ in range(n)))


def c2_nontrivial_cocycle() -> ThreeCocycle:
    """The nontrivial normalized 3-cocycle on C2: ω(g,g,g) = -1."""
    G = cyclic_group(2)
    table = [[[1 + 0j, 1 + 0j] for _ in range(2)] for _ in range(2)]
    table[1][1][1] = -1 + 0j
    return ThreeCocycle(G, tuple(tuple(tuple(row) for row in p) for p in table))


def standard_bicharacter(G: FiniteGroup) -> Bicharacter:
    """A non-degenerate symmetric bicharacter on Cn or Cn x Cm.

    On Cn: chi(g^a, g^b) = exp(2·pi·i·ab/n).  On a direct product the
    tables multiply.  For C2 this is chi(g,g) = -1; for C4, chi(g,g) = i.
    """
    if not G.is_abelian():
        raise InputError("bicharacters require an abelian group")

    def decompose(G):
        # Recover exponents along a decomposition into at most two cyclic
        # factors by matching the label convention of parse_group_name.
        n = G.order
        gens = []
        # greedy: pick a maximal-order element, then another covering the rest
        by_order = sorted(range(n), key=G.element_order, reverse=True)
        g = by_order[0]
        span = {G.identity}
        x = g
        while x != G.identity:
            span.add(x)
            x = G.mul(x, g)
        gens.append((g, G.element_order(g)))
        if len(span) < n:
            def cyclic_span(i):
                s, x = {G.identity}, i
                while x != G.identity:
                    s.add(x)
                    x = G.mul(x, i)
                return s

            h = next(i for i in by_order
                     if i not in span and cyclic_span(i) & span == {G.identity})
            gens.append((h, G.element_order(h)))
            covered = set()
            for a in range(gens[0][1]):
                for b in range(gens[1][1]):
                    x = G.identity
                    for _ in range(a):
                        x = G.mul(x, g)
                    for _ in range(b):
                        x = G.mul(x, h)
                    covered.add(x)
            if len(covered) < n:
                raise InputError("group is not a product of at most two cyclic factors")
        return gens

    gens = decompose(G)
    # exponent coordinates of each element
    coords = {}
    ranges = [range(m) for _, m in gens]
    for exps in itertools.product(*ranges):
        x = G.identity
        for (g, _), a in zip(gens, exps):
            for _ in range(a):
                x = G.mul(x, g)
        coords.setdefault(x, exps)
    table = []
    for i in range(G.order):
        row = []
        for j in range(G.order):
            val = 1 + 0j
            for (_, m), a, b in zip(gens, coords[i], coords[j]):
                val *= cmath.exp(2j * cmath.pi * a * b / m)
            row.append(val)
        table.append(tuple(row))
    chi = Bicharacter(G, tuple(table))
    rep = validate_bicharacter(chi)
    if not rep.passed:
        raise InputError("standard bicharacter construction failed for this group")
    return chi


def build_pointed(G: FiniteGroup, w: ThreeCocycle) -> FusionCategoryData:
    """Vec_G^ω: ring ZG, every block the 1x1 matrix [ω(g,h,k)]."""
    if w.group is not G and w.group.table != G.table:
        raise InputError("cocycle must live on the same group")
    rep = validate_cocycle(w)
    if not rep.passed:
        raise VerificationError("3-cocycle is invalid", rep)
    R = group_ring(G)
    return _make_category(R, lambda a, b, c, d, e, f: w(a, b, c))


def build_TY(G: FiniteGroup, chi: Bicharacter, tau: float) -> FusionCategoryData:
    """TY(Γ, χ, τ) with the standard associator:
    α[g,X,h] = χ(g,h), α[X,g,X] = ⊕_h χ(g,h), α[X,X,X] = (τ/χ(g,h))_{g,h},
    identity otherwise."""
    rep = validate_bicharacter(chi)
    if not rep.passed:
        raise VerificationError("bicharacter is invalid", rep)
    if abs(tau * tau - 1.0 / G.order) >= 1e-12:
        raise ParameterError("tau_normalization: tau^2 != 1/|Gamma|")
    R = ty_ring(G)
    x = G.order

    def entry(a, b, c, d, e, f):
        kinds = (a == x, b == x, c == x)
        if kinds == (False, True, False):
            return chi(a, c)
        if kinds == (True, False, True):
            return chi(b, d)  # target d in Γ is the right intermediate label
        if kinds == (True, True, True):
            return tau / chi(e, f)
        return 1 + 0j

    return _make_category(R, entry)


# ---------------------------------------------------------------------------
# Bicrossed category engine

def bicrossed_category(catA: FusionCategoryData, catC: FusionCategoryData,
                       m: RingMatchedPair, gamma, eta, L2, R2) -> FusionCategoryData:
    """Associator of the bicrossed product category from lifting data.

    The lifting maps are scalar on simples in all in-scope families:
      gamma(k, a, a'): component of γ^k_{a,a'} (one scalar for the block)
      eta(h, c, c'):   component of η^h_{c,c'}
      L2(k, k', a):    (L²_{k,k'})_a
      R2(h, h', c):    (R²_{h,h'})_c
    Each F-block of the product is a scalar multiple of an A-block times a
    C-block entry with the index relabelings dictated by the actions.
    """
    A, C = m.A, m.C
    H, K = m.H, m.K
    B = ring_bicrossed(m)
    nc = C.rank

    def entry(i1, i2, i3, dd, ee, ff):
        A1, C1 = divmod(i1, nc)
        A2, C2 = divmod(i2, nc)
        A3, C3 = divmod(i3, nc)
        DA, DC = divmod(dd, nc)
        EA, EC = divmod(ee, nc)
        FA, FC = divmod(ff, nc)
        k1 = m.deg_c(C1)
        k2 = m.deg_c(C2)
        h2 = m.deg_a(A2)
        h3 = m.deg_a(A3)

        a2p = m.tri_l(k1, A2)                       # |C1| ▷ A2
        k12 = K.mul(m.gmp.r(k1, h2), k2)            # (|C1|◀|A2|)·|C2|
        a3p = m.tri_l(k12, A3)                      # k12 ▷ A3
        hh = H.mul(h2, m.gmp.l(k2, h3))             # |A2|·(|C2|▶|A3|)
        c1p = m.tri_r(C1, hh)
        c2p = m.tri_r(C2, h3)

        sA = catA.fsym(A1, a2p, a3p, DA, EA, m.tri_l(k1, FA))
        if sA == 0:
            return 0j
        sC = catC.fsym(c1p, c2p, C3, DC, m.tri_r(EC, h3), FC)
        if sC == 0:
            return 0j
        s_left = 1.0 / (gamma(k1, A2, m.tri_l(k2, A3))
                        * L2(m.gmp.r(k1, h2), k2, A3))
        s_right = eta(h3, m.tri_r(C1, h2), C2) * R2(h2, m.gmp.l(k2, h3), C1)
        return s_left * s_right * sA * sC

    return _make_category(B, entry)


# ---------------------------------------------------------------------------
# Explicit bicrossed families


def _character_check(K: FiniteGroup, mu, tol=DEFAULT_TOL) -> str:
    for k, kp in itertools.product(range(K.order), repeat=2):
        if abs(mu[K.mul(k, kp)] - mu[k] * mu[kp]) > tol:
            return f"({k},{kp})"
    return ""


def _two_cocycle_check(K: FiniteGroup, lam, tol=DEFAULT_TOL) -> str:
    e = K.identity
    for k in range(K.order):
        if abs(lam[e][k] - 1) > tol or abs(lam[k][e] - 1) > tol:
            return f"not normalized at {k}"
    for a, b, c in itertools.product(range(K.order), repeat=3):
        lhs = lam[b][c] * lam[a][K.mul(b, c)]
        rhs = lam[a][b] * lam[K.mul(a, b)][c]
        if abs(lhs - rhs) > tol:
            return f"({a},{b},{c})"
    return ""


@dataclass(frozen=True, eq=False)
class TYPointedParams:
    """Parameters of a bicrossed product of TY(Γ,χ,τ) with Vec_K^ω.

    phi: order <= 2 automorphism of K, as a permutation.
    phi_action: per K element, an automorphism of Γ (the action varphi).
    lambda_X: normalized 2-cocycle on K, table [k][k'].
    mu: character of K.  f, beta, lam: the remaining lifting data; lam[k][h][h']
    is the λ_k family on C2 = {e, σ} (h index 0 = e, 1 = σ).
    """

    gamma_group: FiniteGroup
    chi: Bicharacter
    tau: float
    K: FiniteGroup
    omega: ThreeCocycle
    phi: tuple[int, ...]
    phi_action: tuple[tuple[int, ...], ...]
    lambda_X: tuple[tuple[complex, ...], ...]
    mu: tuple[complex, ...]
    f: tuple[complex, ...]
    beta: tuple[tuple[complex, ...], ...]
    lam: tuple  # [k][h][h']

    @staticmethod
    def trivial(gamma_group, chi, tau, K, omega=None):
        n = K.order
        one = 1 + 0j
        return TYPointedParams(
            gamma_group, chi, tau, K,
            omega if omega is not None else trivial_cocycle(K),
            phi=tuple(range(n)),
            phi_action=tuple(tuple(range(gamma_group.order)) for _ in range(n)),
            lambda_X=tuple((one,) * n for _ in range(n)),
            mu=(one,) * n,
            f=(one,) * n,
            beta=tuple((one,) * n for _ in range(n)),
            lam=tuple(((one, one), (one, one)) for _ in range(n)),
        )

    def validate(self, tol: float = DEFAULT_TOL) -> Report:
        G, K = self.gamma_group, self.K
        rb = ReportBuilder()

        br = validate_bicharacter(self.chi, tol)
        rb.add("bicharacter", br.passed,
               "" if br.passed else br.failures()[0].name)
        rb.add("tau_normalization", abs(self.tau ** 2 - 1.0 / G.order) < 1e-12,
               f"tau^2 = {self.tau ** 2!r}, 1/|Gamma| = {1.0 / G.order!r}")

        wr = validate_cocycle(self.omega, tol)
        rb.add("three_cocycle", wr.passed,
               "" if wr.passed else wr.failures()[0].name)

        phi_ok = is_automorphism(K, self.phi) and \
            all(self.phi[self.phi[k]] == k for k in range(K.order))
        rb.add("phi_involution", phi_ok,
               "" if phi_ok else "phi is not an order <= 2 automorphism of K")

        act_ok = all(is_automorphism(G, p) for p in self.phi_action)
        witness = "" if act_ok else "some phi_k is not an automorphism of Gamma"
        if act_ok:
            for k, kp in itertools.product(range(K.order), repeat=2):
                kk = K.mul(k, kp)
                if any(self.phi_action[kk][g] !=
                       self.phi_action[k][self.phi_action[kp][g]]
                       for g in range(G.order)):
                    act_ok, witness = False, f"varphi not a K-action at ({k},{kp})"
                    break
        rb.add("varphi_action", act_ok, witness)

        # Eq. (invariant-chi-for-lifting)
        witness = ""
        if act_ok:
            for k, g, gp in itertools.product(range(K.order), range(G.order),
                                              range(G.order)):
                if abs(self.chi(self.phi_action[k][g], gp) - self.chi(g, gp)) > tol:
                    witness = f"(k,g,g')=({k},{g},{gp})"
                    break
        rb.add("chi_invariance", not witness, witness)

        w = _two_cocycle_check(K, self.lambda_X, tol)
        rb.add("lambda_X_two_cocycle", not w, w)

        w = _character_check(K, self.mu, tol)
        rb.add("mu_character", not w, w)

        # Eq. (condition-for-map-f)
        witness = ""
        for k in range(K.order):
            pk = self.phi[k]
            if abs(self.f[pk] - self.f[k] * self.mu[k] / self.mu[pk]) > tol:
                witness = f"f(phi(k)) rule at k={k}"
                break
        if not witness:
            for k, kp in itertools.product(range(K.order), repeat=2):
                lhs = self.f[K.mul(k, kp)]
                rhs = self.f[k] * self.f[kp] * self.lambda_X[k][kp] * \
                    self.lambda_X[self.phi[k]][self.phi[kp]]
                if abs(lhs - rhs) > tol:
                    witness = f"f product rule at ({k},{kp})"
                    break
        rb.add("f_condition", not witness, witness)

        witness = ""
        for k, kp, kpp in itertools.product(range(K.order), repeat=3):
            lhs = self.omega(k, kp, kpp) * self.beta[k][K.mul(kp, kpp)] * \
                self.beta[kp][kpp]
            rhs = self.beta[K.mul(k, kp)][kpp] * self.beta[k][kp] * \
                self.omega(self.phi[k], self.phi[kp], self.phi[kpp])
            if abs(lhs - rhs) > tol:
                witness = f"(k,k',k'')=({k},{kp},{kpp})"
                break
        rb.add("beta_condition", not witness, witness)

        # Eq. (condition-for-map-R2): λ_k(hh',h'') λ_k(h,h') =
        # λ_k(h,h'h'') λ_{k◀h}(h',h''), with k◀e = k, k◀σ = phi(k).
        witness = ""
        for k, h, hp, hpp in itertools.product(range(K.order), range(2),
                                               range(2), range(2)):
            kh = k if h == 0 else self.phi[k]
            lhs = self.lam[k][h ^ hp][hpp] * self.lam[k][h][hp]
            rhs = self.lam[k][h][hp ^ hpp] * self.lam[kh][hp][hpp]
            if abs(lhs - rhs) > tol:
                witness = f"(k,h,h',h'')=({k},{h},{hp},{hpp})"
                break
        rb.add("lambda_k_condition", not witness, witness)
        return rb.build()


def ty_pointed_matched_pair(p: TYPointedParams) -> RingMatchedPair:
    """Matched pair (TY(Γ), R(K), C2, K) with ▶ trivial and ◀ = φ."""
    G, K = p.gamma_group, p.K
    A = ty_ring(G)
    C = group_ring(K)
    C2 = cyclic_group(2)
    deg_a = tuple([0] * G.order + [1])
    deg_c = tuple(range(K.order))
    gmp = GroupMatchedPair(
        C2, K,
        act_l=tuple((0, 1) for _ in range(K.order)),
        act_r=tuple((k, p.phi[k]) for k in range(K.order)),
    )
    act_l = tuple(tuple(p.phi_action[k]) + (G.order,) for k in range(K.order))
    act_r = (tuple(range(K.order)), tuple(p.phi))
    return RingMatchedPair(A, C, Grading(C2, deg_a), Grading(K, deg_c),
                           gmp, act_l, act_r)


def build_TY_pointed_bicrossed(p: TYPointedParams) -> FusionCategoryData:
    """Bicrossed product of TY(Γ,χ,τ) with Vec_K^ω from lifting data."""
    rep = p.validate()
    if not rep.passed:
        raise ParameterError(
            "TY-pointed parameters violate: "
            + ", ".join(c.name for c in rep.failures()), rep)
    G, K = p.gamma_group, p.K
    x = G.order
    catA = build_TY(G, p.chi, p.tau)
    catC = build_pointed(K, p.omega)
    m = ty_pointed_matched_pair(p)

    def gamma(k, a1, a2):
        if a1 == x and a2 == x:
            return p.f[k]
        if a1 == x:
            return p.mu[p.phi[k]]
        return p.mu[k]

    def eta(h, c1, c2):
        return p.beta[c1][c2] if h == 1 else 1 + 0j

    def L2(k, kp, a):
        return p.lambda_X[k][kp] if a == x else 1 + 0j

    def R2(h, hp, c):
        return p.lam[c][h][hp]

    return bicrossed_category(catA, catC, m, gamma, eta, L2, R2)


@dataclass(frozen=True, eq=False)
class TYTYParams:
    """Parameters of a bicrossed product of two TY categories
    : order <= 2 automorphisms varphi of H and psi of K,
    and a pair of C2 characters theta_l, theta_r with values +-1."""

    H: FiniteGroup
    chi: Bicharacter
    tau: float
    K: FiniteGroup
    zeta: Bicharacter
    upsilon: float
    varphi: tuple[int, ...]
    psi: tuple[int, ...]
    theta_l: int  # theta_l(sigma) in {+1, -1}
    theta_r: int

    def validate(self, tol: float = DEFAULT_TOL) -> Report:
        rb = ReportBuilder()
        for name, chi, grp in (("bicharacter_chi", self.chi, self.H),
                               ("bicharacter_zeta", self.zeta, self.K)):
            r = validate_bicharacter(chi, tol)
            rb.add(name, r.passed, "" if r.passed else r.failures()[0].name)
        rb.add("tau_normalization",
               abs(self.tau ** 2 - 1.0 / self.H.order) < 1e-12,
               f"tau^2 = {self.tau ** 2!r}")
        rb.add("upsilon_normalization",
               abs(self.upsilon ** 2 - 1.0 / self.K.order) < 1e-12,
               f"upsilon^2 = {self.upsilon ** 2!r}")

        for name, perm, grp in (("varphi_involution", self.varphi, self.H),
                                ("psi_involution", self.psi, self.K)):
            ok = is_automorphism(grp, perm) and \
                all(perm[perm[i]] == i for i in range(grp.order))
            rb.add(name, ok, "" if ok else "not an order <= 2 automorphism")

        witness = ""
        for g, gp in itertools.product(range(self.H.order), repeat=2):
            if abs(self.chi(self.varphi[g], gp) - self.chi(g, gp)) > tol:
                witness = f"chi at ({g},{gp})"
                break
        rb.add("chi_invariance", not witness, witness)
        witness = ""
        for g, gp in itertools.product(range(self.K.order), repeat=2):
            if abs(self.zeta(self.psi[g], gp) - self.zeta(g, gp)) > tol:
                witness = f"zeta at ({g},{gp})"
                break
        rb.add("zeta_invariance", not witness, witness)

        rb.add("theta_values", self.theta_l in (1, -1) and self.theta_r in (1, -1),
               f"theta_l={self.theta_l}, theta_r={self.theta_r}")
        return rb.build()


def ty_ty_matched_pair(p: TYTYParams) -> RingMatchedPair:
    """Matched pair (TY(H), TY(K), C2, C2) with trivial group actions."""
    A = ty_ring(p.H)
    C = ty_ring(p.K, "Y")
    C2a = cyclic_group(2)
    C2b = cyclic_group(2)
    deg_a = tuple([0] * p.H.order + [1])
    deg_c = tuple([0] * p.K.order + [1])
    gmp = GroupMatchedPair(C2a, C2b,
                           act_l=((0, 1), (0, 1)),
                           act_r=((0, 0), (1, 1)))
    act_l = (tuple(range(p.H.order + 1)),
             tuple(p.varphi) + (p.H.order,))
    act_r = (tuple(range(p.K.order + 1)),
             tuple(p.psi) + (p.K.order,))
    return RingMatchedPair(A, C, Grading(C2a, deg_a), Grading(C2b, deg_c),
                           gmp, act_l, act_r)


def build_TY_TY_bicrossed(p: TYTYParams) -> FusionCategoryData:
    rep = p.validate()
    if not rep.passed:
        raise ParameterError(
            "TY-TY parameters violate: "
            + ", ".join(c.name for c in rep.failures()), rep)
    catA = build_TY(p.H, p.chi, p.tau)
    catC = build_TY(p.K, p.zeta, p.upsilon)
    m = ty_ty_matched_pair(p)
    xa, yc = p.H.order, p.K.order

    def gamma(g, a1, a2):
        return complex(p.theta_l) if (g == 1 and a1 == xa and a2 == xa) else 1 + 0j

    def eta(g, c1, c2):
        return complex(p.theta_r) if (g == 1 and c1 == yc and c2 == yc) else 1 + 0j

    def one(*args):
        return 1 + 0j

    return bicrossed_category(catA, catC, m, gamma, eta, one, one)


# ---------------------------------------------------------------------------
# Coherence checks


def check_pentagon(cat: FusionCategoryData, tol: float = DEFAULT_TOL,
                   early_stop: float | None = None) -> Report:
    """Compare the two composite reassociations of ((a⊗b)⊗c)⊗d on the
    path bases, for every 4-tuple of simples and every total simple m.

    With F(a,b,c,d)[e,f] the block entries, the pentagon reads
      F(a,b,w,m)[x,v] F(x,c,d,m)[y,w]
        = Σ_f F(a,b,c,y)[x,f] F(a,f,d,m)[y,v] F(b,c,d,v)[f,w]
    over left paths (x,y) and right paths (w,v).

    When `early_stop` is set, the scan returns as soon as a deviation of
    at least that size is found (the reported residual is then a lower
    bound on the true maximum).
    """
    R = cat.ring
    n = R.rank
    prod = [[sorted(R.product(i, j)) for j in range(n)] for i in range(n)]
    worst = 0.0
    witness = ""
    F = cat.fsym
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lefts = {}
        for x in prod[a][b]:
            for y in prod[x][c]:
                for mm in prod[y][d]:
                    lefts.setdefault(mm, []).append((x, y))
        rights = {}
        for w in prod[c][d]:
            for v in prod[b][w]:
                for mm in prod[a][v]:
                    rights.setdefault(mm, []).append((w, v))
        for mm, L in lefts.items():
            Rt = rights.get(mm, [])
            if len(Rt) != len(L):
                raise InputError(
                    f"path space mismatch at (a,b,c,d,m)=({a},{b},{c},{d},{mm})")
            for (x, y), (w, v) in itertools.product(L, Rt):
                lhs = F(x, c, d, mm, y, w) * F(a, b, w, mm, x, v)
                rhs = 0j
                for ff in prod[b][c]:
                    s1 = F(a, b, c, y, x, ff)
                    if s1 == 0:
                        continue
                    s2 = F(a, ff, d, mm, y, v)
                    if s2 == 0:
                        continue
                    rhs += s1 * s2 * F(b, c, d, v, ff, w)
                dev = abs(lhs - rhs)
                if dev > worst:
                    worst = dev
                    witness = f"(a,b,c,d,m)=({a},{b},{c},{d},{mm})"
                    if early_stop is not None and worst >= early_stop:
                        rb = ReportBuilder()
                        rb.add("pentagon", worst <= tol, witness, worst)
                        return rb.build()
    rb = ReportBuilder()
    rb.add("pentagon", worst <= tol, witness if worst > tol else "", worst)
    return rb.build()


def check_triangle(cat: FusionCategoryData, tol: float = TRIANGLE_TOL) -> Report:
    """Triangle axiom: (id_a ⊗ l_c) ∘ α_{a,1,c} = r_a ⊗ id_c, i.e. the
    1x1 block at (a, unit, c, d) must equal unit_r(a)/unit_l(c)."""
    R = cat.ring
    u = R.unit_index
    worst, witness = 0.0, ""
    for a in range(R.rank):
        for c in range(R.rank):
            expected = cat.unit_r[a] / cat.unit_l[c]
            for d in R.product(a, c):
                dev = abs(cat.fsym(a, u, c, d, a, c) - expected)
                if dev > worst:
                    worst, witness = dev, f"(a,c,d)=({a},{c},{d})"
    rb = ReportBuilder()
    rb.add("triangle", worst <= tol, witness if worst > tol else "", worst)
    return rb.build()


def perturb_block_entry(cat: FusionCategoryData, key, e, f,
                        factor: complex = -1) -> FusionCategoryData:
    """Copy of `cat` with one block entry multiplied by `factor`."""
    block = cat.assoc[key]
    mat = block.mat.copy()
    mat[block.row_index[e], block.col_index[f]] *= factor
    assoc = dict(cat.assoc)
    assoc[key] = Block(block.rows, block.cols, mat)
    return FusionCategoryData(cat.ring, assoc, cat.unit_l, cat.unit_r)


def non_identity_blocks(cat: FusionCategoryData) -> list:
    out = []
    for key, block in sorted(cat.assoc.items()):
        n = len(block.rows)
        if not np.allclose(block.mat, np.eye(n), atol=1e-12):
            out.append(key)
    return out


def gauge_transform(cat: FusionCategoryData, g) -> FusionCategoryData:
    """Vertex gauge with per-pair unimodular scalars g(a,b):
    F'[e,f] = F[e,f] · g(b,c) g(a,f) / (g(a,b) g(e,c)).
    Preserves the pentagon exactly (a special vertex gauge)."""
    assoc = {}
    for (a, b, c, d), block in cat.assoc.items():
        mat = block.mat.copy()
        for i, e in enumerate(block.rows):
            for j, f in enumerate(block.cols):
                mat[i, j] *= g(b, c) * g(a, f) / (g(a, b) * g(e, c))
        assoc[(a, b, c, d)] = Block(block.rows, block.cols, mat)
    return FusionCategoryData(cat.ring, assoc, cat.unit_l, cat.unit_r)
