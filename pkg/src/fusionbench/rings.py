"""Fusion rings: exact integer structure constants, validation,
arithmetic, subrings, and Frobenius-Perron dimensions.

A fusion ring is a free Z-module with a distinguished basis, nonnegative
integer structure constants N[i,j,k] (the coefficient of b_k in b_i*b_j),
a unit basis element, and a duality involution i -> i* such that
N[i,j,unit] = delta(j, i*).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NumericError, OverflowLimitError
from .report import ReportBuilder, Report

U64_MAX = 2**64 - 1
FP_ITERATION_CAP = 10_000
FP_REL_TOL = 1e-12


def _check_u64(value: int, context: str) -> int:
    if value > U64_MAX:
        raise OverflowLimitError(f"structure constant exceeds 64 bits in {context}")
    return value


@dataclass(frozen=True, eq=False)
class FusionRing:
    basis_labels: tuple[str, ...]
    unit_index: int
    dual: tuple[int, ...]
    N: dict  # (i, j, k) -> positive int; absent means 0

    def __post_init__(self):
        n = len(self.basis_labels)
        if n == 0:
            raise InputError("fusion ring must have a non-empty basis")
        if len(set(self.basis_labels)) != n or any(not s for s in self.basis_labels):
            raise InputError("basis labels must be distinct and non-empty")
        if not 0 <= self.unit_index < n:
            raise InputError("unit index out of range")
        if sorted(self.dual) != list(range(n)):
            raise InputError("dual must be a permutation of basis indices")
        clean = {}
        for key, v in self.N.items():
            try:
                i, j, k = key
            except (TypeError, ValueError):
                raise InputError(f"bad N key {key!r}") from None
            if not all(0 <= x < n for x in (i, j, k)):
                raise InputError(f"N index out of range: {key}")
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InputError(f"N value must be a nonnegative integer: N{key}={v!r}")
            if v > 0:
                clean[(i, j, k)] = _check_u64(v, f"N{key}")
        object.__setattr__(self, "N", clean)
        prod = {}
        for (i, j, k), v in clean.items():
            prod.setdefault((i, j), {})[k] = v
        object.__setattr__(self, "_prod", prod)

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def product(self, i: int, j: int) -> dict:
        """Support of b_i * b_j as {k: N[i,j,k]}."""
        return self._prod.get((i, j), {})

    def n(self, i: int, j: int, k: int) -> int:
        return self.N.get((i, j, k), 0)

    def is_multiplicity_free(self) -> bool:
        return all(v <= 1 for v in self.N.values())

    def index_of(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise InputError(f"unknown basis label {label!r}") from None


@dataclass(frozen=True)
class RingElement:
    """Finitely supported integer combination of basis elements."""

    coeffs: dict

    @staticmethod
    def basis(i: int) -> "RingElement":
        return RingElement({i: 1})

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        a = {k: v for k, v in self.coeffs.items() if v != 0}
        b = {k: v for k, v in other.coeffs.items() if v != 0}
        return a == b

    def __hash__(self):
        return hash(frozenset((k, v) for k, v in self.coeffs.items() if v != 0))


@dataclass(frozen=True)
class Subring:
    parent: FusionRing
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    def as_ring(self) -> tuple[FusionRing, dict]:
        """Re-index as a standalone FusionRing.

        Returns (ring, to_parent) where to_parent[local] = parent index.
        """
        R = self.parent
        to_parent = dict(enumerate(self.indices))
        to_local = {p: l for l, p in to_parent.items()}
        n = len(self.indices)
        N = {}
        for li, lj in itertools.product(range(n), repeat=2):
            for k, v in R.product(to_parent[li], to_parent[lj]).items():
                if k not in to_local:
                    raise InputError("index set is not closed under multiplication")
                N[(li, lj, to_local[k])] = v
        if R.unit_index not in to_local:
            raise InputError("index set does not contain the unit")
        dual = tuple(to_local[R.dual[to_parent[l]]] for l in range(n))
        ring = FusionRing(
            tuple(R.basis_labels[p] for p in self.indices),
            to_local[R.unit_index], dual, N,
        )
        return ring, to_parent


def validate_fusion_ring(R: FusionRing) -> Report:
    """Check the six fusion ring axioms; witness = first violating tuple."""
    rb = ReportBuilder()
    n = R.rank
    u = R.unit_index

    bad = next((i for i in range(n) if R.dual[R.dual[i]] != i), None)
    rb.add("dual_involution", bad is None, "" if bad is None else f"i={bad}")

    witness = ""
    for i in range(n):
        if R.product(i, u) != {i: 1} or R.product(u, i) != {i: 1}:
            witness = f"i={i}"
            break
    rb.add("unit", not witness, witness)

    witness = ""
    for i, j in itertools.product(range(n), repeat=2):
        expected = 1 if j == R.dual[i] else 0
        if R.n(i, j, u) != expected:
            witness = f"(i,j)=({i},{j})"
            break
    rb.add("duality", not witness, witness)

    witness = ""
    for (i, j, k) in set(R.N) | {(R.dual[j], R.dual[i], R.dual[k]) for (i, j, k) in R.N}:
        if R.n(i, j, k) != R.n(R.dual[j], R.dual[i], R.dual[k]):
            witness = f"(i,j,k)=({i},{j},{k})"
            break
    rb.add("anti_automorphism", not witness, witness)

    witness = ""
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs, rhs = {}, {}
        for m, v in R.product(i, j).items():
            for l, w in R.product(m, k).items():
                lhs[l] = lhs.get(l, 0) + v * w
        for m, v in R.product(j, k).items():
            for l, w in R.product(i, m).items():
                rhs[l] = rhs.get(l, 0) + v * w
        if lhs != rhs:
            witness = f"(i,j,k)=({i},{j},{k})"
            break
    rb.add("associativity", not witness, witness)

    witness = ""
    for i, j, k in itertools.product(range(n), repeat=3):
        v = R.n(i, j, k)
        if v != R.n(R.dual[i], k, j) or v != R.n(k, R.dual[j], i):
            witness = f"(i,j,k)=({i},{j},{k})"
            break
    rb.add("frobenius_reciprocity", not witness, witness)
    return rb.build()


def multiply(R: FusionRing, x: RingElement, y: RingElement) -> RingElement:
    out: dict = {}
    for i, a in x.coeffs.items():
        if a == 0:
            continue
        for j, b in y.coeffs.items():
            if b == 0:
                continue
            for k, v in R.product(i, j).items():
                out[k] = out.get(k, 0) + a * b * v
    for k, v in out.items():
        if abs(v) > U64_MAX:
            raise OverflowLimitError(f"coefficient of basis {k} exceeds 64 bits")
    return RingElement({k: v for k, v in out.items() if v != 0})


def dual_element(R: FusionRing, x: RingElement) -> RingElement:
    return RingElement({R.dual[i]: v for i, v in x.coeffs.items() if v != 0})


def subring_generated(R: FusionRing, seed) -> Subring:
    """Worklist closure of seed + unit under dual and product supports."""
    members = set(seed) | {R.unit_index}
    if any(not 0 <= i < R.rank for i in members):
        raise InputError("seed index out of range")
    members |= {R.dual[i] for i in members}
    work = True
    while work:
        work = False
        for i, j in itertools.product(sorted(members), repeat=2):
            for k in R.product(i, j):
                if k not in members:
                    members.add(k)
                    members.add(R.dual[k])
                    work = True
    return Subring(R, tuple(sorted(members)))


def _fp_eigenvector(R: FusionRing) -> np.ndarray:
    """Perron eigenvector of left multiplication by the sum of all basis
    elements (a primitive nonnegative matrix for transitive fusion rings),
    by power iteration from the all-ones vector.

    Normalized so the unit coordinate is 1; coordinate i is then FPdim(b_i).
    """
    n = R.rank
    M = np.zeros((n, n))
    for (i, j, k), v in R.N.items():
        M[k, j] += v
    v = np.ones(n)
    for _ in range(FP_ITERATION_CAP):
        w = M @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            raise NumericError("left-multiplication matrix annihilated the iterate")
        w /= norm
        if np.linalg.norm(w - v) <= FP_REL_TOL * np.linalg.norm(v):
            v = w
            break
        v = w
    else:
        raise NumericError(f"power iteration did not converge in {FP_ITERATION_CAP} iterations")
    if v[R.unit_index] <= 0:
        raise NumericError("Perron eigenvector has non-positive unit coordinate")
    return v / v[R.unit_index]


def fpdim_basis(R: FusionRing, i: int) -> float:
    """Largest real eigenvalue of the left-multiplication matrix of b_i.

    The common Perron eigenvector d of all left multiplications satisfies
    M_i d = FPdim(b_i) d, so the Rayleigh quotient at d is exact up to the
    power-iteration tolerance.
    """
    if not 0 <= i < R.rank:
        raise InputError("basis index out of range")
    d = _fp_eigenvector(R)
    n = R.rank
    Mi = np.zeros((n, n))
    for j in range(n):
        for k, v in R.product(i, j).items():
            Mi[k, j] += v
    return float((d @ (Mi @ d)) / (d @ d))


def fpdim_ring(R: FusionRing) -> float:
    d = _fp_eigenvector(R)
    return float(np.sum(d * d))
