"""Gradings of fusion rings: adjoint subring, universal grading group,
pointed subring, nilpotency, and verification of arbitrary gradings.

The universal grading group U(R) is computed from the decomposition of R
into indecomposable based modules over the adjoint subring: basis elements
connected by the left adjoint action lie in the same degree class, and the
classes multiply as a group.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, InputError, InternalInconsistencyError
from .groups import FiniteGroup
from .report import Report, ReportBuilder
from .rings import FusionRing, Subring, subring_generated

HOM_SEARCH_CAP = 64


@dataclass(frozen=True, eq=False)
class Grading:
    """A grading of a fusion ring: a finite group plus a degree per basis
    index.  `universal_grading` returns the canonical universal one."""

    group: FiniteGroup
    degree: tuple[int, ...]


def adjoint_subring(R: FusionRing) -> Subring:
    """Closure of the support of I(1) = sum_i b_i b_i*."""
    seed = set()
    for i in range(R.rank):
        seed.update(R.product(i, R.dual[i]))
    return subring_generated(R, seed)


def _components(R: FusionRing, adjoint: tuple[int, ...], side: str) -> list[int]:
    """Union-find components of the basis under the one-sided adjoint
    action: j ~ k when some adjoint x has b_x b_j (or b_j b_x) ⊇ b_k."""
    parent = list(range(R.rank))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for x in adjoint:
        for j in range(R.rank):
            prod = R.product(x, j) if side == "left" else R.product(j, x)
            for k in prod:
                union(j, k)
    return [find(i) for i in range(R.rank)]


def universal_grading(R: FusionRing) -> Grading:
    """Universal grading of a valid fusion ring.

    Well-definedness failures (a product straddling two classes, a
    non-group class table) indicate an invalid input ring and raise
    InternalInconsistencyError.
    """
    ad = adjoint_subring(R).indices
    left = _components(R, ad, "left")
    right = _components(R, ad, "right")
    if [sorted(i for i in range(R.rank) if left[i] == r) for r in sorted(set(left))] != \
       [sorted(i for i in range(R.rank) if right[i] == r) for r in sorted(set(right))]:
        raise InternalInconsistencyError("left and right adjoint components disagree")

    # Order classes: identity class (the one containing the unit) first,
    # the rest by minimal basis representative.
    roots = sorted(set(left))
    unit_root = left[R.unit_index]
    roots = [unit_root] + [r for r in roots if r != unit_root]
    class_of = {r: c for c, r in enumerate(roots)}
    degree = tuple(class_of[left[i]] for i in range(R.rank))

    if tuple(sorted(i for i in range(R.rank) if degree[i] == 0)) != ad:
        raise InternalInconsistencyError("identity component differs from the adjoint basis")

    m = len(roots)
    table = [[-1] * m for _ in range(m)]
    for i, j in itertools.product(range(R.rank), repeat=2):
        targets = {degree[k] for k in R.product(i, j)}
        if not targets:
            continue
        if len(targets) > 1:
            raise InternalInconsistencyError(
                f"product of basis {i},{j} is not homogeneous")
        t = targets.pop()
        di, dj = degree[i], degree[j]
        if table[di][dj] not in (-1, t):
            raise InternalInconsistencyError(
                f"class product ({di},{dj}) not well-defined")
        table[di][dj] = t
    if any(x == -1 for row in table for x in row):
        raise InternalInconsistencyError("class product table is incomplete")

    labels = []
    for c, r in enumerate(roots):
        rep = min(i for i in range(R.rank) if degree[i] == c)
        labels.append(R.basis_labels[rep])
    group = FiniteGroup(tuple(labels), tuple(tuple(row) for row in table), 0)
    gr = group.validate()
    if not gr.passed:
        raise InternalInconsistencyError(
            f"universal degree classes do not form a group: {gr.failures()[0].name}")
    return Grading(group, degree)


def pointed_subring(R: FusionRing) -> Subring:
    """Subring on the invertible basis elements (b b* = 1 exactly)."""
    pts = [i for i in range(R.rank) if R.product(i, R.dual[i]) == {R.unit_index: 1}]
    closure = subring_generated(R, pts)
    if set(closure.indices) != set(pts):
        raise InternalInconsistencyError("invertible elements are not closed")
    return closure


def is_nilpotent(R: FusionRing) -> tuple[bool, int]:
    """Iterate the adjoint series R ⊇ R_ad ⊇ (R_ad)_ad ⊇ ... until stable.

    Returns (nilpotent, depth) with depth the number of strictly
    decreasing steps; nilpotent iff the fixed point is {unit}.
    """
    current = Subring(R, tuple(range(R.rank)))
    depth = 0
    while True:
        ring, to_parent = current.as_ring()
        nxt_local = adjoint_subring(ring).indices
        nxt = Subring(R, tuple(to_parent[l] for l in nxt_local))
        if nxt.indices == current.indices:
            return current.indices == (R.unit_index,), depth
        current = nxt
        depth += 1


def verify_grading(R: FusionRing, G: FiniteGroup, degree) -> Report:
    degree = tuple(degree)
    if len(degree) != R.rank or any(not 0 <= d < G.order for d in degree):
        raise InputError("degree map must assign a group element to every basis index")
    rb = ReportBuilder()

    ok = degree[R.unit_index] == G.identity
    rb.add("unit_degree", ok, "" if ok else f"degree(unit)={degree[R.unit_index]}")

    bad = next((i for i in range(R.rank) if degree[R.dual[i]] != G.inv(degree[i])), None)
    rb.add("dual_degree", bad is None, "" if bad is None else f"i={bad}")

    witness = ""
    for (i, j, k) in R.N:
        if degree[k] != G.mul(degree[i], degree[j]):
            witness = f"(i,j,k)=({i},{j},{k})"
            break
    rb.add("homogeneity", not witness, witness)

    missing = sorted(set(range(G.order)) - set(degree))
    rb.add("faithfulness", not missing,
           "" if not missing else f"group element {missing[0]} has empty fiber")
    return rb.build()


def factor_through_universal(R: FusionRing, G: FiniteGroup, degree):
    """The surjective group map U(R) -> G through which a verified grading
    factors.

    Because the universal degree map is surjective, the map is forced:
    pi(u) must be the common G-degree of the fiber of u.  Returns the map
    as a list indexed by U(R) elements, or None if no such homomorphism
    exists.
    """
    uni = universal_grading(R)
    U = uni.group
    if U.order > HOM_SEARCH_CAP:
        raise CapExceededError(f"homomorphism search capped at order {HOM_SEARCH_CAP}")
    degree = tuple(degree)
    pi = [-1] * U.order
    for i in range(R.rank):
        u = uni.degree[i]
        if pi[u] not in (-1, degree[i]):
            return None
        pi[u] = degree[i]
    if any(x == -1 for x in pi):
        raise InternalInconsistencyError("universal degree map is not surjective")
    for u, v in itertools.product(range(U.order), repeat=2):
        if pi[U.mul(u, v)] != G.mul(pi[u], pi[v]):
            return None
    if pi[U.identity] != G.identity:
        return None
    return pi
