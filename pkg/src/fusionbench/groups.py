"""Finite groups as explicit multiplication tables.

All groups in scope are tiny, so everything is done by exhaustive
enumeration: validation, inverse lookup, isomorphism search.
Elements are referred to by index; labels are cosmetic but unique.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import CapExceededError, InputError
from .report import ReportBuilder, Report

ISO_SEARCH_CAP = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    element_labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self):
        n = len(self.element_labels)
        if n == 0:
            raise InputError("group must be non-empty")
        if len(set(self.element_labels)) != n or any(not s for s in self.element_labels):
            raise InputError("group labels must be distinct and non-empty")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError("group table must be square of matching size")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise InputError("group table entry out of range")
        if not 0 <= self.identity < n:
            raise InputError("group identity index out of range")

    @property
    def order(self) -> int:
        return len(self.element_labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        for j in range(self.order):
            if self.table[i][j] == self.identity:
                return j
        raise InputError(f"element {i} has no inverse")

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def validate(self) -> Report:
        rb = ReportBuilder()
        n = self.order

        latin = True
        witness = ""
        for i in range(n):
            if len(set(self.table[i])) != n or len({self.table[j][i] for j in range(n)}) != n:
                latin, witness = False, f"row/column {i} not a permutation"
                break
        rb.add("latin_square", latin, witness)

        ident = all(self.table[self.identity][j] == j and self.table[j][self.identity] == j
                    for j in range(n))
        rb.add("identity", ident, "" if ident else f"index {self.identity} is not a two-sided identity")

        assoc, witness = True, ""
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                assoc, witness = False, f"(i,j,k)=({i},{j},{k})"
                break
        rb.add("associativity", assoc, witness)

        invs = all(self.identity in self.table[i] for i in range(n))
        rb.add("inverses", invs, "" if invs else "some element has no right inverse")
        return rb.build()


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("cyclic group order must be >= 1")
    labels = tuple("e" if i == 0 else ("g" if i == 1 else f"g{i}") for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(labels, table, 0)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = list(itertools.product(range(G.order), range(H.order)))
    index = {p: i for i, p in enumerate(pairs)}
    labels = tuple(f"({G.element_labels[a]},{H.element_labels[b]})" for a, b in pairs)
    table = tuple(
        tuple(index[(G.mul(a, c), H.mul(b, d))] for c, d in pairs) for a, b in pairs
    )
    return FiniteGroup(labels, table, index[(G.identity, H.identity)])


def symmetric_group_3() -> FiniteGroup:
    """S3 as permutations of {0,1,2} in lexicographic order."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p∘q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    labels = tuple("".join(map(str, p)) for p in perms)
    table = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    return FiniteGroup(labels, table, index[(0, 1, 2)])


def parse_group_name(name: str) -> FiniteGroup:
    """Accepts shorthand Cn and CnxCm (e.g. C2, C2xC2, C3xC4) and S3."""
    if name.upper() == "S3":
        return symmetric_group_3()
    m = re.fullmatch(r"C(\d+)(?:[xX]C(\d+))?", name)
    if not m:
        raise InputError(f"unrecognized group shorthand: {name!r}")
    G = cyclic_group(int(m.group(1)))
    if m.group(2):
        G = direct_product(G, cyclic_group(int(m.group(2))))
    return G


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, cap: int = ISO_SEARCH_CAP):
    """Brute-force isomorphism search with pruning.

    Returns a list f with f[i] the image of i, or None if no isomorphism
    exists.  Orders above `cap` raise CapExceededError.
    """
    if G.order != H.order:
        return None
    if G.order > cap:
        raise CapExceededError(f"isomorphism search capped at order {cap}")
    n = G.order
    orders_G = [G.element_order(i) for i in range(n)]
    orders_H = [H.element_order(i) for i in range(n)]
    if sorted(orders_G) != sorted(orders_H):
        return None

    f = [-1] * n
    used = [False] * n
    f[G.identity] = H.identity
    used[H.identity] = True
    todo = [i for i in range(n) if i != G.identity]

    def extend(pos: int) -> bool:
        if pos == len(todo):
            return True
        i = todo[pos]
        for x in range(n):
            if used[x] or orders_H[x] != orders_G[i]:
                continue
            f[i] = x
            used[x] = True
            ok = True
            for j in range(n):
                if f[j] < 0:
                    continue
                p, q = G.mul(i, j), G.mul(j, i)
                if f[p] >= 0 and f[p] != H.mul(x, f[j]):
                    ok = False
                    break
                if f[q] >= 0 and f[q] != H.mul(f[j], x):
                    ok = False
                    break
            if ok and extend(pos + 1):
                return True
            f[i] = -1
            used[x] = False
        return False

    return list(f) if extend(0) else None


def is_automorphism(G: FiniteGroup, perm) -> bool:
    n = G.order
    if sorted(perm) != list(range(n)):
        return False
    return all(perm[G.mul(i, j)] == G.mul(perm[i], perm[j])
               for i in range(n) for j in range(n))
