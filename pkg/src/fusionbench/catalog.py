"""Named example objects: rings, matched pairs, and category data.

Each entry is built deterministically from the library constructors, so
the files written by ``write_examples`` are byte-for-byte reproducible
with the ``make`` command-line verb.
"""
from __future__ import annotations

import math

from .category import (TYPointedParams, TYTYParams, build_pointed, build_TY,
                       build_TY_pointed_bicrossed, build_TY_TY_bicrossed,
                       c2_nontrivial_cocycle, fibonacci_ring, group_ring,
                       standard_bicharacter, trivial_cocycle, ty_ring)
from .grading import Grading
from .groups import cyclic_group, direct_product, symmetric_group_3
from .io import (category_to_dict, dumps_canonical, matched_pair_to_dict,
                 ring_to_dict)
from .matched_pair import GroupMatchedPair, RingMatchedPair


def _c2():
    return cyclic_group(2)


def _c2xc2():
    return direct_product(cyclic_group(2), cyclic_group(2))


def ising_category():
    """Ising-type Tambara-Yamagami data over C2 with tau = +1/sqrt(2)."""
    G = _c2()
    return build_TY(G, standard_bicharacter(G), 1 / math.sqrt(2))


def ty_c2_tau_minus_category():
    G = _c2()
    return build_TY(G, standard_bicharacter(G), -1 / math.sqrt(2))


def ty_c2xc2_category():
    G = _c2xc2()
    return build_TY(G, standard_bicharacter(G), 0.5)


def vec_c2_trivial_category():
    G = _c2()
    return build_pointed(G, trivial_cocycle(G))


def vec_c2_nontrivial_category():
    return build_pointed(_c2(), c2_nontrivial_cocycle())


def ty_pointed_params():
    """Trivial-parameter lifting data with Gamma = K = C2."""
    G = _c2()
    return TYPointedParams.trivial(G, standard_bicharacter(G),
                                   1 / math.sqrt(2), _c2())


def ty_pointed_c2_c2_category():
    return build_TY_pointed_bicrossed(ty_pointed_params())


def ty_ty_params(theta_l: complex = 1, theta_r: complex = 1):
    H, K = _c2(), _c2()
    tau = 1 / math.sqrt(2)
    return TYTYParams(H, standard_bicharacter(H), tau,
                      K, standard_bicharacter(K), tau,
                      (0, 1), (0, 1), theta_l, theta_r)


def ty_ty_c2_c2_category(theta_l: complex = 1, theta_r: complex = 1):
    """The rank-9 product of two Tambara-Yamagami categories over C2."""
    return build_TY_TY_bicrossed(ty_ty_params(theta_l, theta_r))


def ty_vec_matched_pair() -> RingMatchedPair:
    """TY(C2) matched with the group ring of C2, trivial actions."""
    from .grading import universal_grading

    A = ty_ring(_c2())
    C = group_ring(_c2())
    UA = universal_grading(A)
    UC = universal_grading(C)
    gmp = GroupMatchedPair(UA.group, UC.group,
                           act_l=((0, 1), (0, 1)), act_r=((0, 0), (1, 1)))
    ident_A = tuple(range(A.rank))
    ident_C = tuple(range(C.rank))
    return RingMatchedPair(A, C, UA, UC, gmp,
                           act_l=(ident_A, ident_A),
                           act_r=(ident_C, ident_C))


# name -> (kind, builder producing the library object)
CATALOG = {
    "ising": ("category", ising_category),
    "ty_c2_tau_minus": ("category", ty_c2_tau_minus_category),
    "ty_c2xc2": ("category", ty_c2xc2_category),
    "vec_c2_trivial": ("category", vec_c2_trivial_category),
    "vec_c2_nontrivial": ("category", vec_c2_nontrivial_category),
    "ty_pointed_c2_c2": ("category", ty_pointed_c2_c2_category),
    "ty_ty_c2_c2": ("category", ty_ty_c2_c2_category),
    "ty_c2_ring": ("ring", lambda: ty_ring(_c2())),
    "ty_c3_ring": ("ring", lambda: ty_ring(cyclic_group(3))),
    "ty_c2xc2_ring": ("ring", lambda: ty_ring(_c2xc2())),
    "zc6_ring": ("ring", lambda: group_ring(cyclic_group(6))),
    "zs3_ring": ("ring", lambda: group_ring(symmetric_group_3())),
    "fibonacci_ring": ("ring", fibonacci_ring),
    "ty_vec_matched_pair": ("matched_pair", ty_vec_matched_pair),
}

_SERIALIZERS = {
    "category": category_to_dict,
    "ring": ring_to_dict,
    "matched_pair": matched_pair_to_dict,
}


def render(name: str) -> str:
    """Canonical JSON text for a catalog entry."""
    kind, builder = CATALOG[name]
    return dumps_canonical(_SERIALIZERS[kind](builder()))


def write_examples(directory) -> list:
    """Write every catalog entry as <name>.json; returns the paths written."""
    import os

    os.makedirs(directory, exist_ok=True)
    paths = []
    for name in sorted(CATALOG):
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render(name))
        paths.append(path)
    return paths
