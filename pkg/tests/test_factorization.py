"""Exact factorization recognition and bicrossed certification."""
from __future__ import annotations

import pytest

from fusionbench import (Report, canonical_matched_pair, certify_theorem_iso,
                         check_exact_factorization, cyclic_group,
                         find_isomorphism, recover_actions, ring_bicrossed,
                         symmetric_group_3, universal_grading)
from fusionbench.catalog import ty_vec_matched_pair
from fusionbench.category import group_ring
from fusionbench.rings import subring_generated


def c6_split():
    R = group_ring(cyclic_group(6))
    return R, (0, 3), (0, 2, 4)


def s3_split():
    R = group_ring(symmetric_group_3())
    G = symmetric_group_3()
    rot = next(i for i in range(6) if G.element_order(i) == 3)
    refl = next(i for i in range(6) if G.element_order(i) == 2)
    a = subring_generated(R, [rot]).indices
    c = subring_generated(R, [refl]).indices
    return R, a, c


@pytest.mark.parametrize("split", [c6_split, s3_split])
def test_group_ring_factorizations(split):
    R, a, c = split()
    f = check_exact_factorization(R, a, c)
    assert not isinstance(f, Report)
    assert certify_theorem_iso(f).passed


def test_c6_recovered_actions_are_trivial():
    R, a, c = c6_split()
    f = check_exact_factorization(R, a, c)
    ell, r = recover_actions(f)
    assert all(ell[x][y] == y for x in c for y in a)
    assert all(r[y][x] == x for y in a for x in c)


def test_s3_recovers_the_inversion_action():
    R, a, c = s3_split()
    f = check_exact_factorization(R, a, c)
    rmp = canonical_matched_pair(f)
    assert rmp.A.rank == 3 and rmp.C.rank == 2
    # The reflection acts on the rotations by inversion.
    nontrivial = rmp.act_l[1]
    assert nontrivial != tuple(range(3))
    assert sorted(nontrivial) == [0, 1, 2]


def test_non_subring_rejected():
    R = group_ring(cyclic_group(6))
    report = check_exact_factorization(R, (0, 1), (0, 2, 4))
    assert isinstance(report, Report)
    assert not report.check("A_subring").passed


def test_overlapping_subrings_rejected():
    R = group_ring(cyclic_group(6))
    report = check_exact_factorization(R, (0, 2, 4), (0, 2, 4))
    assert isinstance(report, Report)
    assert not report.passed
    assert not report.check("bijection").passed


def test_bicrossed_output_roundtrips():
    m = ty_vec_matched_pair()
    B = ring_bicrossed(m)
    nc = m.C.rank
    a_set = [i for i in range(B.rank) if i % nc == m.C.unit_index]
    c_set = [i for i in range(B.rank) if i // nc == m.A.unit_index]
    f = check_exact_factorization(B, a_set, c_set)
    assert not isinstance(f, Report)
    assert certify_theorem_iso(f).passed
    rmp = canonical_matched_pair(f)
    assert rmp.A.rank == m.A.rank and rmp.C.rank == m.C.rank
    assert universal_grading(ring_bicrossed(rmp)).group.order == 4


def test_roundtrip_group_isomorphism():
    R, a, c = s3_split()
    f = check_exact_factorization(R, a, c)
    rmp = canonical_matched_pair(f)
    from fusionbench import group_bicrossed
    assert find_isomorphism(group_bicrossed(rmp.gmp),
                            symmetric_group_3()) is not None
