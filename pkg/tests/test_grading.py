"""Universal gradings, adjoint/pointed subrings, and nilpotency."""
from __future__ import annotations

import pytest

from fusionbench import (adjoint_subring, factor_through_universal,
                         find_isomorphism, is_nilpotent, pointed_subring,
                         universal_grading, verify_grading)
from fusionbench.category import fibonacci_ring, group_ring, ty_ring
from fusionbench.groups import cyclic_group

from conftest import GROUP_BUILDERS, make_group


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_group_ring_universal_grading_recovers_group(name):
    G = make_group(name)
    grading = universal_grading(group_ring(G))
    assert find_isomorphism(grading.group, G) is not None
    # ZG is graded by itself with singleton components.
    assert sorted(grading.degree) == list(range(G.order))


@pytest.mark.parametrize("name", ["C2", "C3", "C2xC2"])
def test_ty_universal_grading_is_c2(name):
    G = make_group(name)
    R = ty_ring(G)
    grading = universal_grading(R)
    assert grading.group.order == 2
    x = R.index_of("X")
    assert grading.degree[x] != grading.degree[R.unit_index]
    assert all(grading.degree[i] == grading.degree[R.unit_index]
               for i in range(R.rank) if i != x)


@pytest.mark.parametrize("name", ["C2", "C3", "C2xC2"])
def test_ty_adjoint_and_pointed(name):
    G = make_group(name)
    R = ty_ring(G)
    gamma = tuple(range(G.order))
    assert adjoint_subring(R).indices == gamma
    assert pointed_subring(R).indices == gamma


def test_universal_grading_passes_verify():
    R = ty_ring(cyclic_group(3))
    g = universal_grading(R)
    assert verify_grading(R, g.group, g.degree).passed


def test_unfaithful_grading_detected():
    R = group_ring(cyclic_group(2))
    report = verify_grading(R, cyclic_group(2), (0, 0))
    assert not report.passed
    assert not report.check("faithfulness").passed


def test_factor_through_universal():
    # Grade ZC4 by C2 via the quotient map; it must factor through U = C4.
    R = group_ring(cyclic_group(4))
    pi = factor_through_universal(R, cyclic_group(2), (0, 1, 0, 1))
    assert pi is not None
    assert sorted(set(pi)) == [0, 1]
    # A degree map that is not a homomorphism image does not factor.
    assert factor_through_universal(R, cyclic_group(2), (0, 1, 1, 0)) is None


@pytest.mark.parametrize("builder, nilpotent", [
    (lambda: group_ring(cyclic_group(6)), True),
    (lambda: ty_ring(cyclic_group(2)), True),
    (lambda: ty_ring(make_group("C2xC2")), True),
    (fibonacci_ring, False),
])
def test_nilpotency(builder, nilpotent):
    flag, depth = is_nilpotent(builder())
    assert flag is nilpotent
    if nilpotent:
        assert depth >= 1


def test_ty_nilpotency_depth():
    flag, depth = is_nilpotent(ty_ring(cyclic_group(2)))
    assert flag and depth == 2


def test_fibonacci_pointed_is_trivial():
    fib = fibonacci_ring()
    assert pointed_subring(fib).indices == (fib.unit_index,)
    assert adjoint_subring(fib).indices == (0, 1)
