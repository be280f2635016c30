"""Fusion ring construction, validation, arithmetic, and FP dimensions."""
from __future__ import annotations

import math

import pytest

from fusionbench import (FusionRing, InputError, OverflowLimitError,
                         RingElement, dual_element, fpdim_basis, fpdim_ring,
                         multiply, subring_generated, validate_fusion_ring)
from fusionbench.category import fibonacci_ring, group_ring, ty_ring

from conftest import GROUP_BUILDERS, make_group

GOLDEN = (1 + math.sqrt(5)) / 2


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_group_ring_validates(name):
    assert validate_fusion_ring(group_ring(make_group(name))).passed


@pytest.mark.parametrize("name", ["C2", "C3", "C2xC2"])
def test_ty_ring_validates(name):
    assert validate_fusion_ring(ty_ring(make_group(name))).passed


def test_fibonacci_validates(fib):
    assert validate_fusion_ring(fib).passed
    assert not fib.is_multiplicity_free() or fib.n(1, 1, 1) == 1


def test_ty_products(ty_c2):
    x = ty_c2.index_of("X")
    g = ty_c2.index_of("g")
    assert ty_c2.product(x, x) == {0: 1, g: 1}
    assert ty_c2.product(g, x) == {x: 1}
    assert ty_c2.product(g, g) == {0: 1}


def test_ring_element_arithmetic(ty_c2):
    x = RingElement.basis(ty_c2.index_of("X"))
    sq = multiply(ty_c2, x, x)
    assert sq == RingElement({0: 1, 1: 1})
    assert dual_element(ty_c2, x) == x


def test_subring_generated(ty_c2):
    g = ty_c2.index_of("g")
    x = ty_c2.index_of("X")
    assert subring_generated(ty_c2, [g]).indices == (0, g)
    assert subring_generated(ty_c2, [x]).indices == tuple(range(ty_c2.rank))


def test_subring_as_ring_roundtrip(zc6):
    sub = subring_generated(zc6, [2])  # the C3 part of C6
    ring, to_parent = sub.as_ring()
    assert ring.rank == 3
    assert validate_fusion_ring(ring).passed
    assert sorted(to_parent.values()) == [0, 2, 4]


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_group_ring_fpdims(name):
    R = group_ring(make_group(name))
    assert all(abs(fpdim_basis(R, i) - 1) < 1e-9 for i in range(R.rank))
    assert abs(fpdim_ring(R) - R.rank) < 1e-9


@pytest.mark.parametrize("name", ["C2", "C3", "C2xC2"])
def test_ty_ring_fpdims(name):
    G = make_group(name)
    R = ty_ring(G)
    x = R.index_of("X")
    assert abs(fpdim_basis(R, x) - math.sqrt(G.order)) < 1e-9
    assert abs(fpdim_ring(R) - 2 * G.order) < 1e-9


def test_fibonacci_fpdims(fib):
    assert abs(fpdim_basis(fib, 1) - GOLDEN) < 1e-9
    assert abs(fpdim_ring(fib) - (1 + GOLDEN ** 2)) < 1e-9


@pytest.mark.parametrize("kwargs, message", [
    (dict(basis_labels=(), unit_index=0, dual=(), N={}), "non-empty"),
    (dict(basis_labels=("e", "e"), unit_index=0, dual=(0, 1), N={}),
     "distinct"),
    (dict(basis_labels=("e",), unit_index=3, dual=(0,), N={}), "unit"),
    (dict(basis_labels=("e", "g"), unit_index=0, dual=(0, 0), N={}),
     "permutation"),
    (dict(basis_labels=("e",), unit_index=0, dual=(0,), N={(0, 0, 5): 1}),
     "range"),
    (dict(basis_labels=("e",), unit_index=0, dual=(0,), N={(0, 0, 0): -1}),
     "nonnegative"),
])
def test_bad_construction_rejected(kwargs, message):
    with pytest.raises(InputError, match=message):
        FusionRing(**kwargs)


def test_structure_constant_overflow_rejected():
    with pytest.raises(OverflowLimitError):
        FusionRing(("e", "a"), 0, (0, 1),
                   {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1,
                    (1, 1, 0): 1, (1, 1, 1): 2 ** 64})


def test_validator_witnesses_name_the_first_violation(ty_c2):
    N = dict(ty_c2.N)
    N[(2, 2, 0)] = 2  # duality now fails at (2,2)
    report = validate_fusion_ring(FusionRing(ty_c2.basis_labels, 0,
                                             ty_c2.dual, N))
    assert not report.passed
    assert report.check("duality").witness == "(i,j)=(2,2)"
