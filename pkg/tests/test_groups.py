"""Finite group tables, constructions, and isomorphism search."""
from __future__ import annotations

import pytest

from fusionbench import (InputError, cyclic_group, direct_product,
                         find_isomorphism, parse_group_name,
                         symmetric_group_3)

from conftest import GROUP_BUILDERS, make_group


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_group_tables_validate(name):
    G = make_group(name)
    assert G.validate().passed


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8])
def test_cyclic_orders(n):
    G = cyclic_group(n)
    assert G.order == n
    g = 1 % n
    assert G.element_order(g) == n if n > 1 else 1


def test_s3_is_nonabelian():
    G = symmetric_group_3()
    assert G.order == 6
    assert not G.is_abelian()


def test_direct_product_structure():
    G = direct_product(cyclic_group(2), cyclic_group(3))
    assert G.order == 6
    assert G.is_abelian()
    assert find_isomorphism(G, cyclic_group(6)) is not None


@pytest.mark.parametrize("name, order, abelian", [
    ("C2", 2, True), ("C5", 5, True), ("C2xC3", 6, True), ("S3", 6, False),
])
def test_parse_group_name(name, order, abelian):
    G = parse_group_name(name)
    assert G.order == order
    assert G.is_abelian() == abelian


def test_parse_group_name_rejects_garbage():
    with pytest.raises(InputError):
        parse_group_name("D4")


def test_no_isomorphism_between_c4_and_c2xc2():
    C4 = cyclic_group(4)
    V = direct_product(cyclic_group(2), cyclic_group(2))
    assert find_isomorphism(C4, V) is None


def test_isomorphism_is_a_homomorphism():
    G = symmetric_group_3()
    phi = find_isomorphism(G, G)
    assert phi is not None
    for a in range(G.order):
        for b in range(G.order):
            assert phi[G.mul(a, b)] == G.mul(phi[a], phi[b])
