"""Associator data: constructors, coherence checks, and parameter gates."""
from __future__ import annotations

import dataclasses
import math

import pytest

from fusionbench import (ParameterError, TYPointedParams, TYTYParams,
                         build_pointed, build_TY, build_TY_pointed_bicrossed,
                         build_TY_TY_bicrossed, check_pentagon, check_triangle,
                         cyclic_group, direct_product, standard_bicharacter,
                         trivial_cocycle, validate_bicharacter,
                         validate_cocycle)
from fusionbench.category import (Bicharacter, c2_nontrivial_cocycle,
                                  gauge_transform, group_ring,
                                  non_identity_blocks, perturb_block_entry)

SQ2 = 1 / math.sqrt(2)


@pytest.mark.parametrize("name, builder", [
    ("C2", lambda: cyclic_group(2)),
    ("C3", lambda: cyclic_group(3)),
    ("C4", lambda: cyclic_group(4)),
    ("C2xC2", lambda: direct_product(cyclic_group(2), cyclic_group(2))),
])
def test_standard_bicharacter_validates(name, builder):
    G = builder()
    assert validate_bicharacter(standard_bicharacter(G)).passed


def test_degenerate_bicharacter_rejected():
    G = cyclic_group(2)
    b = Bicharacter(G, ((1, 1), (1, 1)))
    report = validate_bicharacter(b)
    assert not report.check("non_degenerate").passed


def test_cocycle_validators():
    assert validate_cocycle(trivial_cocycle(cyclic_group(3))).passed
    w = c2_nontrivial_cocycle()
    assert validate_cocycle(w).passed
    assert w(1, 1, 1) == -1


def test_pointed_trivial_blocks_are_one():
    cat = build_pointed(cyclic_group(3), trivial_cocycle(cyclic_group(3)))
    for key, block in cat.assoc.items():
        assert block.mat.shape == (1, 1)
        assert block.mat[0, 0] == 1


def test_pointed_nontrivial_block_value():
    cat = build_pointed(cyclic_group(2), c2_nontrivial_cocycle())
    assert cat.fsym(1, 1, 1, 1, 0, 0) == -1


def test_ty_block_values():
    G = cyclic_group(2)
    chi = standard_bicharacter(G)
    cat = build_TY(G, chi, SQ2)
    x = 2
    # alpha_{g,X,g'} = chi(g,g') on the X component.
    assert cat.fsym(1, x, 1, x, x, x) == chi(1, 1)
    # alpha_{X,X,X} has entries tau / chi(e,f).
    assert abs(cat.fsym(x, x, x, x, 1, 1) - SQ2 / chi(1, 1)) < 1e-12
    assert abs(cat.fsym(x, x, x, x, 0, 1) - SQ2) < 1e-12


def test_ty_tau_gate():
    G = cyclic_group(2)
    with pytest.raises(ParameterError) as err:
        build_TY(G, standard_bicharacter(G), 0.5)
    assert "tau_normalization" in str(err.value)


@pytest.mark.parametrize("builder", [
    lambda: build_pointed(cyclic_group(2), trivial_cocycle(cyclic_group(2))),
    lambda: build_pointed(cyclic_group(2), c2_nontrivial_cocycle()),
    lambda: build_TY(cyclic_group(2), standard_bicharacter(cyclic_group(2)),
                     SQ2),
    lambda: build_TY(cyclic_group(2), standard_bicharacter(cyclic_group(2)),
                     -SQ2),
])
def test_pentagon_and_triangle_pass(builder):
    cat = builder()
    assert check_pentagon(cat, 1e-9).passed
    assert check_triangle(cat).passed


def test_pentagon_sensitivity():
    cat = build_TY(cyclic_group(2), standard_bicharacter(cyclic_group(2)), SQ2)
    key = non_identity_blocks(cat)[0]
    block = cat.assoc[key]
    bad = perturb_block_entry(cat, key, block.rows[0], block.cols[0])
    report = check_pentagon(bad, 1e-9)
    assert not report.passed
    assert report.max_residual >= 0.1


def test_triangle_sensitivity():
    cat = build_TY(cyclic_group(2), standard_bicharacter(cyclic_group(2)), SQ2)
    x = 2
    bad = perturb_block_entry(cat, (x, 0, x, 0), x, x)
    assert not check_triangle(bad).passed


def test_gauge_transform_preserves_pentagon():
    cat = build_TY(cyclic_group(2), standard_bicharacter(cyclic_group(2)), SQ2)

    def g(a, b):
        return -1 if (a, b) == (1, 2) or (a, b) == (2, 1) else 1

    assert check_pentagon(gauge_transform(cat, g), 1e-9).passed


def trivial_ty_pointed():
    G = cyclic_group(2)
    return TYPointedParams.trivial(G, standard_bicharacter(G), SQ2,
                                   cyclic_group(2))


def test_ty_pointed_trivial_instance_coherent():
    cat = build_TY_pointed_bicrossed(trivial_ty_pointed())
    assert cat.ring.rank == 6
    assert check_pentagon(cat, 1e-9).passed
    assert check_triangle(cat).passed


def test_ty_pointed_nontrivial_scalars_coherent():
    one = 1 + 0j
    p = dataclasses.replace(
        trivial_ty_pointed(),
        lambda_X=((one, one), (one, -one)),
        mu=(one, -one),
        beta=((one, one), (one, -one)),
        lam=(((one, one), (one, one)), ((one, one), (one, -one))),
    )
    assert p.validate().passed
    cat = build_TY_pointed_bicrossed(p)
    assert check_pentagon(cat, 1e-9).passed


def test_ty_pointed_nontrivial_phi_coherent():
    """K = C3 with phi = inversion; mu, f, beta, lambda constant."""
    G = cyclic_group(2)
    K = cyclic_group(3)
    p = dataclasses.replace(
        TYPointedParams.trivial(G, standard_bicharacter(G), SQ2, K),
        phi=(0, 2, 1))
    assert p.validate().passed
    cat = build_TY_pointed_bicrossed(p)
    assert cat.ring.rank == 9
    assert check_pentagon(cat, 1e-9).passed


def test_ty_pointed_rejects_chi_breaking_action():
    V = direct_product(cyclic_group(2), cyclic_group(2))
    p = dataclasses.replace(
        TYPointedParams.trivial(V, standard_bicharacter(V), 0.5,
                                cyclic_group(2)),
        phi_action=((0, 1, 2, 3), (0, 2, 1, 3)))
    report = p.validate()
    assert not report.check("chi_invariance").passed
    with pytest.raises(ParameterError) as err:
        build_TY_pointed_bicrossed(p)
    assert "chi_invariance" in str(err.value)


def test_ty_pointed_rejects_bad_f():
    p = dataclasses.replace(trivial_ty_pointed(), f=(1 + 0j, 1j))
    report = p.validate()
    assert not report.check("f_condition").passed
    with pytest.raises(ParameterError) as err:
        build_TY_pointed_bicrossed(p)
    assert "f_condition" in str(err.value)


def test_ty_pointed_rejects_bad_beta():
    one = 1 + 0j
    p = dataclasses.replace(trivial_ty_pointed(),
                            beta=((one, -one), (one, one)))
    report = p.validate()
    assert not report.check("beta_condition").passed
    with pytest.raises(ParameterError) as err:
        build_TY_pointed_bicrossed(p)
    assert "beta_condition" in str(err.value)


def test_ty_pointed_rejects_bad_tau():
    p = dataclasses.replace(trivial_ty_pointed(), tau=1.0)
    report = p.validate()
    assert not report.check("tau_normalization").passed
    with pytest.raises(ParameterError) as err:
        build_TY_pointed_bicrossed(p)
    assert "tau_normalization" in str(err.value)


def ty_ty_params(theta_l=1, theta_r=1, varphi=(0, 1), psi=(0, 1)):
    C2 = cyclic_group(2)
    chi = standard_bicharacter(C2)
    return TYTYParams(C2, chi, SQ2, cyclic_group(2),
                      standard_bicharacter(cyclic_group(2)), SQ2,
                      varphi, psi, theta_l, theta_r)


@pytest.mark.parametrize("tl, tr", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
def test_ty_ty_all_theta_instances_coherent(tl, tr):
    cat = build_TY_TY_bicrossed(ty_ty_params(tl, tr))
    assert cat.ring.rank == 9
    assert check_pentagon(cat, 1e-9).passed
    assert check_triangle(cat).passed


def test_ty_ty_rejects_bad_upsilon():
    p = dataclasses.replace(ty_ty_params(), upsilon=1.0)
    with pytest.raises(ParameterError) as err:
        build_TY_TY_bicrossed(p)
    assert "upsilon_normalization" in str(err.value)


def test_ty_ty_rejects_bad_theta():
    p = dataclasses.replace(ty_ty_params(), theta_l=2)
    report = p.validate()
    assert not report.check("theta_values").passed
