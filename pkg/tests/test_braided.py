"""Hopf algebras in the Yetter-Drinfeld category: H_0, its duals, Theta_{H_0}, underline-H* and mu."""
from dataclasses import replace

import pytest

from qhopf.braided.h0 import (build_H0, check_h0_algebra_in_yd, h0_duals, h0_product, h0_quantum_commutativity,
                              leg_action_matrix, theta_H0, theta_h0_failing_pair, theta_h0_is_morphism)
from qhopf.braided.hopf import (VARIANTS, braided_dual, braided_variant, require_braided_hopf,
                                verify_braided_hopf)
from qhopf.braided.hstar import build_underline_Hstar, check_dual_chain, hstar_identities, mu_iso, mu_map
from qhopf.catalog.builtins import builtin
from qhopf.categories.yd import trivial_yd
from qhopf.utils.errors import FlavorMismatch, NotQT, NotTriangular

from conftest import TRIANGULAR


def test_h0_is_an_algebra_in_yd(any_builtin):
    H, _ = any_builtin
    report = check_h0_algebra_in_yd(H)
    assert report.passed, [r.line() for r in report.failures()]
    assert "(qca1) with (s2)" in report.tags()


def test_h0_is_a_braided_hopf_algebra(qt_builtin):
    H, qt = qt_builtin
    H0 = build_H0(H, qt)
    report = verify_braided_hopf(H0)
    assert report.passed, [r.line() for r in report.failures()]
    assert {"(mal) associativity", "(mc1)", "(by)"} <= set(report.tags())
    assert require_braided_hopf(H0) is H0


def test_h0_product_is_the_product_of_an_ordinary_hopf_algebra(sweedler):
    H, _ = sweedler
    n = H.dim
    assert H.field.equal(h0_product(H).matrix, H.mult.reshape(n * n, n).T)


def test_h0_of_kz2_is_quantum_commutative(kz2):
    H, _ = kz2
    assert h0_quantum_commutativity(H).passed


def test_h0_needs_an_r_matrix(h2):
    H, qt = h2
    with pytest.raises(NotQT):
        build_H0(H, qt)
    other, other_qt = builtin("kZ2")
    with pytest.raises(NotQT):
        build_H0(H, other_qt)


@pytest.mark.parametrize("which", VARIANTS)
def test_braided_variants(sweedler, which):
    H, qt = sweedler
    V = braided_variant(build_H0(H, qt), which)
    assert verify_braided_hopf(V).passed
    assert V.mirror is (which != "opcop")


def test_variant_names_are_checked(kz2):
    H, qt = kz2
    with pytest.raises(ValueError):
        braided_variant(build_H0(H, qt), "co")


def test_carrier_must_be_ll(kz2):
    H, qt = kz2
    H0 = build_H0(H, qt)
    with pytest.raises(FlavorMismatch):
        replace(H0, carrier=trivial_yd(H, "LR"))


def test_generic_duals(sweedler):
    H, qt = sweedler
    H0 = build_H0(H, qt)
    for side in ("left_dual", "right_dual"):
        D = braided_dual(H0, side)
        assert verify_braided_hopf(D).passed
    with pytest.raises(FlavorMismatch):
        braided_dual(braided_variant(H0, "op"))


def test_explicit_duals_match_generic(qt_builtin):
    H, qt = qt_builtin
    left, right = h0_duals(H, qt)
    assert left.name.endswith("*") and right.name.startswith("*")
    for D in (left, right):
        assert verify_braided_hopf(D).passed


def test_theta_h0(qt_builtin):
    H, qt = qt_builtin
    iso = theta_H0(H, qt)
    assert iso.report.passed
    assert "Theta_H0 = u^-1 >-" in iso.report.tags()
    if qt.triangular:
        assert "Theta_H0 multiplicative" in iso.report.tags()
    else:
        assert "Theta_H0 multiplicative up to R^-1 R^-1_21" in iso.report.tags()


@pytest.mark.parametrize("name", TRIANGULAR)
def test_theta_h0_is_a_morphism_for_triangular_r(name):
    H, qt = builtin(name)
    assert theta_h0_is_morphism(H, qt)
    assert theta_h0_failing_pair(H, qt) is None


def test_theta_h0_on_the_double_of_kz2(dz2):
    # D(Z2) is commutative and cocommutative, so H acts on H_0 and its duals through epsilon;
    # the R-twists are then the identity and the plain identities are the twisted ones
    H, qt = dz2
    assert not qt.triangular
    left, right = h0_duals(H, qt)
    n = H.dim
    twist_in = leg_action_matrix(left.carrier.module, H.mul(qt.R_inv, qt.R_inv.flip()))
    twist_out = leg_action_matrix(right.carrier.module, H.mul(qt.R.flip(), qt.R))
    assert H.field.equal(twist_in, H.field.eye(n * n))
    assert H.field.equal(twist_out, H.field.eye(n * n))
    assert theta_h0_failing_pair(H, qt) is None
    assert theta_h0_is_morphism(H, qt)
    assert "Theta_H0 multiplicative up to R^-1 R^-1_21" in theta_H0(H, qt).report.tags()


# ----------------------------------------------------------------------
# underline-H* and mu
# ----------------------------------------------------------------------
def test_hstar_bimodule_identities(any_builtin):
    H, _ = any_builtin
    report = hstar_identities(H)
    assert report.passed, [r.line() for r in report.failures()]
    assert {"(mbia1)", "(mbia2) ->", "(mbia2) <-"} <= set(report.tags())


def test_underline_hstar(qt_builtin):
    H, qt = qt_builtin
    B = build_underline_Hstar(H, qt)
    report = verify_braided_hopf(B)
    assert report.passed, [r.line() for r in report.failures()]
    assert verify_braided_hopf(braided_variant(B, "cop")).passed


def test_underline_hstar_needs_r(h2):
    H, qt = h2
    with pytest.raises(NotQT):
        build_underline_Hstar(H, qt)


def test_mu_is_an_isomorphism(sweedler):
    H, qt = sweedler
    mu, mu_inv = mu_map(H)
    assert (mu_inv @ mu).is_identity()
    iso = mu_iso(H, qt)
    assert iso.map.equals(mu)
    assert iso.src.dim == H.dim


def test_mu_needs_triangular(dz2, h2_ri):
    for H, qt in (dz2, h2_ri):
        with pytest.raises(NotTriangular):
            mu_iso(H, qt)
        with pytest.raises(NotTriangular):
            check_dual_chain(H, qt)


@pytest.mark.parametrize("name", TRIANGULAR)
def test_dual_chain(name):
    H, qt = builtin(name)
    report = check_dual_chain(H, qt)
    assert report.passed, [r.line() for r in report.failures()]
    assert "mu Theta_H0 multiplicative" in report.tags()
