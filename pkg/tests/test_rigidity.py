"""Duals of YD modules, transposes and the canonical isomorphisms between iterated duals."""
import pytest

from qhopf.categories.canonical import (KINDS, canonical_gamma, canonical_phi_star, canonical_sigma,
                                        canonical_Theta, canonical_theta, canonical_theta_prime, check_naturality,
                                        check_qt_gamma, check_qt_sigma, sigma_identities)
from qhopf.categories.hmod import regular_module
from qhopf.categories.yd import adjoint_yd_module, random_yd_morphism, trivial_yd, verify_yd
from qhopf.categories.yd_rigid import transpose, yd_dual, yd_duals
from qhopf.utils.errors import FlavorMismatch
from qhopf.utils.sampling import random_module, sample_yd_modules


@pytest.fixture
def h2_modules(h2, rng):
    H, _ = h2
    return [adjoint_yd_module(H)] + sample_yd_modules(H, "LL", rng, 2)


def test_duals_are_yetter_drinfeld(any_builtin):
    H, _ = any_builtin
    M = adjoint_yd_module(H)
    left, right = yd_duals(M)
    for data in (left, right):
        assert data.report.passed
        assert verify_yd(data.dual).passed
        assert data.dual.dim == M.dim
    assert left.side == "left_dual" and right.side == "right_dual"
    assert any(t.startswith("YD ev") for t in left.report.tags())


def test_dual_of_trivial_module(h2):
    H, _ = h2
    k = trivial_yd(H)
    data = yd_dual(k)
    assert H.field.equal(data.dual.coaction, k.coaction)


def test_duals_need_ll_modules(h2):
    H, _ = h2
    with pytest.raises(FlavorMismatch):
        yd_dual(trivial_yd(H, "LR"))
    with pytest.raises(ValueError):
        yd_dual(trivial_yd(H), "middle_dual")


@pytest.mark.parametrize("side", ["left_dual", "right_dual"])
def test_transpose_is_plain_transpose(h2_modules, side, rng):
    M, N = h2_modules[0], h2_modules[1]
    nu = random_yd_morphism(M, N, rng)
    t = transpose(nu, side)
    assert t.map.equals(nu.map.transpose())
    assert t.src.dim == N.dim and t.dst.dim == M.dim


def test_theta_and_theta_prime(h2_modules):
    for M in h2_modules:
        theta = canonical_theta(M)
        assert theta.report.passed
        assert theta.map.map.is_identity()
        prime = canonical_theta_prime(M)
        assert prime.report.passed
        assert prime.kind == "theta_prime"


def test_Theta_closed_forms(h2_modules):
    for M in h2_modules:
        iso = canonical_Theta(M)
        assert iso.report.get("(rly)").passed
        assert iso.report.get("(irly)").passed
        assert (iso.inverse.map @ iso.map.map).is_identity()


def test_gamma_closed_forms(h2_modules):
    M = h2_modules[0]
    gamma_r, gamma_l = canonical_gamma(M)
    assert {"(gr)", "(igr)"} <= set(gamma_r.report.tags())
    assert {"(gl)", "(igl)"} <= set(gamma_l.report.tags())
    assert gamma_r.map.dst is M and gamma_l.map.dst is M


def test_sigma_and_phi_star(h2_modules):
    M, N = h2_modules[0], h2_modules[1]
    phi = canonical_phi_star(M, N)
    assert phi.report.get("(phir)").passed and phi.report.get("(sat)").passed
    sigma_star, star_sigma = canonical_sigma(M, N)
    assert sigma_star.report.get("(ydsr)").passed
    assert star_sigma.report.get("(ydsl)").passed
    assert {iso.kind for iso in (phi, sigma_star, star_sigma)} <= set(KINDS)


def test_sigma_helper_identities(any_builtin):
    H, _ = any_builtin
    report = sigma_identities(H)
    assert report.passed, [r.line() for r in report.failures()]
    assert report.tags() == ["(ufo)", "(ufox)", "(uf)"]


def test_naturality(h2_modules, rng):
    M, N = h2_modules[0], h2_modules[1]
    f = random_yd_morphism(M, M, rng)
    g = random_yd_morphism(N, N, rng)
    report = check_naturality(f, g)
    assert report.passed, [r.line() for r in report.failures()]


def test_quasitriangular_gamma_is_u(qt_builtin, rng):
    H, qt = qt_builtin
    for M in (regular_module(H), random_module(H, rng, max_dim=3)):
        report = check_qt_gamma(M, qt)
        assert report.passed, [r.line() for r in report.failures()]


def test_quasitriangular_sigma(sweedler, h2_ri, rng):
    for H, qt in (sweedler, h2_ri):
        M, N = random_module(H, rng, max_dim=2), random_module(H, rng, max_dim=3)
        report = check_qt_sigma(M, N, qt)
        assert report.passed, [r.line() for r in report.failures()]
