"""Yetter-Drinfeld modules of the four flavors, their braidings and the flavor functors."""
import numpy as np
import pytest
from loguru import logger

from qhopf.algebra.quasi_hopf import gauge_twist, random_gauge
from qhopf.categories.functors import (apply_to_morphism, check_f_braiding, check_round_trips, functor_F,
                                       functor_F_inv, functor_G_inv, functor_K, functor_K_inv)
from qhopf.categories.hmod import regular_module, trivial_module
from qhopf.categories.yd import (AXIOM_TAGS, FLAVORS, YDModule, adjoint_yd_module, check_y3p,
                                 check_yd_hexagons, check_yd_naturality, check_yd_pentagon,
                                 embedded_braiding_matches, qt_embed, random_yd_morphism, trivial_yd,
                                 twisted_coaction, unit_coaction, verify_yd, verify_yd_morphism, yd_associator,
                                 yd_braiding, yd_cyclic_submodule, yd_direct_sum, yd_equal, yd_hom_space,
                                 yd_tensor)
from qhopf.utils.errors import DimensionMismatch, FlavorMismatch
from qhopf.utils.sampling import _ll_pieces, random_invertible, random_module, sample_yd_modules


def test_adjoint_module_is_yetter_drinfeld(any_builtin):
    H, _ = any_builtin
    M = adjoint_yd_module(H)
    report = verify_yd(M)
    assert report.passed, [r.line() for r in report.failures()]
    assert check_y3p(M).passed


@pytest.mark.parametrize("flavor", FLAVORS)
def test_trivial_module_in_every_flavor(h2, flavor):
    H, _ = h2
    M = trivial_yd(H, flavor)
    report = verify_yd(M)
    assert report.passed
    assert set(AXIOM_TAGS[flavor]) <= set(report.tags())


@pytest.mark.parametrize("flavor", FLAVORS)
@pytest.mark.parametrize("name", ["H2", "sweedler4_Rtri"])
def test_sampled_modules(flavor, name, rng):
    from qhopf.catalog.builtins import builtin

    H, qt = builtin(name)
    for M in sample_yd_modules(H, flavor, rng, 3, qt):
        assert M.flavor == flavor
        assert verify_yd(M).passed


def test_flavor_must_match_action_side(kz2):
    H, _ = kz2
    reg = regular_module(H, "left")
    with pytest.raises(FlavorMismatch):
        YDModule("RR", reg, unit_coaction(H, 2))
    with pytest.raises(ValueError):
        YDModule("XY", reg, unit_coaction(H, 2))
    with pytest.raises(DimensionMismatch):
        YDModule("LL", reg, unit_coaction(H, 3))


def test_trivial_coaction_on_adjoint_fails(sweedler):
    H, _ = sweedler
    ad = adjoint_yd_module(H)
    fake = YDModule("LL", ad.module, unit_coaction(H, H.dim))
    report = verify_yd(fake)
    assert not report.passed
    assert "(y3)" in [r.tag for r in report.failures()]


def test_yd_hom_space(h2):
    H, _ = h2
    k = trivial_yd(H)
    assert len(yd_hom_space(k, k)) == 1
    ad = adjoint_yd_module(H)
    both = yd_direct_sum(k, ad)
    assert len(yd_hom_space(both, both)) >= 2


def test_random_yd_morphisms(sweedler, rng):
    H, qt = sweedler
    M, N = sample_yd_modules(H, "LL", rng, 2, qt)
    f = random_yd_morphism(M, N, rng)
    assert verify_yd_morphism(f).passed


# ----------------------------------------------------------------------
# tensor products and braidings
# ----------------------------------------------------------------------
@pytest.mark.parametrize("flavor", FLAVORS)
def test_tensor_product_stays_in_flavor(h2, flavor, rng):
    H, _ = h2
    M, N = sample_yd_modules(H, flavor, rng, 2)
    T = yd_tensor(M, N)
    assert T.flavor == flavor
    assert verify_yd(T).passed


def test_tensor_rejects_mixed_flavors(h2):
    H, _ = h2
    with pytest.raises(FlavorMismatch):
        yd_tensor(trivial_yd(H, "LL"), trivial_yd(H, "LR"))


@pytest.mark.parametrize("flavor", FLAVORS)
def test_associator_is_a_yd_morphism(h2, flavor, rng):
    H, _ = h2
    U, V, W = sample_yd_modules(H, flavor, rng, 3)
    a = yd_associator(U, V, W)
    assert a.dst.flavor == flavor
    assert verify_yd_morphism(a).passed


@pytest.mark.parametrize("flavor", FLAVORS)
def test_braiding_and_closed_form_inverse(h2, flavor, rng):
    H, _ = h2
    M, N = sample_yd_modules(H, flavor, rng, 2)
    c, c_inv = yd_braiding(M, N)
    assert (c_inv.map @ c.map).is_identity()
    assert verify_yd_morphism(c).passed
    assert verify_yd_morphism(c_inv).passed


@pytest.mark.parametrize("flavor", FLAVORS)
def test_hexagons_and_pentagon(h2, flavor, rng):
    H, _ = h2
    U, V, W, X = sample_yd_modules(H, flavor, rng, 4)
    assert check_yd_hexagons(U, V, W).passed
    assert check_yd_pentagon(U, V, W, X).passed


def test_braiding_naturality(sweedler, rng):
    H, qt = sweedler
    M, N = sample_yd_modules(H, "LL", rng, 2, qt)
    f, g = random_yd_morphism(M, M, rng), random_yd_morphism(N, N, rng)
    assert check_yd_naturality(f, g).passed


def test_embedded_modules_use_the_r_matrix_braiding(qt_builtin, rng):
    H, qt = qt_builtin
    M, N = random_module(H, rng, max_dim=3), random_module(H, rng, max_dim=3)
    assert verify_yd(qt_embed(M, qt)).passed
    assert embedded_braiding_matches(M, N, qt)


def test_qt_embed_needs_left_module(kz2):
    H, qt = kz2
    with pytest.raises(FlavorMismatch):
        qt_embed(trivial_module(H, "right"), qt)


# ----------------------------------------------------------------------
# functors between flavors
# ----------------------------------------------------------------------
def test_round_trips(any_builtin, rng):
    H, qt = any_builtin
    for M in sample_yd_modules(H, "LL", rng, 2, qt):
        report = check_round_trips(M)
        assert report.passed, [r.line() for r in report.failures()]


def test_round_trips_walk_through_every_flavor(h2):
    H, _ = h2
    report = check_round_trips(adjoint_yd_module(H))
    tags = [r.tag for r in report.results]
    assert "K F: LR -> RR" in tags
    assert "chain LL -> LR -> RR -> RL and back = id" in tags
    assert report.passed


def test_functor_images_have_the_right_flavor(h2):
    H, _ = h2
    M = adjoint_yd_module(H)
    lr = functor_F_inv(M)
    assert lr.flavor == "LR"
    assert functor_K(M).flavor == "RR"
    assert functor_G_inv(lr).flavor == "RL"
    assert yd_equal(functor_F(lr), M)
    assert yd_equal(functor_K_inv(functor_K(M)), M)


def test_functors_check_their_input(h2):
    H, _ = h2
    with pytest.raises(FlavorMismatch):
        functor_F(trivial_yd(H, "LL"))
    with pytest.raises(FlavorMismatch):
        functor_K(trivial_yd(H, "RR"))


def test_f_carries_braidings(sweedler, rng):
    H, qt = sweedler
    M, N = sample_yd_modules(H, "LL", rng, 2, qt)
    assert check_f_braiding(functor_F_inv(M), functor_F_inv(N)).passed


def test_functors_act_on_morphisms(h2, rng):
    H, _ = h2
    M, N = sample_yd_modules(H, "LL", rng, 2)
    f = random_yd_morphism(M, N, rng)
    image = apply_to_morphism(functor_K, f)
    assert image.src.flavor == "RR"
    assert verify_yd_morphism(image).passed


def test_twisted_coaction_is_yetter_drinfeld(sweedler):
    H, qt = sweedler
    rng = np.random.default_rng(3)
    gauge = random_gauge(H, rng)
    HF = gauge_twist(H, gauge)
    for M in sample_yd_modules(H, "LL", rng, 2, qt):
        twisted = twisted_coaction(M, gauge, HF)
        assert twisted.H is HF
        assert verify_yd(twisted).passed
    with pytest.raises(FlavorMismatch):
        twisted_coaction(trivial_yd(H, "LR"), gauge, HF)


# ----------------------------------------------------------------------
# sampling
# ----------------------------------------------------------------------
def test_cyclic_yd_submodule_is_yetter_drinfeld(h2, rng):
    H, _ = h2
    ad = adjoint_yd_module(H)
    square = yd_tensor(ad, ad)
    for v in [H.field.eye(square.dim)[:, 0], H.field.random(rng, (square.dim,))]:
        if H.field.is_zero(v):
            continue
        sub = yd_cyclic_submodule(square, v)
        assert 1 <= sub.dim <= square.dim
        report = verify_yd(sub)
        assert report.passed, [r.line() for r in report.failures()]
    with pytest.raises(ValueError):
        yd_cyclic_submodule(ad, H.field.zeros((ad.dim,)))


def test_ll_pieces_go_beyond_trivial_and_adjoint(h2, rng):
    H, _ = h2
    pieces = _ll_pieces(H, rng, 3)
    names = [P.name for P in pieces]
    ad = adjoint_yd_module(H)
    assert "k" + ad.name in names and ad.name + "k" in names
    assert len(pieces) > 2
    for P in pieces:
        assert P.dim <= 3
        assert verify_yd(P).passed, P.name


def test_sampled_ll_modules_vary_in_dimension(h2):
    H, _ = h2
    modules = sample_yd_modules(H, "LL", np.random.default_rng(7), 20)
    assert len({M.dim for M in modules}) > 1
    assert all(verify_yd(M).passed for M in modules)


class _ZeroDraws:
    def integers(self, low, high=None, size=None):
        return np.zeros(size, dtype=np.int64)


def test_random_invertible_warns_when_it_falls_back(Q):
    messages = []
    sink = logger.add(messages.append, level="WARNING")
    try:
        P = random_invertible(Q, _ZeroDraws(), 2, attempts=5)
    finally:
        logger.remove(sink)
    assert Q.equal(P, Q.eye(2))
    assert any("No invertible 2x2 matrix in 5 draws" in str(m) for m in messages)
