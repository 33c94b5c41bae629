"""Module categories: representations, Hom spaces, associators, duals and the R-matrix braiding."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhopf.catalog.builtins import builtin
from qhopf.categories.hmod import (HModule, ModuleMorphism, associator_map, braiding_map,
                                   check_associator_naturality, check_braiding_naturality, check_hexagons,
                                   check_pentagon, cyclic_submodule, direct_sum, dual_module, hom_space,
                                   qt_braiding, random_morphism, regular_module, tensor_modules, trivial_module,
                                   verify_module, verify_morphism, zigzag_matrix)
from qhopf.core import linalg
from qhopf.core.linear_map import LinearMap
from qhopf.utils.errors import DimensionMismatch, FlavorMismatch
from qhopf.utils.sampling import random_module


@pytest.mark.parametrize("side", ["left", "right"])
def test_regular_and_trivial_modules(any_builtin, side):
    H, _ = any_builtin
    for M in (regular_module(H, side), trivial_module(H, side)):
        assert verify_module(M).passed
    assert regular_module(H, side).dim == H.dim


def test_module_shape_is_checked(kz2):
    H, _ = kz2
    with pytest.raises(DimensionMismatch):
        HModule(H, H.field.zeros((2, 2, 3)))
    with pytest.raises(ValueError):
        HModule(H, H.field.zeros((2, 1, 1)), side="middle")


def test_random_modules_are_modules(sweedler, rng):
    H, _ = sweedler
    for _ in range(5):
        M = random_module(H, rng, max_dim=6)
        assert M.dim <= 6
        assert verify_module(M).passed


def test_hom_spaces(kz2, sweedler):
    H, _ = kz2
    k, reg = trivial_module(H), regular_module(H)
    # integrals of kZ2 are spanned by 1 + g
    homs = hom_space(k, reg)
    assert len(homs) == 1
    assert H.field.equal(homs[0][:, 0], homs[0][0, 0] * H.field.array([1, 1]))
    assert len(hom_space(k, k)) == 1
    assert len(hom_space(reg, reg)) == 2
    S, _ = sweedler
    assert len(hom_space(regular_module(S), regular_module(S))) == 4


def test_hom_space_rejects_mixed_sides(kz2):
    H, _ = kz2
    with pytest.raises(FlavorMismatch):
        hom_space(regular_module(H, "left"), regular_module(H, "right"))


def test_cyclic_submodule_of_regular(sweedler):
    H, _ = sweedler
    reg = regular_module(H)
    # H . x = span(x, gx)
    sub = cyclic_submodule(reg, H.basis_element(2).coeffs)
    assert sub.dim == 2
    assert verify_module(sub).passed
    assert cyclic_submodule(reg, H.unit).dim == 4


def test_random_morphisms_intertwine(sweedler, rng):
    H, _ = sweedler
    M, N = random_module(H, rng), random_module(H, rng)
    f = random_morphism(M, N, rng)
    assert verify_morphism(f).passed


def test_non_morphism_is_detected(kz2):
    H, _ = kz2
    reg, k = regular_module(H), trivial_module(H)
    # projection onto the coefficient of 1 does not intertwine
    f = ModuleMorphism(reg, k, LinearMap(H.field, H.field.array([[1, 0]])))
    assert not verify_morphism(f).passed


# ----------------------------------------------------------------------
# monoidal structure
# ----------------------------------------------------------------------
def test_tensor_product_is_a_module(h2):
    H, _ = h2
    reg = regular_module(H)
    M = tensor_modules(reg, direct_sum(reg, trivial_module(H)))
    assert M.dim == 6
    assert verify_module(M).passed


@settings(max_examples=6, deadline=None)
@given(seed=st.integers(0, 10_000), name=st.sampled_from(["H2", "H2_Ri", "sweedler4_Rtri", "dZ2"]))
def test_pentagon(seed, name):
    H, _ = builtin(name)
    rng = np.random.default_rng(seed)
    U, V, W, X = (random_module(H, rng, max_dim=2) for _ in range(4))
    assert check_pentagon(U, V, W, X).passed


def test_pentagon_for_right_modules(h2):
    H, _ = h2
    reg, k = regular_module(H, "right"), trivial_module(H, "right")
    assert check_pentagon(reg, reg, k, reg).passed
    assert check_pentagon(reg, reg, reg, reg).passed


def test_associator_is_invertible_and_a_morphism(h2):
    H, _ = h2
    reg = regular_module(H)
    a = associator_map(reg, reg, reg)
    assert (a @ associator_map(reg, reg, reg, inverse=True)).is_identity()
    src = tensor_modules(tensor_modules(reg, reg), reg)
    dst = tensor_modules(reg, tensor_modules(reg, reg))
    assert verify_morphism(ModuleMorphism(src, dst, a)).passed


def test_associator_naturality(h2, rng):
    H, _ = h2
    mods = [random_module(H, rng, max_dim=3) for _ in range(6)]
    f, g, h = (random_morphism(mods[i], mods[i + 3], rng) for i in range(3))
    assert check_associator_naturality(f, g, h).passed


def test_associator_of_trivial_phi_is_identity(kz2):
    H, _ = kz2
    reg = regular_module(H)
    assert associator_map(reg, reg, reg).is_identity()


# ----------------------------------------------------------------------
# duals
# ----------------------------------------------------------------------
@pytest.mark.parametrize("side", ["left_dual", "right_dual"])
def test_duals_satisfy_snakes(any_builtin, side, rng):
    H, _ = any_builtin
    for M in (regular_module(H), random_module(H, rng, max_dim=3)):
        data = dual_module(M, side)
        assert data.report.passed
        assert data.dual.dim == M.dim
        assert verify_module(data.dual).passed
        assert any(t.startswith("snake") for t in data.report.tags())


@pytest.mark.parametrize("side", ["left_dual", "right_dual"])
def test_zigzag_matches_the_composite_through_the_associator(h2, side):
    H, _ = h2
    F = H.field
    M = regular_module(H)
    data = dual_module(M, side)
    D, d = data.dual, M.dim
    eye = F.eye(d)
    if side == "left_dual":
        # (M ev) a_{M,M*,M} (coev M)
        a = associator_map(M, D, M).matrix
        composite = linalg.matmul(F, linalg.kron(F, eye, data.ev.matrix),
                                  linalg.matmul(F, a, linalg.kron(F, data.coev.matrix, eye)))
    else:
        # (ev' M) a^-1_{M,*M,M} (M coev')
        a = associator_map(M, D, M, inverse=True).matrix
        composite = linalg.matmul(F, linalg.kron(F, data.ev.matrix, eye),
                                  linalg.matmul(F, a, linalg.kron(F, eye, data.coev.matrix)))
    assert F.equal(zigzag_matrix(M, data, 0), composite)
    assert F.equal(composite, eye)


def test_dual_names(kz2):
    H, _ = kz2
    reg = regular_module(H)
    assert dual_module(reg, "left_dual").dual.name.endswith("*")
    assert dual_module(reg, "right_dual").dual.name.startswith("*")
    with pytest.raises(ValueError):
        dual_module(reg, "double_dual")


def test_duals_need_left_modules(kz2):
    H, _ = kz2
    with pytest.raises(FlavorMismatch):
        dual_module(regular_module(H, "right"))


# ----------------------------------------------------------------------
# braiding
# ----------------------------------------------------------------------
def test_r_matrix_braiding_is_a_morphism(qt_builtin, rng):
    H, qt = qt_builtin
    M, N = random_module(H, rng, max_dim=3), random_module(H, rng, max_dim=3)
    c = qt_braiding(M, N, qt)
    assert verify_morphism(c).passed


def test_r_matrix_hexagons(h2_ri, rng):
    H, qt = h2_ri
    U, V, W = (random_module(H, rng, max_dim=3) for _ in range(3))
    report = check_hexagons(U, V, W, lambda X, Y: braiding_map(X, Y, qt.R))
    assert report.passed
    assert report.tags() == ["hexagon (1)", "hexagon (2)"]


def test_braiding_naturality(dz2, rng):
    H, qt = dz2
    M, N, M2, N2 = (random_module(H, rng, max_dim=3) for _ in range(4))
    f, g = random_morphism(M, M2, rng), random_morphism(N, N2, rng)
    assert check_braiding_naturality(f, g, lambda X, Y: braiding_map(X, Y, qt.R)).passed


def test_symmetric_braiding_squares_to_identity(kz2_rt):
    H, qt = kz2_rt
    reg = regular_module(H)
    c = braiding_map(reg, reg, qt.R)
    assert (c @ c).is_identity()


def test_non_symmetric_braiding(h2_ri):
    H, qt = h2_ri
    reg = regular_module(H)
    c = braiding_map(reg, reg, qt.R)
    assert not (c @ c).is_identity()


def test_braiding_needs_left_modules(kz2):
    H, qt = kz2
    with pytest.raises(FlavorMismatch):
        qt_braiding(regular_module(H, "right"), regular_module(H, "right"), qt)
