"""Fields, exact linear algebra, linear maps, elements and leg programs."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhopf.categories.hmod import regular_module
from qhopf.core import linalg
from qhopf.core.fields import Field, get_field
from qhopf.core.legs import rank_one_split
from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import AlgebraElement, compare, require
from qhopf.utils.errors import ConsistencyFailure, DimensionMismatch, FieldError, NotInvertible

FIELDS = [Field.rationals(), Field.prime(101), Field.prime(7)]

small_ints = st.integers(min_value=-5, max_value=5)


def square(d):
    return st.lists(st.lists(small_ints, min_size=d, max_size=d), min_size=d, max_size=d)


# ----------------------------------------------------------------------
# fields
# ----------------------------------------------------------------------
@pytest.mark.parametrize("text,expected", [("q", None), ("QQ", None), ("fp:101", 101), ("F7", 7), ("gf5", 5)])
def test_field_parse(text, expected):
    assert Field.parse(text).p == expected


@pytest.mark.parametrize("text", ["reals", "fp:", "fp:12"])
def test_field_parse_rejects(text):
    with pytest.raises(FieldError):
        Field.parse(text)


def test_scalar_coercion(Q, F101):
    assert Q.scalar("-1/2") == Fraction(-1, 2)
    assert F101.scalar("1/2") == 51
    assert F101.scalar(-1) == 100
    with pytest.raises(FieldError):
        Q.scalar(0.5)
    with pytest.raises(FieldError):
        Field.prime(7).scalar(Fraction(1, 7))


def test_inverse_of_zero(F101):
    with pytest.raises(NotInvertible):
        F101.inv(0)


def test_roots_of_unity():
    F7 = Field.prime(7)
    z = F7.root_of_unity(3)
    assert z != 1 and pow(z, 3, 7) == 1
    assert Field.rationals().root_of_unity(2) == -1
    with pytest.raises(FieldError):
        Field.rationals().root_of_unity(3)
    with pytest.raises(FieldError):
        Field.prime(101).root_of_unity(3)


def test_sqrt(Q, F101):
    c = F101.sqrt(-1)
    assert (c * c) % 101 == 100
    assert Q.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(FieldError):
        Q.sqrt(-1)


def test_format(Q, F101):
    assert Q.format(Fraction(-3, 4)) == "-3/4"
    assert Q.format(2) == "2"
    assert F101.format(-1) == "100"


def test_get_field_is_cached():
    assert get_field("fp:101") is get_field("fp:101")


@settings(max_examples=40, deadline=None)
@given(a=st.integers(-50, 50), b=st.integers(-50, 50).filter(lambda x: x != 0))
def test_field_inverse_property(a, b):
    for F in FIELDS:
        x = F.scalar(Fraction(a, b)) if F.is_rational else F.scalar(b)
        if x == 0:
            continue
        assert F.scalar(x * F.inv(x)) == F.one


# ----------------------------------------------------------------------
# linear algebra
# ----------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(rows=square(3))
def test_inverse_inverts(rows):
    for F in FIELDS:
        A = F.array(rows)
        if linalg.rank(F, A) < 3:
            with pytest.raises(NotInvertible):
                linalg.inverse(F, A)
            continue
        Ainv = linalg.inverse(F, A)
        assert F.equal(linalg.matmul(F, Ainv, A), F.eye(3))
        assert F.equal(linalg.inverse(F, Ainv), A)


@settings(max_examples=40, deadline=None)
@given(rows=st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=3, max_size=3),
       x=st.lists(small_ints, min_size=4, max_size=4))
def test_solve_and_nullspace(rows, x):
    for F in FIELDS:
        A, v = F.array(rows), F.array(x)
        b = linalg.matmul(F, A, v)
        y = linalg.solve(F, A, b)
        assert F.equal(linalg.matmul(F, A, y), b)
        N = linalg.nullspace(F, A)
        assert N.shape[1] == 4 - linalg.rank(F, A)
        assert F.is_zero(linalg.matmul(F, A, N))


def test_solve_inconsistent(Q):
    A = Q.array([[1, 1], [1, 1]])
    with pytest.raises(NotInvertible):
        linalg.solve(Q, A, Q.array([1, 2]))


def test_matmul_shape_mismatch(Q):
    with pytest.raises(DimensionMismatch):
        linalg.matmul(Q, Q.eye(2), Q.eye(3))


# ----------------------------------------------------------------------
# linear maps
# ----------------------------------------------------------------------
def test_swap_is_an_involution(Q):
    s = LinearMap.swap(Q, 2, 3)
    back = LinearMap.swap(Q, 3, 2)
    assert (back @ s).is_identity()


@settings(max_examples=25, deadline=None)
@given(a=square(2), b=square(2), c=square(2), d=square(2))
def test_tensor_interchange(a, b, c, d):
    F = Field.prime(101)
    A, B, C, D = (LinearMap(F, F.array(m)) for m in (a, b, c, d))
    assert (A.tensor(B) @ C.tensor(D)).equals((A @ C).tensor(B @ D))


def test_compose_mismatch(Q):
    with pytest.raises(DimensionMismatch):
        LinearMap.identity(Q, 2) @ LinearMap.identity(Q, 3)


def test_linear_map_needs_matrix(Q):
    with pytest.raises(DimensionMismatch):
        LinearMap(Q, Q.zeros(3))


# ----------------------------------------------------------------------
# elements, embeddings and leg programs
# ----------------------------------------------------------------------
def test_flip_and_permute(sweedler):
    H, qt = sweedler
    assert qt.R.flip().flip().equals(qt.R)
    assert H.embed(qt.R, [2, 1], 2).equals(qt.R.flip())
    assert H.embed(H.phi, [1, 2, 3], 3).equals(H.phi)


def test_embed_places_unit(sweedler):
    H, qt = sweedler
    F = H.field
    expected = np.transpose(np.multiply.outer(qt.R.coeffs, H.unit), (0, 2, 1))
    assert F.equal(H.embed(qt.R, [1, 3], 3).coeffs, expected)


def test_embed_rejects_bad_positions(kz2):
    H, qt = kz2
    with pytest.raises(DimensionMismatch):
        H.embed(qt.R, [1, 1], 3)
    with pytest.raises(DimensionMismatch):
        H.embed(qt.R, [1, 4], 3)


def test_program_delta_matches_structure(sweedler):
    H, _ = sweedler
    out = H.program().ident("h", "i").delta("h", "a", "b").output("a", "b", "i").run()
    assert H.field.equal(out, np.transpose(H.comult, (1, 2, 0)))


def test_program_unknown_leg(kz2):
    H, _ = kz2
    with pytest.raises(DimensionMismatch):
        H.program().ident("h", "i").delta("nope", "a", "b").run()



def test_rank_one_split_recovers_pure_tensors(Q, F101):
    for F in (Q, F101):
        a, b = F.array([1, 2]), F.array([3, 0, 1])
        pure = F.reduce(np.multiply.outer(a, b) * F.scalar(5))
        vectors, scale = rank_one_split(F, pure)
        rebuilt = F.reduce(np.multiply.outer(vectors[0], vectors[1]) * scale)
        assert F.equal(rebuilt, pure)
        assert rank_one_split(F, F.eye(2)) is None
        assert rank_one_split(F, F.zeros((2, 2))) is None
        assert rank_one_split(F, a) is None


def _dense_three_leg_action(H, element, action):
    d = action.shape[1]
    return (H.program().ident("a", "ai", d).ident("b", "bi", d).ident("c", "ci", d)
            .load(element, "x1", "x2", "x3").act("x1", "a", action).act("x2", "b", action)
            .act("x3", "c", action).output("a", "b", "c", "ai", "bi", "ci").run())


def _legwise_three_leg_action(H, element, action):
    d = action.shape[1]
    return (H.program().ident("a", "ai", d).ident("b", "bi", d).ident("c", "ci", d)
            .act_legwise(element, ("a", action), ("b", action), ("c", action))
            .output("a", "b", "c", "ai", "bi", "ci").run())


@pytest.mark.parametrize("name", ["H2", "sweedler4_Rtri", "dZ2"])
def test_act_legwise_matches_leg_by_leg_action(name):
    from qhopf.catalog.builtins import builtin
    H, _ = builtin(name)
    action = regular_module(H).action
    for element in (H.phi, H.phi_inv):
        dense = _dense_three_leg_action(H, element, action)
        assert H.field.equal(_legwise_three_leg_action(H, element, action), dense)
    # a trivial Phi acts as the identity on H (x) H (x) H
    if name != "H2":
        d = H.dim ** 3
        assert H.field.equal(_legwise_three_leg_action(H, H.phi, action).reshape(d, d), H.field.eye(d))


def test_act_legwise_rejects_repeated_legs(kz2):
    H, _ = kz2
    action = regular_module(H).action
    with pytest.raises(DimensionMismatch):
        (H.program().ident("a", "ai", H.dim).ident("b", "bi", H.dim)
         .act_legwise(H.phi, ("a", action), ("a", action), ("b", action)).output("a", "b", "ai", "bi").run())
    with pytest.raises(DimensionMismatch):
        (H.program().ident("a", "ai", H.dim)
         .act_legwise(H.phi, ("a", action)).output("a", "ai").run())

@settings(max_examples=30, deadline=None)
@given(coeffs=st.lists(small_ints, min_size=4, max_size=4))
def test_coproduct_is_linear(coeffs):
    from qhopf.catalog.builtins import builtin

    H, _ = builtin("sweedler4_Rtri")
    F = H.field
    x = H.element(F.array(coeffs))
    total = F.zeros((4, 4))
    for i, c in enumerate(coeffs):
        total = F.reduce(total + H.comult[i] * F.scalar(c))
    assert F.equal(H.coproduct(x).coeffs, total)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_invert_twice_is_identity(seed):
    from qhopf.algebra.quasi_hopf import random_gauge
    from qhopf.catalog.builtins import builtin

    H, _ = builtin("sweedler4_Rtri", "fp:101")
    gauge = random_gauge(H, np.random.default_rng(seed))
    assert H.invert(gauge.F_inv).equals(gauge.F)
    assert H.mul(gauge.F, gauge.F_inv).equals(H.one(2))


def test_zero_is_not_invertible(kz2):
    H, _ = kz2
    with pytest.raises(NotInvertible):
        H.invert(AlgebraElement(H.field, H.field.zeros((2,))))


def test_compare_reports_first_difference(Q):
    ok = compare(Q, "same", Q.eye(2), Q.eye(2))
    assert ok.passed and ok.line() == "same: PASS"
    bad = compare(Q, "(x)", Q.eye(2), Q.zeros((2, 2)))
    assert not bad.passed
    assert "(0, 0)" in bad.detail
    assert bad.lhs is not None and bad.rhs is not None
    assert not compare(Q, "shape", Q.eye(2), Q.eye(3)).passed


def test_require_raises_with_tag(Q):
    with pytest.raises(ConsistencyFailure) as info:
        require(Q, "(q6)", Q.eye(1), Q.zeros((1, 1)))
    assert info.value.tag == "(q6)"
