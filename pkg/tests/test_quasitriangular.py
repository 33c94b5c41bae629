"""R-matrices, R^{-1} by both closed forms, and the element u."""
import pytest

from qhopf.algebra.quasitriangular import (is_triangular, make_qt, r_inverse, r_inverse_invr1, r_inverse_invr2,
                                           u_elements, verify_qt, verify_u)
from qhopf.utils.errors import NotQT

from conftest import TRIANGULAR


def test_r_matrix_axioms(qt_builtin):
    H, qt = qt_builtin
    report = verify_qt(H, qt.R)
    assert report.passed, [r.line() for r in report.failures()]
    for tag in ("(qt1)", "(qt2)", "(qt3)", "(qt4)", "quasi-Yang-Baxter", "R invertible"):
        assert tag in report.tags()


def test_closed_form_inverses_agree(qt_builtin):
    H, qt = qt_builtin
    one = H.one(2)
    for candidate in (r_inverse_invr1(H, qt.R), r_inverse_invr2(H, qt.R)):
        assert candidate.equals(qt.R_inv)
    assert H.mul(qt.R, qt.R_inv).equals(one)
    assert H.mul(qt.R_inv, qt.R).equals(one)


def test_u_identities(qt_builtin):
    H, qt = qt_builtin
    report = verify_u(H, qt.R, qt.u, qt.u_inv)
    assert report.passed, [r.line() for r in report.failures()]
    assert {"(sqina)", "(sext)", "(ext)", "S^2(u)=u"} <= set(report.tags())


@pytest.mark.parametrize("name,expected", [("kZ2", [1, 0]), ("kZ2_Rt", [0, 1]),
                                           ("sweedler4_Rtri", [0, 1, 0, 0]), ("dZ2", [1, 0, 0, 1])])
def test_known_u(name, expected):
    from qhopf.catalog.builtins import builtin

    H, qt = builtin(name)
    assert H.field.equal(qt.u.coeffs, H.field.array(expected))
    u, u_inv = u_elements(H, qt.R)
    assert u.equals(qt.u) and u_inv.equals(qt.u_inv)


def test_sweedler_square_of_antipode_is_conjugation_by_g(sweedler):
    H, qt = sweedler
    x = H.basis_element(2)
    assert H.S(x, 2).equals(H.mul(qt.u, x, qt.u_inv))
    assert H.S(x, 2).equals(x.scale(-1))
    assert H.S(x, 4).equals(x)


@pytest.mark.parametrize("name", ["kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2_Ri", "dZ2"])
def test_triangularity(name):
    from qhopf.catalog.builtins import builtin

    H, qt = builtin(name)
    assert qt.triangular is (name in TRIANGULAR)
    assert is_triangular(H, qt.R) is qt.triangular


def test_triangular_inverse_is_the_flip(kz2_rt):
    H, qt = kz2_rt
    assert r_inverse(H, qt.R).equals(qt.R.flip())


def test_reverse_r_matrix(qt_builtin):
    H, qt = qt_builtin
    rev = qt.reverse()
    assert rev.R.equals(qt.R_inv.flip())
    assert verify_qt(H, rev.R).passed
    assert rev.reverse().R.equals(qt.R)


def test_h2_has_no_trivial_r_matrix(h2):
    H, qt = h2
    assert qt is None
    with pytest.raises(NotQT):
        make_qt(H, H.one(2))


def test_non_r_matrix_fails_named_identity(kz2):
    H, qt = kz2
    # g (x) g is invertible and central but not compatible with eps
    R = H.mul(qt.R, H.embed(H.basis_element(1), [1], 2), H.embed(H.basis_element(1), [2], 2))
    report = verify_qt(H, R)
    assert not report.get("(qt4)").passed
    assert report.get("(qt3)").passed
