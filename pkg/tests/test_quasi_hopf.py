"""Quasi-Hopf axioms, variants, gauge twists, the Drinfeld twist and the p/q elements."""
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qhopf.algebra.quasi_hopf import (build_quasi_hopf, gauge_twist, inverse_gauge, make_variant, normalize,
                                      random_gauge, verify_antipode, verify_quasi_bialgebra)
from qhopf.algebra.twist import compute_pq, compute_twist, verify_pq, verify_twist
from qhopf.catalog.builtins import builtin
from qhopf.categories.yd_rigid import lemma31, q_l_relations
from qhopf.utils.errors import ConsistencyFailure, DimensionMismatch


def test_builtins_satisfy_axioms(any_builtin):
    H, _ = any_builtin
    assert verify_quasi_bialgebra(H).passed
    assert verify_antipode(H).passed


@pytest.mark.parametrize("which", ["op", "cop", "op_cop"])
def test_variants_satisfy_axioms(any_builtin, which):
    H, _ = any_builtin
    V = make_variant(H, which)
    qb, anti = verify_quasi_bialgebra(V), verify_antipode(V)
    assert qb.passed, [r.line() for r in qb.failures()]
    assert anti.passed, [r.line() for r in anti.failures()]


def test_variant_names(h2):
    H, _ = h2
    assert make_variant(H, "op").name == "H2^op"
    assert make_variant(H, "op-cop").name == "H2^op,cop"
    assert H.op is H.op
    with pytest.raises(ValueError):
        make_variant(H, "dual")


def test_op_is_an_involution_on_structure(h2):
    H, _ = h2
    twice = make_variant(make_variant(H, "op"), "op")
    assert H.field.equal(twice.mult, H.mult)
    assert twice.phi.equals(H.phi)
    assert twice.alpha.equals(H.alpha) and twice.beta.equals(H.beta)


def test_reassociator_tags(h2):
    H, _ = h2
    tags = verify_quasi_bialgebra(H).tags()
    for tag in ("(q1)", "(q2)", "(q3)", "(q4)", "(q7)"):
        assert tag in tags
    assert {"(q5)", "(q6)"} <= set(verify_antipode(H).tags())


def test_h2_reassociator_is_its_own_inverse(h2):
    H, _ = h2
    assert H.mul(H.phi, H.phi).equals(H.one(3))
    assert not H.phi.equals(H.one(3))


def test_broken_beta_fails_q6(kz2):
    H, _ = kz2
    broken = replace(H, beta=H.beta.scale(2))
    report = verify_antipode(broken)
    assert not report.get("(q6)").passed
    assert not report.get("eps(alpha)eps(beta)=1").passed
    assert verify_quasi_bialgebra(broken).passed


def test_singular_reassociator_is_rejected(Q):
    H, _ = builtin("kZ2", "q")
    with pytest.raises(ConsistencyFailure) as info:
        build_quasi_hopf(Q, H.basis, H.mult, H.unit, H.comult, H.counit, Q.zeros((2, 2, 2)),
                         H.antipode, H.antipode_inv, H.alpha.coeffs, H.beta.coeffs)
    assert info.value.tag == "Phi invertible"


def test_wrong_inverse_reassociator_is_rejected(Q):
    H, _ = builtin("H2", "q")
    with pytest.raises(ConsistencyFailure):
        build_quasi_hopf(Q, H.basis, H.mult, H.unit, H.comult, H.counit, H.phi.coeffs,
                         H.antipode, H.antipode_inv, H.alpha.coeffs, H.beta.coeffs,
                         phi_inv=H.one(3).coeffs)


def test_shape_checks(Q):
    H, _ = builtin("kZ2", "q")
    with pytest.raises(DimensionMismatch):
        build_quasi_hopf(Q, H.basis, H.mult, H.unit, H.comult, H.counit, H.phi.coeffs,
                         Q.eye(3), H.antipode_inv, H.alpha.coeffs, H.beta.coeffs)


def test_normalize_rescales_alpha_and_beta(kz2):
    H, _ = kz2
    skewed = replace(H, alpha=H.alpha.scale(2), beta=H.beta.scale(Fraction(1, 2)))
    assert skewed.epsilon(skewed.alpha) == 2
    N = normalize(skewed)
    assert N.epsilon(N.alpha) == 1 and N.epsilon(N.beta) == 1
    assert verify_antipode(N).passed
    assert normalize(H) is H


# ----------------------------------------------------------------------
# gauge twists
# ----------------------------------------------------------------------
@settings(max_examples=8, deadline=None)
@given(seed=st.integers(0, 10_000), name=st.sampled_from(["H2", "sweedler4_Rtri", "dZ2"]))
def test_gauge_twist_preserves_axioms(seed, name):
    H, _ = builtin(name, "fp:101")
    HF = gauge_twist(H, random_gauge(H, np.random.default_rng(seed)))
    assert verify_quasi_bialgebra(HF).passed
    assert verify_antipode(HF).passed


def test_gauge_twist_round_trip(sweedler, rng):
    H, _ = sweedler
    g = random_gauge(H, rng)
    back = gauge_twist(gauge_twist(H, g), inverse_gauge(g))
    assert H.field.equal(back.comult, H.comult)
    assert back.phi.equals(H.phi)
    assert back.alpha.equals(H.alpha) and back.beta.equals(H.beta)


def test_gauge_must_be_counital(kz2):
    H, _ = kz2
    with pytest.raises(ConsistencyFailure):
        gauge_twist(H, H.one(2).scale(2))


# ----------------------------------------------------------------------
# Drinfeld twist and p/q
# ----------------------------------------------------------------------
def test_twist_identities(any_builtin):
    H, _ = any_builtin
    report = verify_twist(H)
    assert report.passed, [r.line() for r in report.failures()]
    assert {"(ca)", "(gdf)", "(l3a)", "(pf)"} <= set(report.tags())


def test_twist_of_kz2_is_trivial(kz2):
    H, _ = kz2
    tw = H.twist
    assert tw.f.equals(H.one(2))
    assert tw.f_inv.equals(H.one(2))


def test_twist_is_cached(h2):
    H, _ = h2
    assert H.twist is H.twist
    assert compute_twist(H).f.equals(H.twist.f)


def test_pq_identities(any_builtin):
    H, _ = any_builtin
    report = verify_pq(H)
    assert report.passed, [r.line() for r in report.failures()]
    assert {"(qr1)", "(qr1a)", "(ql1a)", "(pqr)", "(pql)", "(pqla)", "(tpr2)"} <= set(report.tags())


def test_pq_trivial_for_ordinary_hopf(kz2):
    H, _ = kz2
    pq = compute_pq(H)
    for el in (pq.p_R, pq.q_R, pq.p_L, pq.q_L):
        assert el.equals(H.one(2))


def test_q_l_and_f_relations(any_builtin):
    H, _ = any_builtin
    report = q_l_relations(H)
    assert report.passed
    assert report.tags() == ["(fo1)", "(fo2)"]


def test_lemma31_names_the_q_l_check(sweedler):
    H, _ = sweedler
    assert lemma31 is q_l_relations
    assert lemma31(H).passed
