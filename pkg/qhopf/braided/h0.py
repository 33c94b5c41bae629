"""H_0: H with the product h o h' as a Hopf algebra in YD, its two duals and Theta_{H_0}.

The carrier is H with the adjoint action h |> h' = h_1 h' S(h_2) and the
coaction R^2 (x) R^1 |> h. Functionals on H are written in the coordinates
dual to the stored basis of H.
"""
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import compare
from qhopf.categories.canonical import CanonicalIso, canonical_Theta, qt_sigma_matrix, raise_on_failure
from qhopf.categories.hmod import HModule, dual_module
from qhopf.categories.yd import (YDMorphism, adjoint_yd_module, qt_embed, trivial_yd, verify_yd,
                                 verify_yd_morphism, yd_braiding_map, yd_tensor)
from qhopf.braided.hopf import BraidedHopfAlgebra, braided_dual, verify_braided_morphism
from qhopf.utils.errors import ConsistencyFailure, NotInvertible, NotQT
from qhopf.utils.reports import IdentityResult, VerificationReport


def _require_qt(H, qt) -> None:
    if qt is None:
        raise NotQT(f"{H.name} carries no R-matrix")
    if qt.H is not H:
        raise NotQT("the R-matrix belongs to a different algebra")


# ----------------------------------------------------------------------
# structure maps
# ----------------------------------------------------------------------
def h0_product(H) -> LinearMap:
    """(ma): h o h' = X^1 h S(x^1 X^2) alpha x^2 X^3_1 h' S(x^3 X^3_2)."""
    prog = (H.program().load(H.phi, "X1", "X2", "X3").delta("X3", "X31", "X32")
            .load(H.phi_inv, "x1", "x2", "x3").mul("x1", "X2", out="s").S("s")
            .mul("x3", "X32", out="t").S("t").load(H.alpha, "a").mul("s", "a", "x2", "X31", out="w")
            .ident("h", "hi").mul("X1", "h", "w", out="L").ident("k", "ki").mul("L", "k", "t", out="L")
            .output("L", "hi", "ki"))
    return LinearMap(H.field, prog.matrix(1))


def h0_comultiplication(H, qt) -> LinearMap:
    """(und): x^1 X^1 h_1 g^1 S(x^2 R^2 y^3 X^3_2) (x) x^3 R^1 |> (y^1 X^2 h_2 g^2 S(y^2 X^3_1)).

    The adjoint action |> is applied to the whole second factor.
    """
    tw = H.twist
    prog = (H.program().ident("h", "hi").delta("h", "h1", "h2").load(tw.f_inv, "g1", "g2")
            .mul("h1", "g1", out="h1").mul("h2", "g2", out="h2")
            .load(H.phi, "X1", "X2", "X3").mul("X1", "h1", out="A").mul("X2", "h2", out="B")
            .delta("X3", "X31", "X32")
            .load(H.phi, "y1", "y2", "y3").mul("y2", "X31", out="s").S("s").mul("y1", "B", "s", out="B")
            .mul("y3", "X32", out="t").load(qt.R, "r1", "r2").mul("r2", "t", out="t")
            .load(H.phi_inv, "x1", "x2", "x3").mul("x2", "t", out="t").S("t").mul("x1", "A", "t", out="A")
            .mul("x3", "r1", out="k").delta("k", "k1", "k2").S("k2").mul("k1", "B", "k2", out="B")
            .output("A", "B", "hi"))
    return LinearMap(H.field, prog.matrix(2))


def h0_antipode(H, qt) -> LinearMap:
    """(unant): X^1 R^2 p^2 S(q^1 (X^2 R^1 p^1 |> h) S(q^2) X^3)."""
    pq = H.pq
    prog = (H.program().ident("h", "hi").load(qt.R, "r1", "r2").load(pq.p_R, "P1", "P2")
            .mul("r1", "P1", out="a").mul("r2", "P2", out="b")
            .load(H.phi, "X1", "X2", "X3").mul("X2", "a", out="a").delta("a", "a1", "a2").S("a2")
            .mul("a1", "h", "a2", out="w")
            .load(pq.q_R, "Q1", "Q2").S("Q2").mul("Q1", "w", "Q2", "X3", out="w").S("w")
            .mul("X1", "b", "w", out="w").output("w", "hi"))
    return LinearMap(H.field, prog.matrix(1))


def build_H0(H, qt) -> BraidedHopfAlgebra:
    """H_0 in YD with product (ma), unit beta, (und), (unva), (unant) and coaction (scshz)."""
    _require_qt(H, qt)
    F = H.field
    n = H.dim
    adjoint = adjoint_yd_module(H)
    carrier = qt_embed(HModule(H, adjoint.action, "left", name=f"{H.name}_0"), qt)
    antipode = h0_antipode(H, qt)
    try:
        antipode_inv = antipode.inverse()
    except NotInvertible:
        raise ConsistencyFailure("(unant)", f"the antipode of {H.name}_0 is not bijective") from None
    B = BraidedHopfAlgebra(
        carrier=carrier,
        mult=h0_product(H),
        unit=LinearMap(F, H.beta.coeffs.reshape(n, 1).copy()),
        comult=h0_comultiplication(H, qt),
        counit=LinearMap(F, H.counit.reshape(1, n).copy()),
        antipode=antipode,
        antipode_inv=antipode_inv,
        name=f"{H.name}_0",
    )
    logger.debug(f"{B.name} built")
    return B


def check_h0_algebra_in_yd(H) -> VerificationReport:
    """(H, o, beta) is an algebra in YD for the adjoint action (s1) and the coaction (s2)."""
    adjoint = adjoint_yd_module(H)
    n = H.dim
    report = VerificationReport(subject=f"{H.name}_0 with the coaction (s2)")
    report.merge(verify_yd(adjoint))
    mult = verify_yd_morphism(YDMorphism(yd_tensor(adjoint, adjoint), adjoint, h0_product(H))).results
    unit = LinearMap(H.field, H.beta.coeffs.reshape(n, 1).copy())
    unit_res = verify_yd_morphism(YDMorphism(trivial_yd(H), adjoint, unit)).results
    mult[0].tag, mult[1].tag = "(s1) h |> (a o b)", "(qca1) with (s2)"
    unit_res[0].tag, unit_res[1].tag = "(s1) h |> beta", "(qca2) with (s2)"
    report.results.extend(mult + unit_res)
    return report


def h0_quantum_commutativity(H) -> IdentityResult:
    """Informational: o composed with the (s2) braiding equals o."""
    adjoint = adjoint_yd_module(H)
    m = h0_product(H)
    return compare(H.field, "H_0 quantum commutative", m.matrix, (m @ yd_braiding_map(adjoint, adjoint)).matrix)


# ----------------------------------------------------------------------
# duals
# ----------------------------------------------------------------------
def _explicit_dual(H0: BraidedHopfAlgebra, qt, side: str) -> BraidedHopfAlgebra:
    module = H0.carrier.module
    right = side == "right_dual"
    carrier = qt_embed(dual_module(module, side).dual, qt)
    mult = H0.comult.transpose() @ LinearMap(H0.field, qt_sigma_matrix(module, module, qt, right=right))
    comult = LinearMap(H0.field, qt_sigma_matrix(module, module, qt, inverse=True, right=right)) @ H0.mult.transpose()
    return BraidedHopfAlgebra(carrier, mult, H0.counit.transpose(), comult, H0.unit.transpose(),
                              H0.antipode.transpose(), H0.antipode_inv.transpose(),
                              name=f"*{H0.name}" if right else f"{H0.name}*")


_DUAL_TAGS = {
    "left_dual": ("H_0* coaction", "(dmhz1)", "(duhz)", "(dcmhz)", "(dchz)", "(danthz)"),
    "right_dual": ("*H_0 coaction", "(dmhz2)", "*H_0 unit", "(dcmhz2)", "(dchz2)", "*H_0 antipode"),
}


def h0_duals(H, qt, H0: Optional[BraidedHopfAlgebra] = None) -> Tuple[BraidedHopfAlgebra, BraidedHopfAlgebra]:
    """(H_0*, *H_0) from the explicit formulas, each checked against braided_dual."""
    _require_qt(H, qt)
    H0 = H0 or build_H0(H, qt)
    F = H.field
    out = []
    for side in ("left_dual", "right_dual"):
        explicit = _explicit_dual(H0, qt, side)
        generic = braided_dual(H0, side)
        tags = _DUAL_TAGS[side]
        report = VerificationReport(subject=f"{explicit.name} explicit vs generic")
        report.add(compare(F, f"{tags[0]} action", explicit.carrier.action, generic.carrier.action))
        report.add(compare(F, tags[0], explicit.carrier.coaction, generic.carrier.coaction))
        pairs = (("mult", tags[1]), ("unit", tags[2]), ("comult", tags[3]), ("counit", tags[4]),
                 ("antipode", tags[5]))
        for attr, tag in pairs:
            report.add(compare(F, tag, getattr(explicit, attr).matrix, getattr(generic, attr).matrix))
        raise_on_failure(report)
        out.append(explicit)
    return out[0], out[1]


# ----------------------------------------------------------------------
# Theta_{H_0}
# ----------------------------------------------------------------------
def leg_action_matrix(module: HModule, element) -> np.ndarray:
    """The matrix of a two-leg element of H (x) H acting legwise on module (x) module."""
    d = module.dim
    return (module.H.program().ident("a", "ai", d).ident("b", "bi", d).load(element, "t1", "t2")
            .act("t1", "a", module.action).act("t2", "b", module.action)
            .output("a", "b", "ai", "bi").matrix(2))


def theta_h0_twisted_identities(theta: LinearMap, left: BraidedHopfAlgebra, right: BraidedHopfAlgebra,
                                qt) -> VerificationReport:
    """Theta((r~^1 R~^2 |-> phi) o (r~^2 R~^1 |-> psi)) = Theta(phi) o Theta(psi) and
    Delta Theta = R_21 R >- (Theta (x) Theta) Delta."""
    H = qt.H
    F = H.field
    report = VerificationReport(subject="Theta_H0 up to R")
    twist_in = LinearMap(F, leg_action_matrix(left.carrier.module, H.mul(qt.R_inv, qt.R_inv.flip())))
    twist_out = LinearMap(F, leg_action_matrix(right.carrier.module, H.mul(qt.R.flip(), qt.R)))
    tt = theta.tensor(theta)
    report.add(compare(F, "Theta_H0 multiplicative up to R^-1 R^-1_21",
                       (theta @ left.mult @ twist_in).matrix, (right.mult @ tt).matrix))
    report.add(compare(F, "Theta_H0 comultiplicative up to R_21 R",
                       (right.comult @ theta).matrix, (twist_out @ tt @ left.comult).matrix))
    return report


def theta_H0(H, qt, H0: Optional[BraidedHopfAlgebra] = None,
             duals: Optional[Tuple[BraidedHopfAlgebra, BraidedHopfAlgebra]] = None) -> CanonicalIso:
    """Theta_{H_0}: H_0* -> *H_0 equals u^{-1} >- (-), with inverse u |-> (-).

    Triangular R makes it a braided Hopf isomorphism; otherwise the two identities
    up to R hold instead.
    """
    _require_qt(H, qt)
    H0 = H0 or build_H0(H, qt)
    left, right = duals or h0_duals(H, qt, H0)
    F = H.field
    iso = canonical_Theta(H0.carrier)
    report = VerificationReport(subject=f"Theta for {H0.name}")
    report.add(compare(F, "Theta_H0 = u^-1 >-", iso.map.map.matrix, right.carrier.module.matrix_of(qt.u_inv)))
    report.add(compare(F, "Theta_H0^-1 = u |->", iso.inverse.map.matrix, left.carrier.module.matrix_of(qt.u)))
    if qt.triangular:
        report.merge(verify_braided_morphism(iso.map.map, left, right, "Theta_H0"))
    else:
        report.merge(theta_h0_twisted_identities(iso.map.map, left, right, qt))
    raise_on_failure(report)
    iso.report.merge(report)
    return iso


def theta_h0_is_morphism(H, qt) -> bool:
    """Whether Theta_{H_0} is a plain braided Hopf morphism (always so for triangular R)."""
    H0 = build_H0(H, qt)
    left, right = h0_duals(H, qt, H0)
    iso = canonical_Theta(H0.carrier)
    return verify_braided_morphism(iso.map.map, left, right, "Theta_H0").passed


def theta_h0_failing_pair(H, qt) -> Optional[Tuple[int, int]]:
    """A basis pair (i, j) of H_0* with Theta(e^i e^j) != Theta(e^i) Theta(e^j), or None.

    Without triangularity only the products twisted by R^-1 R^-1_21 must agree,
    so a pair can only show up when that twist acts nontrivially on H_0* (x) H_0*.
    """
    H0 = build_H0(H, qt)
    left, right = h0_duals(H, qt, H0)
    theta = canonical_Theta(H0.carrier).map.map
    diff = H.field.reduce((theta @ left.mult).matrix - (right.mult @ theta.tensor(theta)).matrix)
    bad = np.argwhere(diff != 0)
    if len(bad) == 0:
        return None
    i, j = divmod(int(bad[0][1]), H0.dim)
    logger.info(f"Theta_H0 of {H.name} is not multiplicative on (e^{i}, e^{j})")
    return i, j
