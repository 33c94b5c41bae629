"""The braided Hopf algebra underline-H* and the isomorphism *H_0 -> underline-H*^cop.

H* is an (H, H)-bimodule through <h -> phi, h'> = phi(h' h) and
<phi <- h, h'> = phi(h h'); its convolution product is only quasi-associative.
"""
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from qhopf.core import linalg
from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import compare
from qhopf.categories.canonical import raise_on_failure
from qhopf.categories.hmod import HModule, verify_module
from qhopf.categories.yd import YDMorphism, qt_embed
from qhopf.braided.h0 import build_H0, h0_duals, theta_H0
from qhopf.braided.hopf import BraidedHopfAlgebra, braided_variant, verify_braided_morphism
from qhopf.utils.errors import ConsistencyFailure, NotInvertible, NotQT, NotTriangular
from qhopf.utils.reports import VerificationReport


def harpoon_actions(H) -> Tuple[np.ndarray, np.ndarray]:
    """The arrays of h -> phi (left) and phi <- h (right) on the coordinates of H*."""
    P = H.program
    left = P().ident("h", "hi").ident("e", "ej").mul("e", "h", out="w").output("hi", "ej", "w").run()
    right = P().ident("h", "hi").ident("e", "ej").mul("h", "e", out="w").output("hi", "ej", "w").run()
    return left, right


def convolution(H) -> LinearMap:
    """<phi psi, h> = phi(h_1) psi(h_2)."""
    n = H.dim
    return LinearMap(H.field, H.comult.reshape(n, n * n).copy())


def leg_operator(F, element, arrays) -> np.ndarray:
    """sum over the coefficients of ``element`` of the Kronecker products of the per-leg matrices."""
    coeffs = element.coeffs
    d = int(np.prod([a.shape[1] for a in arrays]))
    out = F.zeros((d, d))
    for idx in np.argwhere(coeffs != 0):
        term = arrays[0][idx[0]]
        for t in range(1, len(idx)):
            term = linalg.kron(F, term, arrays[t][idx[t]])
        out = F.reduce(out + term * coeffs[tuple(idx)])
    return out


def hstar_identities(H) -> VerificationReport:
    """Bimodule laws of H*, (mbia1) and (mbia2)."""
    F = H.field
    n = H.dim
    lh, rh = harpoon_actions(H)
    report = VerificationReport(subject=f"{H.name}* as an (H, H)-bimodule")
    for r in verify_module(HModule(H, lh, "left", name=f"{H.name}*")).results:
        r.tag = f"-> {r.tag}"
        report.add(r)
    for r in verify_module(HModule(H, rh, "right", name=f"{H.name}*")).results:
        r.tag = f"<- {r.tag}"
        report.add(r)
    pairs = [(a, b) for a in range(n) for b in range(n)]
    report.add(compare(F, "-> and <- commute", np.stack([linalg.matmul(F, lh[a], rh[b]) for a, b in pairs]),
                       np.stack([linalg.matmul(F, rh[b], lh[a]) for a, b in pairs])))

    conv = convolution(H)
    ident = LinearMap.identity(F, n)
    lhs = conv @ conv.tensor(ident)
    quasi = LinearMap(F, leg_operator(F, H.phi, [lh, lh, lh])) @ LinearMap(F, leg_operator(F, H.phi_inv, [rh, rh, rh]))
    rhs = conv @ ident.tensor(conv) @ quasi
    report.add(compare(F, "(mbia1)", lhs.matrix, rhs.matrix))

    lefts, rights, lefts_split, rights_split = [], [], [], []
    for h in range(n):
        split = H.coproduct(H.basis_element(h))
        lefts.append((LinearMap(F, lh[h]) @ conv).matrix)
        lefts_split.append((conv @ LinearMap(F, leg_operator(F, split, [lh, lh]))).matrix)
        rights.append((LinearMap(F, rh[h]) @ conv).matrix)
        rights_split.append((conv @ LinearMap(F, leg_operator(F, split, [rh, rh]))).matrix)
    report.add(compare(F, "(mbia2) ->", np.stack(lefts), np.stack(lefts_split)))
    report.add(compare(F, "(mbia2) <-", np.stack(rights), np.stack(rights_split)))
    return report


# ----------------------------------------------------------------------
# underline-H*
# ----------------------------------------------------------------------
def hstar_action(H) -> np.ndarray:
    """(mhs): h . phi = h_1 -> phi <- S^{-1}(h_2), i.e. (h . phi)(h') = phi(S^{-1}(h_2) h' h_1)."""
    return (H.program().ident("h", "hi").ident("e", "ej").delta("h", "h1", "h2").Sinv("h2")
            .mul("h2", "e", "h1", out="w").output("hi", "ej", "w").run())


def hstar_product(H, qt) -> LinearMap:
    """(mbdd): (x^1 X^1 -> phi <- S^{-1}(f^2 x^3_2 Y^3 R^1 X^2))
    (x^2 Y^1 R^2_1 X^3_1 -> psi <- S^{-1}(f^1 x^3_1 Y^2 R^2_2 X^3_2))."""
    tw = H.twist
    prog = (H.program().load(H.phi, "Y1", "Y2", "Y3").load(qt.R, "r1", "r2").delta("r2", "r21", "r22")
            .mul("Y3", "r1", out="a").mul("Y2", "r22", out="c").mul("Y1", "r21", out="d")
            .load(H.phi, "X1", "X2", "X3").delta("X3", "X31", "X32")
            .mul("a", "X2", out="a").mul("c", "X32", out="c").mul("d", "X31", out="d")
            .load(H.phi_inv, "x1", "x2", "x3").delta("x3", "x31", "x32")
            .mul("x1", "X1", out="B").mul("x2", "d", out="D").mul("x31", "c", out="c").mul("x32", "a", out="a")
            .load(tw.f, "F1", "F2").mul("F2", "a", out="A").mul("F1", "c", out="C").Sinv("A").Sinv("C")
            .ident("h", "hi").delta("h", "h1", "h2")
            .mul("A", "h1", "B", out="L1").mul("C", "h2", "D", out="L2")
            .output("hi", "L1", "L2"))
    return LinearMap(H.field, prog.matrix(1))


def hstar_comultiplication(H) -> LinearMap:
    """(cbdd): X^1_1 p^1 -> phi_2 <- S^{-1}(X^1_2 p^2) (x) X^2 -> phi_1 <- S^{-1}(X^3)."""
    pq = H.pq
    prog = (H.program().ident("h", "hi").ident("k", "ki").load(H.phi, "X1", "X2", "X3")
            .delta("X1", "X11", "X12").load(pq.p_R, "P1", "P2").mul("X11", "P1", out="b")
            .mul("X12", "P2", out="a").Sinv("a").Sinv("X3")
            .mul("X3", "k", "X2", "a", "h", "b", out="w").output("hi", "ki", "w"))
    return LinearMap(H.field, prog.matrix(2))


def hstar_antipode(H, qt) -> LinearMap:
    """(anbdd): Q^1 q^1 R^2 x^2 . [p^1 P^2 S(Q^2) -> S^-1-bar(phi) <- S(q^2 R^1 x^1 P^1) x^3 S^{-1}(p^2)],
    P and Q further copies of p_R and q_R."""
    pq = H.pq
    prog = (H.program().load(pq.p_R, "p1", "p2").load(pq.p_R, "P1", "P2").load(pq.q_R, "Q1", "Q2")
            .S("Q2").mul("p1", "P2", "Q2", out="a").Sinv("p2")
            .load(pq.q_R, "q1", "q2").mul("Q1", "q1", out="T")
            .load(qt.R, "r1", "r2").mul("T", "r2", out="T").mul("q2", "r1", out="c")
            .load(H.phi_inv, "x1", "x2", "x3").mul("T", "x2", out="T").mul("c", "x1", "P1", out="c").S("c")
            .mul("c", "x3", "p2", out="b")
            .delta("T", "T1", "T2").Sinv("T2")
            .ident("h", "hi").mul("b", "T2", "h", "T1", "a", out="w").Sinv("w")
            .output("hi", "w"))
    return LinearMap(H.field, prog.matrix(1))


def build_underline_Hstar(H, qt) -> BraidedHopfAlgebra:
    """underline-H* with (mhs), (chs), (mbdd), (cbdd), (cbdd1), (anbdd) and unit eps."""
    if qt is None or qt.H is not H:
        raise NotQT(f"underline-{H.name}* needs an R-matrix on {H.name}")
    F = H.field
    n = H.dim
    carrier = qt_embed(HModule(H, hstar_action(H), "left", name=f"{H.name}*_"), qt)
    antipode = hstar_antipode(H, qt)
    try:
        antipode_inv = antipode.inverse()
    except NotInvertible:
        raise ConsistencyFailure("(anbdd)", f"the antipode of underline-{H.name}* is not bijective") from None
    B = BraidedHopfAlgebra(
        carrier=carrier,
        mult=hstar_product(H, qt),
        unit=LinearMap(F, H.counit.reshape(n, 1).copy()),
        comult=hstar_comultiplication(H),
        counit=LinearMap(F, H.Sinv(H.alpha).coeffs.reshape(1, n).copy()),
        antipode=antipode,
        antipode_inv=antipode_inv,
        name=f"{H.name}*_",
    )
    logger.debug(f"underline-{H.name}* built")
    return B


# ----------------------------------------------------------------------
# mu: *H_0 -> underline-H*^cop
# ----------------------------------------------------------------------
def _sandwich(H, element) -> LinearMap:
    """phi -> e^1 -> phi <- S^{-1}(e^2), i.e. phi(S^{-1}(e^2) h e^1)."""
    prog = (H.program().ident("e", "ej").load(element, "g1", "g2").Sinv("g2")
            .mul("g2", "e", "g1", out="w").output("ej", "w"))
    return LinearMap(H.field, prog.run())


def mu_map(H) -> Tuple[LinearMap, LinearMap]:
    """(mu, mu^{-1}) with mu(phi) = g^1 -> phi <- S^{-1}(g^2), mu^{-1}(phi) = f^1 -> phi <- S^{-1}(f^2)."""
    tw = H.twist
    return _sandwich(H, tw.f_inv), _sandwich(H, tw.f)


def mu_iso(H, qt, star_h0: Optional[BraidedHopfAlgebra] = None,
           hstar: Optional[BraidedHopfAlgebra] = None) -> YDMorphism:
    """mu: *H_0 -> underline-H*^cop, a braided Hopf isomorphism for triangular R."""
    if qt is None or qt.H is not H:
        raise NotQT(f"{H.name} carries no R-matrix")
    if not qt.triangular:
        raise NotTriangular(f"{H.name} is not triangular: R^-1 != R_21")
    F = H.field
    if star_h0 is None:
        star_h0 = h0_duals(H, qt)[1]
    hstar_cop = braided_variant(hstar or build_underline_Hstar(H, qt), "cop")
    mu, mu_inv = mu_map(H)
    report = VerificationReport(subject=f"mu for {H.name}")
    report.add(compare(F, "mu^-1 mu = id", (mu_inv @ mu).matrix, F.eye(H.dim)))
    report.merge(verify_braided_morphism(mu, star_h0, hstar_cop, "mu"))
    raise_on_failure(report)
    return YDMorphism(star_h0.carrier, hstar_cop.carrier, mu)


def check_dual_chain(H, qt) -> VerificationReport:
    """H_0* -> *H_0 -> underline-H*^cop, each step and the composite a braided Hopf isomorphism."""
    if not qt.triangular:
        raise NotTriangular(f"{H.name} is not triangular")
    H0 = build_H0(H, qt)
    left, right = h0_duals(H, qt, H0)
    hstar = build_underline_Hstar(H, qt)
    hstar_cop = braided_variant(hstar, "cop")
    theta = theta_H0(H, qt, H0, (left, right))
    mu = mu_iso(H, qt, right, hstar)
    report = VerificationReport(subject=f"H_0* = *H_0 = underline-H*^cop for {H.name}")
    report.merge(verify_braided_morphism(theta.map.map, left, right, "Theta_H0"))
    report.merge(verify_braided_morphism(mu.map, right, hstar_cop, "mu"))
    report.merge(verify_braided_morphism(mu.map @ theta.map.map, left, hstar_cop, "mu Theta_H0"))
    return report
