"""The Drinfeld twist f and the elements p_R, q_R, p_L, q_L."""
from dataclasses import dataclass

from loguru import logger

from qhopf.core.tensor import AlgebraElement, compare
from qhopf.utils.errors import ConsistencyFailure
from qhopf.utils.reports import VerificationReport


@dataclass(frozen=True, eq=False)
class DrinfeldTwistData:
    gamma: AlgebraElement
    delta: AlgebraElement
    f: AlgebraElement
    f_inv: AlgebraElement


@dataclass(frozen=True, eq=False)
class PQElements:
    p_R: AlgebraElement
    q_R: AlgebraElement
    p_L: AlgebraElement
    q_L: AlgebraElement


def _raise_on_failure(report: VerificationReport) -> None:
    bad = report.failures()
    if bad:
        first = bad[0]
        raise ConsistencyFailure(first.tag, first.detail, first.lhs, first.rhs)


def compute_twist(H) -> DrinfeldTwistData:
    """gamma, delta per (gd), f per (f) and f^{-1} per (g), without checks."""
    P = H.program
    # A = (Phi (x) 1)(Delta (x) id (x) id)(Phi^{-1})
    gamma = (P().load(H.phi_inv, "y1", "y2", "y3").delta("y1", "y11", "y12")
             .load(H.phi, "X1", "X2", "X3")
             .mul("X1", "y11", out="A1").mul("X2", "y12", out="A2").mul("X3", "y2", out="A3").rename("y3", "A4")
             .S("A1").S("A2").load(H.alpha, "a").load(H.alpha, "b")
             .mul("A2", "a", "A3", out="g1").mul("A1", "b", "A4", out="g2")
             .output("g1", "g2").run())
    # B = (Delta (x) id (x) id)(Phi)(Phi^{-1} (x) 1)
    delta = (P().load(H.phi, "Y1", "Y2", "Y3").delta("Y1", "Y11", "Y12")
             .load(H.phi_inv, "x1", "x2", "x3")
             .mul("Y11", "x1", out="B1").mul("Y12", "x2", out="B2").mul("Y2", "x3", out="B3").rename("Y3", "B4")
             .S("B4").S("B3").load(H.beta, "a").load(H.beta, "b")
             .mul("B1", "a", "B4", out="d1").mul("B2", "b", "B3", out="d2")
             .output("d1", "d2").run())
    f = (P().load(H.phi_inv, "x1", "x2", "x3").delta("x1", "a", "b").S("a").S("b")
         .S("x3").load(H.beta, "be").mul("x2", "be", "x3", out="m").delta("m", "m1", "m2")
         .load(gamma, "c1", "c2")
         .mul("b", "c1", "m1", out="F1").mul("a", "c2", "m2", out="F2")
         .output("F1", "F2").run())
    f_inv = (P().load(H.phi_inv, "x1", "x2", "x3").S("x1").load(H.alpha, "al")
             .mul("x1", "al", "x2", out="m").delta("m", "m1", "m2")
             .delta("x3", "c", "d").S("c").S("d")
             .load(delta, "e1", "e2")
             .mul("m1", "e1", "d", out="G1").mul("m2", "e2", "c", out="G2")
             .output("G1", "G2").run())
    return DrinfeldTwistData(gamma=H.element(gamma), delta=H.element(delta), f=H.element(f), f_inv=H.element(f_inv))


def verify_twist(H, data: DrinfeldTwistData = None) -> VerificationReport:
    from qhopf.algebra.quasi_hopf import GaugeTwist, gauge_twist

    data = data or compute_twist(H)
    F = H.field
    P = H.program
    report = VerificationReport(subject=f"Drinfeld twist of {H.name}")
    one2 = H.one(2).coeffs
    report.add(compare(F, "f f^-1 = 1", H.mul(data.f, data.f_inv).coeffs, one2))
    report.add(compare(F, "f^-1 f = 1", H.mul(data.f_inv, data.f).coeffs, one2))

    # (ca) f Delta(S(h)) f^{-1} = (S (x) S)(Delta^op(h))
    lhs = (P().ident("h", "i").S("h").delta("h", "a", "b").load(data.f, "f1", "f2")
           .mul("f1", "a", out="l").mul("f2", "b", out="r").load(data.f_inv, "g1", "g2")
           .mul("l", "g1").mul("r", "g2").output("l", "r", "i").run())
    rhs = P().ident("h", "i").delta("h", "a", "b").S("a").S("b").output("b", "a", "i").run()
    report.add(compare(F, "(ca)", lhs, rhs, 1))

    # (gdf)
    lhs = (P().load(data.f, "f1", "f2").load(H.alpha, "a").delta("a", "a1", "a2")
           .mul("f1", "a1").mul("f2", "a2").output("f1", "f2").run())
    report.add(compare(F, "(gdf)", lhs, data.gamma.coeffs))
    lhs = (P().load(H.beta, "b").delta("b", "b1", "b2").load(data.f_inv, "g1", "g2")
           .mul("b1", "g1").mul("b2", "g2").output("b1", "b2").run())
    report.add(compare(F, "(gdf) inverse", lhs, data.delta.coeffs))

    # (l3a) g^1 S(g^2 alpha) = beta and S(beta f^1) f^2 = alpha
    lhs = (P().load(data.f_inv, "g1", "g2").load(H.alpha, "a").mul("g2", "a").S("g2")
           .mul("g1", "g2").output("g1").run())
    report.add(compare(F, "(l3a)", lhs, H.beta.coeffs))
    lhs = (P().load(data.f, "f1", "f2").load(H.beta, "b").mul("b", "f1").S("b")
           .mul("b", "f2").output("b").run())
    report.add(compare(F, "(l3a) second", lhs, H.alpha.coeffs))

    # (pf) Phi_f = (S (x) S (x) S)(X^3 (x) X^2 (x) X^1)
    Hf = gauge_twist(H, GaugeTwist(data.f, data.f_inv))
    rhs = P().load(H.phi, "X1", "X2", "X3").S("X1").S("X2").S("X3").output("X3", "X2", "X1").run()
    report.add(compare(F, "(pf)", Hf.phi.coeffs, rhs))
    return report


def drinfeld_twist(H) -> DrinfeldTwistData:
    data = compute_twist(H)
    _raise_on_failure(verify_twist(H, data))
    logger.debug(f"Drinfeld twist of {H.name} computed and verified")
    return data


def compute_pq(H) -> PQElements:
    P = H.program
    p_R = (P().load(H.phi_inv, "x1", "x2", "x3").S("x3").load(H.beta, "b")
           .mul("x2", "b", "x3", out="r").output("x1", "r").run())
    q_R = (P().load(H.phi, "X1", "X2", "X3").load(H.alpha, "a").mul("a", "X3").Sinv("a")
           .mul("a", "X2").output("X1", "a").run())
    p_L = (P().load(H.phi, "X1", "X2", "X3").load(H.beta, "b").mul("X1", "b").Sinv("X1")
           .mul("X2", "X1", out="l").output("l", "X3").run())
    q_L = (P().load(H.phi_inv, "x1", "x2", "x3").S("x1").load(H.alpha, "a")
           .mul("x1", "a", "x2", out="l").output("l", "x3").run())
    return PQElements(p_R=H.element(p_R), q_R=H.element(q_R), p_L=H.element(p_L), q_L=H.element(q_L))


def verify_pq(H, pq: PQElements = None) -> VerificationReport:
    pq = pq or compute_pq(H)
    F = H.field
    P = H.program
    report = VerificationReport(subject=f"p/q elements of {H.name}")

    # (qr1) Delta(h_1) p_R [1 (x) S(h_2)] = p_R [h (x) 1]
    lhs = (P().ident("h", "i").delta("h", "h1", "h2").S("h2").delta("h1", "a", "b")
           .load(pq.p_R, "P1", "P2").mul("a", "P1", out="l").mul("b", "P2", "h2", out="r")
           .output("l", "r", "i").run())
    rhs = P().load(pq.p_R, "P1", "P2").ident("h", "i").mul("P1", "h", out="l").output("l", "P2", "i").run()
    report.add(compare(F, "(qr1)", lhs, rhs, 1))

    # (qr1a) [1 (x) S^{-1}(h_2)] q_R Delta(h_1) = (h (x) 1) q_R
    lhs = (P().ident("h", "i").delta("h", "h1", "h2").Sinv("h2").delta("h1", "a", "b")
           .load(pq.q_R, "Q1", "Q2").mul("Q1", "a", out="l").mul("h2", "Q2", "b", out="r")
           .output("l", "r", "i").run())
    rhs = P().ident("h", "i").load(pq.q_R, "Q1", "Q2").mul("h", "Q1", out="l").output("l", "Q2", "i").run()
    report.add(compare(F, "(qr1a)", lhs, rhs, 1))

    # (ql1a) [S(h_1) (x) 1] q_L Delta(h_2) = (1 (x) h) q_L
    lhs = (P().ident("h", "i").delta("h", "h1", "h2").S("h1").delta("h2", "a", "b")
           .load(pq.q_L, "Q1", "Q2").mul("h1", "Q1", "a", out="l").mul("Q2", "b", out="r")
           .output("l", "r", "i").run())
    rhs = P().ident("h", "i").load(pq.q_L, "Q1", "Q2").mul("h", "Q2", out="r").output("Q1", "r", "i").run()
    report.add(compare(F, "(ql1a)", lhs, rhs, 1))

    one2 = H.one(2).coeffs
    # (pqr) Delta(q^1) p_R [1 (x) S(q^2)] = 1 (x) 1
    lhs = (P().load(pq.q_R, "Q1", "Q2").S("Q2").delta("Q1", "a", "b").load(pq.p_R, "P1", "P2")
           .mul("a", "P1", out="l").mul("b", "P2", "Q2", out="r").output("l", "r").run())
    report.add(compare(F, "(pqr)", lhs, one2))
    # (pql) [S(p~^1) (x) 1] q_L Delta(p~^2) = 1 (x) 1
    lhs = (P().load(pq.p_L, "P1", "P2").S("P1").delta("P2", "a", "b").load(pq.q_L, "Q1", "Q2")
           .mul("P1", "Q1", "a", out="l").mul("Q2", "b", out="r").output("l", "r").run())
    report.add(compare(F, "(pql)", lhs, one2))
    # (pqla) Delta(q~^2) p_L [S^{-1}(q~^1) (x) 1] = 1 (x) 1
    lhs = (P().load(pq.q_L, "Q1", "Q2").Sinv("Q1").delta("Q2", "a", "b").load(pq.p_L, "P1", "P2")
           .mul("a", "P1", "Q1", out="l").mul("b", "P2", out="r").output("l", "r").run())
    report.add(compare(F, "(pqla)", lhs, one2))

    # (tpr2) Phi (Delta (x) id)(p_R) (p_R (x) id)
    #        = (id (x) Delta)(Delta(x^1) p_R) (1 (x) g^1 S(x^3) (x) g^2 S(x^2))
    lhs = (P().load(pq.p_R, "P1", "P2").delta("P1", "P11", "P12").load(H.phi, "X1", "X2", "X3")
           .mul("X1", "P11", out="L1").mul("X2", "P12", out="L2").mul("X3", "P2", out="L3")
           .load(pq.p_R, "Q1", "Q2").mul("L1", "Q1").mul("L2", "Q2")
           .output("L1", "L2", "L3").run())
    rhs = (P().load(H.phi_inv, "x1", "x2", "x3").delta("x1", "a", "b").load(pq.p_R, "P1", "P2")
           .mul("a", "P1", out="L1").mul("b", "P2", out="B").delta("B", "B1", "B2")
           .S("x2").S("x3").load(H.twist.f_inv, "g1", "g2")
           .mul("B1", "g1", "x3", out="L2").mul("B2", "g2", "x2", out="L3")
           .output("L1", "L2", "L3").run())
    report.add(compare(F, "(tpr2)", lhs, rhs))
    return report


def pq_elements(H) -> PQElements:
    pq = compute_pq(H)
    _raise_on_failure(verify_pq(H, pq))
    logger.debug(f"p/q elements of {H.name} computed and verified")
    return pq
