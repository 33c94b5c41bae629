"""R-matrices: verification, the inverse of R and the element u."""
from dataclasses import dataclass
from functools import cached_property

from loguru import logger

from qhopf.algebra.quasi_hopf import QuasiHopfAlgebra
from qhopf.core.tensor import AlgebraElement, compare
from qhopf.utils.errors import ConsistencyFailure, NotInvertible, NotQT
from qhopf.utils.reports import VerificationReport


@dataclass(frozen=True, eq=False)
class QTStructure:
    H: QuasiHopfAlgebra
    R: AlgebraElement
    R_inv: AlgebraElement
    u: AlgebraElement
    u_inv: AlgebraElement

    @cached_property
    def triangular(self) -> bool:
        return self.R_inv.equals(self.R.flip())

    def reverse(self) -> "QTStructure":
        """The R-matrix (R^{-1})_{21}."""
        return make_qt(self.H, self.R_inv.flip())


def verify_qt(H: QuasiHopfAlgebra, R: AlgebraElement) -> VerificationReport:
    """(qt1)-(qt4), plus the quasi-Yang-Baxter equation and invertibility of R."""
    F = H.field
    P = H.program
    E = H.embed
    report = VerificationReport(subject=f"R-matrix of {H.name}")

    lhs = P().load(R, "r1", "r2").delta("r1", "a", "b").output("a", "b", "r2").run()
    rhs = H.mul(E(H.phi, [3, 1, 2], 3), E(R, [1, 3], 3), E(H.phi_inv, [1, 3, 2], 3), E(R, [2, 3], 3), H.phi)
    report.add(compare(F, "(qt1)", lhs, rhs.coeffs))

    lhs = P().load(R, "r1", "r2").delta("r2", "a", "b").output("r1", "a", "b").run()
    rhs = H.mul(E(H.phi_inv, [2, 3, 1], 3), E(R, [1, 3], 3), E(H.phi, [2, 1, 3], 3), E(R, [1, 2], 3), H.phi_inv)
    report.add(compare(F, "(qt2)", lhs, rhs.coeffs))

    lhs = (P().ident("h", "i").delta("h", "a", "b").load(R, "r1", "r2")
           .mul("b", "r1", out="l").mul("a", "r2", out="r").output("l", "r", "i").run())
    rhs = (P().ident("h", "i").delta("h", "a", "b").load(R, "r1", "r2")
           .mul("r1", "a", out="l").mul("r2", "b", out="r").output("l", "r", "i").run())
    report.add(compare(F, "(qt3)", lhs, rhs, 1))

    report.add(compare(F, "(qt4)", P().load(R, "a", "b").eps("a").output("b").run(), H.unit))
    report.add(compare(F, "(qt4) right", P().load(R, "a", "b").eps("b").output("a").run(), H.unit))

    # R12 Phi312 R13 Phi^-1_132 R23 Phi = Phi321 R23 Phi^-1_231 R13 Phi213 R12
    lhs = H.mul(E(R, [1, 2], 3), E(H.phi, [3, 1, 2], 3), E(R, [1, 3], 3), E(H.phi_inv, [1, 3, 2], 3),
                E(R, [2, 3], 3), H.phi)
    rhs = H.mul(E(H.phi, [3, 2, 1], 3), E(R, [2, 3], 3), E(H.phi_inv, [2, 3, 1], 3), E(R, [1, 3], 3),
                E(H.phi, [2, 1, 3], 3), E(R, [1, 2], 3))
    report.add(compare(F, "quasi-Yang-Baxter", lhs.coeffs, rhs.coeffs))

    try:
        H.invert(R)
        report.record("R invertible", True)
    except NotInvertible as e:
        report.record("R invertible", False, str(e))
    for r in report.failures():
        logger.warning(f"{report.subject}: {r.line()}")
    return report


def r_inverse_invr1(H: QuasiHopfAlgebra, R: AlgebraElement) -> AlgebraElement:
    """X^1 beta S(Y^2 R^1 x^1 X^2) alpha Y^3 x^3 X^3_2 (x) Y^1 R^2 x^2 X^3_1"""
    out = (H.program().load(H.phi, "X1", "X2", "X3").delta("X3", "X31", "X32")
           .load(H.phi_inv, "x1", "x2", "x3").S("X2").S("x1").mul("X2", "x1", out="s")
           .mul("x3", "X32", out="t").mul("x2", "X31", out="w")
           .load(R, "R1", "R2").S("R1").mul("s", "R1").mul("R2", "w", out="w")
           .load(H.phi, "Y1", "Y2", "Y3").S("Y2").mul("s", "Y2").mul("Y3", "t", out="t").mul("Y1", "w", out="w")
           .load(H.beta, "b").load(H.alpha, "a").mul("X1", "b", "s", "a", "t", out="l")
           .output("l", "w").run())
    return H.element(out)


def r_inverse_invr2(H: QuasiHopfAlgebra, R: AlgebraElement) -> AlgebraElement:
    """q~^2_1 X^2 R^1 p^1 (x) q~^2_2 X^3 S^{-1}(q~^1 X^1 R^2 p^2)"""
    pq = H.pq
    out = (H.program().load(pq.q_L, "Q1", "Q2").delta("Q2", "Q21", "Q22")
           .load(H.phi, "X1", "X2", "X3").mul("Q21", "X2", out="A").mul("Q22", "X3", out="B")
           .mul("Q1", "X1", out="c")
           .load(R, "R1", "R2").mul("A", "R1").mul("c", "R2")
           .load(pq.p_R, "P1", "P2").mul("A", "P1").mul("c", "P2").Sinv("c").mul("B", "c")
           .output("A", "B").run())
    return H.element(out)


def r_inverse(H: QuasiHopfAlgebra, R: AlgebraElement) -> AlgebraElement:
    """R^{-1} by (invr1), (invr2) and a linear solve, which must agree."""
    via_solve = H.invert(R)
    for tag, candidate in (("(invr1)", r_inverse_invr1(H, R)), ("(invr2)", r_inverse_invr2(H, R))):
        if not candidate.equals(via_solve):
            raise ConsistencyFailure(tag, "closed-form inverse of R disagrees with the linear solve",
                                     H.field.format_array(candidate.coeffs), H.field.format_array(via_solve.coeffs))
    return via_solve


def u_elements(H: QuasiHopfAlgebra, R: AlgebraElement):
    """u per (elmu) and u^{-1} per (inelmu)."""
    pq = H.pq
    u = (H.program().load(R, "R1", "R2").load(pq.p_R, "P1", "P2").mul("R2", "P2", out="m").S("m")
         .load(H.alpha, "a").mul("m", "a", "R1", "P1", out="u").output("u").run())
    u_inv = (H.program().load(H.phi, "X1", "X2", "X3").load(R, "R1", "R2").load(pq.p_R, "P1", "P2")
             .mul("X1", "R2", "P2", out="l").mul("X2", "R1", "P1", out="m").S("m")
             .load(H.alpha, "a").mul("m", "a", "X3").S("m").mul("l", "m").output("l").run())
    return H.element(u), H.element(u_inv)


def verify_u(H: QuasiHopfAlgebra, R: AlgebraElement, u: AlgebraElement, u_inv: AlgebraElement) -> VerificationReport:
    F = H.field
    P = H.program
    report = VerificationReport(subject=f"u element of {H.name}")
    report.add(compare(F, "u u^-1 = 1", H.mul(u, u_inv).coeffs, H.unit))
    report.add(compare(F, "u^-1 u = 1", H.mul(u_inv, u).coeffs, H.unit))
    eu = H.epsilon(u)
    report.record("eps(u)=1", eu == F.one, "" if eu == F.one else f"eps(u) = {F.format(eu)}")
    report.add(compare(F, "S^2(u)=u", H.S(u, 2).coeffs, u.coeffs))

    lhs = P().ident("h", "i").S("h", 2).output("h", "i").run()
    rhs = P().load(u, "u").ident("h", "i").load(u_inv, "v").mul("u", "h", "v", out="r").output("r", "i").run()
    report.add(compare(F, "(sqina)", lhs, rhs, 1))

    lhs = P().load(R, "R1", "R2").S("R2").load(H.alpha, "a").mul("R2", "a", "R1", out="r").output("r").run()
    report.add(compare(F, "(sext)", lhs, H.mul(H.S(H.alpha), u).coeffs))

    tw = H.twist
    lhs = H.mul(tw.f.flip(), R, tw.f_inv)
    rhs = P().load(R, "a", "b").S("a").S("b").output("a", "b").run()
    report.add(compare(F, "(ext)", lhs.coeffs, rhs))
    return report


def u_element(H: QuasiHopfAlgebra, R: AlgebraElement):
    u, u_inv = u_elements(H, R)
    report = verify_u(H, R, u, u_inv)
    if not report.passed:
        bad = report.failures()[0]
        raise ConsistencyFailure(bad.tag, bad.detail, bad.lhs, bad.rhs)
    return u, u_inv


def make_qt(H: QuasiHopfAlgebra, R: AlgebraElement) -> QTStructure:
    """Verify R and build the cached QT data (R^{-1}, u, u^{-1})."""
    report = verify_qt(H, R)
    if not report.passed:
        raise NotQT(f"{H.name}: R fails {', '.join(r.tag for r in report.failures())}")
    R_inv = r_inverse(H, R)
    u, u_inv = u_element(H, R)
    logger.debug(f"Quasitriangular structure on {H.name} verified")
    return QTStructure(H=H, R=R, R_inv=R_inv, u=u, u_inv=u_inv)


def is_triangular(H: QuasiHopfAlgebra, R: AlgebraElement) -> bool:
    return r_inverse(H, R).equals(R.flip())
