"""Quasi-bialgebras, quasi-Hopf algebras, their variants and gauge twists."""
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from qhopf.core import linalg
from qhopf.core.fields import Field
from qhopf.core.legs import LegProgram
from qhopf.core.tensor import (AlgebraElement, compare, invert_element, map_algebra, multiply,
                               tensor_embed, unit_element)
from qhopf.utils.errors import ConsistencyFailure, DimensionMismatch, NotInvertible
from qhopf.utils.reports import VerificationReport


@dataclass(frozen=True, eq=False)
class QuasiBialgebra:
    field: Field
    basis: Tuple[str, ...]
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    phi: AlgebraElement
    phi_inv: AlgebraElement
    name: str = "H"

    def __post_init__(self):
        n = len(self.basis)
        expected = {"mult": (n, n, n), "unit": (n,), "comult": (n, n, n), "counit": (n,)}
        for attr, shape in expected.items():
            if getattr(self, attr).shape != shape:
                raise DimensionMismatch(f"{attr} has shape {getattr(self, attr).shape}, expected {shape}")
        for attr in ("phi", "phi_inv"):
            if getattr(self, attr).coeffs.shape != (n, n, n):
                raise DimensionMismatch(f"{attr} must be a 3-leg element of dimension {n}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def program(self) -> LegProgram:
        return LegProgram(self)

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self.field, np.asarray(coeffs))

    def one(self, legs: int = 1) -> AlgebraElement:
        return unit_element(self, legs)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement.basis(self.field, self.dim, i)

    def mul(self, *factors: AlgebraElement) -> AlgebraElement:
        return multiply(self, *factors)

    def embed(self, x: AlgebraElement, positions: Sequence[int], total: int) -> AlgebraElement:
        return tensor_embed(self, x, positions, total)

    def invert(self, x: AlgebraElement) -> AlgebraElement:
        return invert_element(self, x)

    def coproduct(self, x: AlgebraElement) -> AlgebraElement:
        return self.element(self.program().load(x, "h").delta("h", "a", "b").output("a", "b").run())

    def epsilon(self, x: AlgebraElement):
        return self.field.scalar(self.field.reduce(np.dot(self.counit, x.coeffs)))

    def describe(self) -> str:
        return f"{self.name} (dim {self.dim} over {self.field})"


@dataclass(frozen=True, eq=False)
class QuasiHopfAlgebra(QuasiBialgebra):
    antipode: Optional[np.ndarray] = None
    antipode_inv: Optional[np.ndarray] = None
    alpha: Optional[AlgebraElement] = None
    beta: Optional[AlgebraElement] = None

    def __post_init__(self):
        super().__post_init__()
        n = self.dim
        for attr in ("antipode", "antipode_inv"):
            if getattr(self, attr) is None or getattr(self, attr).shape != (n, n):
                raise DimensionMismatch(f"{attr} must be an {n}x{n} matrix")
        for attr in ("alpha", "beta"):
            if getattr(self, attr) is None or getattr(self, attr).coeffs.shape != (n,):
                raise DimensionMismatch(f"{attr} must be an element of H")

    def S(self, x: AlgebraElement, power: int = 1) -> AlgebraElement:
        prog = self.program().load(x, "h")
        if power >= 0:
            prog.S("h", power)
        else:
            prog.Sinv("h", -power)
        return self.element(prog.output("h").run())

    def Sinv(self, x: AlgebraElement) -> AlgebraElement:
        return self.S(x, -1)

    @cached_property
    def twist(self):
        """Drinfeld twist data (gamma, delta, f, f^{-1}), verified on first access."""
        from qhopf.algebra.twist import drinfeld_twist
        return drinfeld_twist(self)

    @cached_property
    def pq(self):
        """The elements p_R, q_R, p_L, q_L, verified on first access."""
        from qhopf.algebra.twist import pq_elements
        return pq_elements(self)

    @cached_property
    def op(self) -> "QuasiHopfAlgebra":
        """H^op, shared so that right-handed structures transported to it stay comparable."""
        return make_variant(self, "op")


@dataclass(frozen=True, eq=False)
class GaugeTwist:
    F: AlgebraElement
    F_inv: AlgebraElement


def build_quasi_hopf(field: Field, basis: Sequence[str], mult, unit, comult, counit, phi,
                     antipode, antipode_inv, alpha, beta, phi_inv=None, name: str = "H") -> QuasiHopfAlgebra:
    """Assemble a QuasiHopfAlgebra from array-like structure data.

    phi_inv is computed when omitted and cross-checked when supplied.
    """
    arr = field.array
    n = len(basis)
    partial = _Structure(field, n, arr(mult), arr(unit))
    phi_el = AlgebraElement(field, arr(phi))
    if phi_inv is None:
        try:
            phi_inv_el = invert_element(partial, phi_el)
        except NotInvertible as e:
            raise ConsistencyFailure("Phi invertible", str(e)) from None
    else:
        phi_inv_el = AlgebraElement(field, arr(phi_inv))
        one = unit_element(partial, 3)
        if not multiply(partial, phi_el, phi_inv_el).equals(one):
            raise ConsistencyFailure("Phi invertible", "supplied inverse reassociator is not an inverse")
    H = QuasiHopfAlgebra(field=field, basis=tuple(basis), mult=arr(mult), unit=arr(unit), comult=arr(comult),
                         counit=arr(counit), phi=phi_el, phi_inv=phi_inv_el, name=name,
                         antipode=arr(antipode), antipode_inv=arr(antipode_inv),
                         alpha=AlgebraElement(field, arr(alpha)), beta=AlgebraElement(field, arr(beta)))
    logger.debug(f"Built {H.describe()}")
    return H


@dataclass(frozen=True)
class _Structure:
    """Just enough of an algebra to multiply elements."""
    field: Field
    dim: int
    mult: np.ndarray
    unit: np.ndarray


# ----------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------
def verify_quasi_bialgebra(H: QuasiBialgebra) -> VerificationReport:
    """Associativity, unit, multiplicativity of Delta and epsilon, (q1)-(q4), (q7)."""
    F = H.field
    report = VerificationReport(subject=f"quasi-bialgebra {H.name}")
    P = H.program

    lhs = P().ident("a", "i").ident("b", "j").ident("c", "k").mul("a", "b").mul("a", "c") \
        .output("a", "i", "j", "k").run()
    rhs = P().ident("a", "i").ident("b", "j").ident("c", "k").mul("b", "c").mul("a", "b") \
        .output("a", "i", "j", "k").run()
    report.add(compare(F, "associativity", lhs, rhs, 3))

    eye = F.eye(H.dim)
    lhs = P().load(H.unit, "u").ident("a", "i").mul("u", "a").output("u", "i").run()
    rhs = P().ident("a", "i").load(H.unit, "u").mul("a", "u").output("a", "i").run()
    report.add(compare(F, "unit", lhs, eye, 1))
    report.add(compare(F, "unit (right)", rhs, eye, 1))

    lhs = P().ident("a", "i").ident("b", "j").mul("a", "b").delta("a", "l", "r").output("l", "r", "i", "j").run()
    rhs = P().ident("a", "i").ident("b", "j").delta("a", "a1", "a2").delta("b", "b1", "b2") \
        .mul("a1", "b1", out="l").mul("a2", "b2", out="r").output("l", "r", "i", "j").run()
    report.add(compare(F, "Delta multiplicative", lhs, rhs, 2))
    report.add(compare(F, "Delta unital", P().load(H.unit, "u").delta("u", "l", "r").output("l", "r").run(),
                       H.one(2).coeffs))

    lhs = P().ident("a", "i").ident("b", "j").mul("a", "b").eps("a").output("i", "j").run()
    rhs = F.reduce(np.multiply.outer(H.counit, H.counit))
    report.add(compare(F, "epsilon multiplicative", lhs, rhs))
    report.add(compare(F, "epsilon unital", F.array(F.reduce(np.dot(H.counit, H.unit))), F.array(1)))

    one3 = H.one(3)
    report.add(compare(F, "Phi invertible", H.mul(H.phi, H.phi_inv).coeffs, one3.coeffs))
    report.add(compare(F, "Phi invertible (left)", H.mul(H.phi_inv, H.phi).coeffs, one3.coeffs))

    # (q1) (id (x) Delta)Delta(h) = Phi (Delta (x) id)Delta(h) Phi^{-1}
    lhs = P().ident("h", "i").delta("h", "a", "b").delta("b", "b1", "b2").output("a", "b1", "b2", "i").run()
    rhs = (P().ident("h", "i").delta("h", "a", "b").delta("a", "a1", "a2")
           .load(H.phi, "X1", "X2", "X3").mul("X1", "a1", out="l1").mul("X2", "a2", out="l2")
           .mul("X3", "b", out="l3")
           .load(H.phi_inv, "x1", "x2", "x3").mul("l1", "x1").mul("l2", "x2").mul("l3", "x3")
           .output("l1", "l2", "l3", "i").run())
    report.add(compare(F, "(q1)", lhs, rhs, 1))

    # (q2)
    report.add(compare(F, "(q2)", P().ident("h", "i").delta("h", "a", "b").eps("b").output("a", "i").run(), eye, 1))
    report.add(compare(F, "(q2) left", P().ident("h", "i").delta("h", "a", "b").eps("a").output("b", "i").run(),
                       eye, 1))

    # (q3) (1 (x) Phi)(id (x) Delta (x) id)(Phi)(Phi (x) 1) = (id (x) id (x) Delta)(Phi)(Delta (x) id (x) id)(Phi)
    lhs = (P().load(H.phi, "Y1", "Y2", "Y3").delta("Y2", "Y21", "Y22")
           .load(H.phi, "Z1", "Z2", "Z3").mul("Z1", "Y21", out="L2").mul("Z2", "Y22", out="L3")
           .mul("Z3", "Y3", out="L4")
           .load(H.phi, "W1", "W2", "W3").mul("Y1", "W1", out="L1").mul("L2", "W2").mul("L3", "W3")
           .output("L1", "L2", "L3", "L4").run())
    rhs = (P().load(H.phi, "A1", "A2", "A3").delta("A3", "A31", "A32")
           .load(H.phi, "B1", "B2", "B3").mul("A31", "B2", out="L3").mul("A32", "B3", out="L4")
           .delta("B1", "B11", "B12").mul("A1", "B11", out="L1").mul("A2", "B12", out="L2")
           .output("L1", "L2", "L3", "L4").run())
    report.add(compare(F, "(q3)", lhs, rhs))

    one2 = H.one(2).coeffs
    report.add(compare(F, "(q4)", P().load(H.phi, "a", "b", "c").eps("b").output("a", "c").run(), one2))
    report.add(compare(F, "(q7)", P().load(H.phi, "a", "b", "c").eps("a").output("b", "c").run(), one2))
    report.add(compare(F, "(q7) right", P().load(H.phi, "a", "b", "c").eps("c").output("a", "b").run(), one2))
    _log_report(report)
    return report


def verify_antipode(H: QuasiHopfAlgebra) -> VerificationReport:
    """(q5), (q6), eps(alpha)eps(beta) = 1, eps o S = eps, S anti-multiplicative, S S^{-1} = id."""
    F = H.field
    report = VerificationReport(subject=f"antipode of {H.name}")
    P = H.program

    eps_alpha = P().ident("h", "i").eps("h").load(H.alpha, "a").output("a", "i").run()
    eps_beta = P().ident("h", "i").eps("h").load(H.beta, "a").output("a", "i").run()
    lhs = (P().ident("h", "i").delta("h", "h1", "h2").S("h1").load(H.alpha, "a")
           .mul("h1", "a", "h2", out="r").output("r", "i").run())
    report.add(compare(F, "(q5)", lhs, eps_alpha, 1))
    lhs = (P().ident("h", "i").delta("h", "h1", "h2").S("h2").load(H.beta, "b")
           .mul("h1", "b", "h2", out="r").output("r", "i").run())
    report.add(compare(F, "(q5) beta", lhs, eps_beta, 1))

    one = H.unit
    lhs = (P().load(H.phi, "X1", "X2", "X3").S("X2").load(H.beta, "b").load(H.alpha, "a")
           .mul("X1", "b", "X2", "a", "X3", out="r").output("r").run())
    report.add(compare(F, "(q6)", lhs, one))
    lhs = (P().load(H.phi_inv, "x1", "x2", "x3").S("x1").S("x3").load(H.alpha, "a").load(H.beta, "b")
           .mul("x1", "a", "x2", "b", "x3", out="r").output("r").run())
    report.add(compare(F, "(q6) inverse", lhs, one))

    value = F.scalar(H.epsilon(H.alpha) * H.epsilon(H.beta))
    report.record("eps(alpha)eps(beta)=1", value == F.one, "" if value == F.one else f"product is {F.format(value)}")
    report.add(compare(F, "eps o S = eps", linalg.matmul(F, H.counit, H.antipode), H.counit))
    anti = map_algebra(F, H, H, H.antipode, anti=True, subject="S")
    for r in anti.results:
        report.record(f"S {r.tag}", r.passed, r.detail, r.lhs, r.rhs)
    eye = F.eye(H.dim)
    report.add(compare(F, "S S^-1 = id", linalg.matmul(F, H.antipode, H.antipode_inv), eye))
    report.add(compare(F, "S^-1 S = id", linalg.matmul(F, H.antipode_inv, H.antipode), eye))
    _log_report(report)
    return report


def _log_report(report: VerificationReport) -> None:
    for r in report.failures():
        logger.warning(f"{report.subject}: {r.line()}")
    logger.debug(f"{report.subject}: {len(report.results)} identities checked, {len(report.failures())} failed")


# ----------------------------------------------------------------------
# variants, normalization and gauge twists
# ----------------------------------------------------------------------
def make_variant(H: QuasiHopfAlgebra, which: str) -> QuasiHopfAlgebra:
    """H^op, H^cop or H^{op,cop}."""
    which = which.replace("-", "_").replace(",", "_")
    Sinv = H.Sinv
    if which == "op":
        return replace(H, name=f"{H.name}^op", mult=np.transpose(H.mult, (1, 0, 2)).copy(),
                       phi=H.phi_inv, phi_inv=H.phi, antipode=H.antipode_inv, antipode_inv=H.antipode,
                       alpha=Sinv(H.beta), beta=Sinv(H.alpha))
    if which == "cop":
        return replace(H, name=f"{H.name}^cop", comult=np.transpose(H.comult, (0, 2, 1)).copy(),
                       phi=H.phi_inv.permute([2, 1, 0]), phi_inv=H.phi.permute([2, 1, 0]),
                       antipode=H.antipode_inv, antipode_inv=H.antipode,
                       alpha=Sinv(H.alpha), beta=Sinv(H.beta))
    if which == "op_cop":
        return replace(H, name=f"{H.name}^op,cop", mult=np.transpose(H.mult, (1, 0, 2)).copy(),
                       comult=np.transpose(H.comult, (0, 2, 1)).copy(),
                       phi=H.phi.permute([2, 1, 0]), phi_inv=H.phi_inv.permute([2, 1, 0]),
                       alpha=H.beta, beta=H.alpha)
    raise ValueError(f"unknown variant '{which}' (expected op, cop or op_cop)")


def normalize(H: QuasiHopfAlgebra) -> QuasiHopfAlgebra:
    """Rescale alpha and beta so that eps(alpha) = eps(beta) = 1."""
    F = H.field
    ea = H.epsilon(H.alpha)
    if ea == F.one:
        return H
    return replace(H, alpha=H.alpha.scale(F.inv(ea)), beta=H.beta.scale(ea))


def make_gauge(H: QuasiBialgebra, F_el: AlgebraElement, F_inv: Optional[AlgebraElement] = None) -> GaugeTwist:
    """Validate a gauge transformation: counital and invertible."""
    one = H.unit
    P = H.program
    for tag, out in (("(eps (x) id)(F)", "b"), ("(id (x) eps)(F)", "a")):
        other = "a" if out == "b" else "b"
        val = P().load(F_el, "a", "b").eps(other).output(out).run()
        if not H.field.equal(val, one):
            raise ConsistencyFailure("gauge counit", f"{tag} = {H.field.format_array(val)} is not 1")
    if F_inv is None:
        F_inv = H.invert(F_el)
    elif not H.mul(F_el, F_inv).equals(H.one(2)):
        raise NotInvertible("supplied inverse twist is not an inverse")
    return GaugeTwist(F_el, F_inv)


def gauge_twist(H: QuasiHopfAlgebra, twist) -> QuasiHopfAlgebra:
    """H_F: twisted comultiplication (g1), reassociator (g2), alpha and beta (g3)."""
    if not isinstance(twist, GaugeTwist):
        twist = make_gauge(H, twist)
    Fe, G = twist.F, twist.F_inv
    P = H.program

    comult = (P().ident("h", "i").delta("h", "a", "b").load(Fe, "F1", "F2").mul("F1", "a", out="l")
              .mul("F2", "b", out="r").load(G, "G1", "G2").mul("l", "G1").mul("r", "G2")
              .output("i", "l", "r").run())

    phi = (P().load(Fe, "P1", "P2").load(Fe, "Q1", "Q2").delta("Q2", "Q21", "Q22")
           .mul("P1", "Q21", out="L2").mul("P2", "Q22", out="L3").rename("Q1", "L1")
           .load(H.phi, "X1", "X2", "X3").mul("L1", "X1").mul("L2", "X2").mul("L3", "X3")
           .load(G, "U1", "U2").delta("U1", "U11", "U12").mul("L1", "U11").mul("L2", "U12").mul("L3", "U2")
           .load(G, "V1", "V2").mul("L1", "V1").mul("L2", "V2")
           .output("L1", "L2", "L3").run())
    phi_inv = (P().load(Fe, "P1", "P2").load(Fe, "Q1", "Q2").delta("Q1", "Q11", "Q12")
               .mul("P1", "Q11", out="L1").mul("P2", "Q12", out="L2").rename("Q2", "L3")
               .load(H.phi_inv, "x1", "x2", "x3").mul("L1", "x1").mul("L2", "x2").mul("L3", "x3")
               .load(G, "U1", "U2").delta("U2", "U21", "U22").mul("L1", "U1").mul("L2", "U21").mul("L3", "U22")
               .load(G, "V1", "V2").mul("L2", "V1").mul("L3", "V2")
               .output("L1", "L2", "L3").run())

    alpha = P().load(G, "G1", "G2").S("G1").load(H.alpha, "a").mul("G1", "a", "G2", out="r").output("r").run()
    beta = P().load(Fe, "F1", "F2").S("F2").load(H.beta, "b").mul("F1", "b", "F2", out="r").output("r").run()

    HF = replace(H, name=f"{H.name}_F", comult=comult, phi=H.element(phi), phi_inv=H.element(phi_inv),
                 alpha=H.element(alpha), beta=H.element(beta))
    if not HF.mul(HF.phi, HF.phi_inv).equals(H.one(3)):
        raise ConsistencyFailure("(g2)", "twisted reassociator and its closed-form inverse disagree")
    logger.debug(f"Twisted {H.name} by a gauge transformation")
    return HF


def inverse_gauge(twist: GaugeTwist) -> GaugeTwist:
    return GaugeTwist(twist.F_inv, twist.F)


def random_gauge(H: QuasiBialgebra, rng: np.random.Generator, attempts: int = 20) -> GaugeTwist:
    """A random counital invertible F = 1 (x) 1 + sum c_ij v_i (x) v_j with eps(v_i) = 0."""
    F = H.field
    n = H.dim
    # v_i = e_i - eps(e_i) 1
    V = F.reduce(F.eye(n) - np.multiply.outer(H.counit, H.unit))
    for _ in range(attempts):
        C = F.random(rng, (n, n))
        cand = F.reduce(np.multiply.outer(H.unit, H.unit) + V.T.dot(C).dot(V))
        try:
            return make_gauge(H, AlgebraElement(F, cand))
        except NotInvertible:
            continue
    raise NotInvertible(f"no invertible random gauge found after {attempts} attempts")
