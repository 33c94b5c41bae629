"""Hopf algebras inside the LL Yetter-Drinfeld category.

Structure maps are LinearMaps between the coordinate spaces of tensor powers
of the carrier; the unit object is the one-dimensional space k. With
``mirror`` set the algebra lives in the same monoidal category with the
mirror-reversed braiding c~_{M,N} = c^{-1}_{N,M}.
"""
from dataclasses import dataclass, replace
from typing import Optional

from loguru import logger

from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import compare
from qhopf.categories.canonical import (raise_on_failure, sigma_star_closed_form, sigma_star_inverse_closed_form,
                                        sigma_star_iso, star_sigma_closed_form, star_sigma_inverse_closed_form,
                                        star_sigma_iso)
from qhopf.categories.yd import (YDModule, YDMorphism, trivial_yd, verify_yd, verify_yd_morphism,
                                 yd_associator_map, yd_braiding_inverse_map, yd_braiding_map, yd_tensor)
from qhopf.categories.yd_rigid import DUAL_SIDES, identity, yd_dual
from qhopf.utils.errors import ConsistencyFailure, FlavorMismatch, MissingPrerequisite
from qhopf.utils.reports import VerificationReport

VARIANTS = ("op", "cop", "opcop")


@dataclass(frozen=True, eq=False)
class BraidedHopfAlgebra:
    carrier: YDModule
    mult: LinearMap
    unit: LinearMap
    comult: LinearMap
    counit: LinearMap
    antipode: LinearMap
    antipode_inv: Optional[LinearMap] = None
    mirror: bool = False
    name: str = "B"

    def __post_init__(self):
        if self.carrier.flavor != "LL":
            raise FlavorMismatch(f"braided Hopf algebras live on LL modules, got {self.carrier.flavor}")

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def H(self):
        return self.carrier.H

    def braiding(self) -> LinearMap:
        """c_{B,B} in the category the algebra lives in."""
        B = self.carrier
        return yd_braiding_inverse_map(B, B) if self.mirror else yd_braiding_map(B, B)

    def braiding_inverse(self) -> LinearMap:
        B = self.carrier
        return yd_braiding_map(B, B) if self.mirror else yd_braiding_inverse_map(B, B)

    def __repr__(self) -> str:
        return f"BraidedHopfAlgebra({self.name}, dim {self.dim}{', mirror' if self.mirror else ''})"


def _structure_map(report: VerificationReport, src: YDModule, dst: YDModule, f: LinearMap,
                   action_tag: str, coaction_tag: str) -> None:
    action, coaction = verify_yd_morphism(YDMorphism(src, dst, f)).results
    action.tag, coaction.tag = action_tag, coaction_tag
    report.add(action).add(coaction)


def tensor_multiplication(B: BraidedHopfAlgebra) -> LinearMap:
    """m_{B (x) B} = (m (x) m) a^{-1} (B (x) a) (B (x) (c (x) B)) (B (x) a^{-1}) a."""
    C = B.carrier
    CC = yd_tensor(C, C)
    i = identity(C)
    return (B.mult.tensor(B.mult) @ yd_associator_map(C, C, CC, inverse=True)
            @ i.tensor(yd_associator_map(C, C, C)) @ i.tensor(B.braiding().tensor(i))
            @ i.tensor(yd_associator_map(C, C, C, inverse=True)) @ yd_associator_map(C, C, CC))


def verify_braided_hopf(B: BraidedHopfAlgebra) -> VerificationReport:
    """Every algebra, coalgebra, bialgebra and antipode axiom as an exact matrix identity."""
    F = B.field
    C = B.carrier
    k = trivial_yd(C.H)
    CC = yd_tensor(C, C)
    i = identity(C)
    m, eta, delta, eps, S = B.mult, B.unit, B.comult, B.counit, B.antipode
    report = VerificationReport(subject=f"braided Hopf algebra {B.name}")
    report.merge(verify_yd(C))

    report.add(compare(F, "(mal) associativity", (m @ m.tensor(i)).matrix,
                       (m @ i.tensor(m) @ yd_associator_map(C, C, C)).matrix))
    report.add(compare(F, "left unit", (m @ eta.tensor(i)).matrix, i.matrix))
    report.add(compare(F, "right unit", (m @ i.tensor(eta)).matrix, i.matrix))
    _structure_map(report, CC, C, m, "(mal) h . (ab)", "(qca1)")
    _structure_map(report, k, C, eta, "(mal) h . 1", "(qca2)")

    report.add(compare(F, "(mc1)", (yd_associator_map(C, C, C) @ delta.tensor(i) @ delta).matrix,
                       (i.tensor(delta) @ delta).matrix))
    report.add(compare(F, "left counit", (eps.tensor(i) @ delta).matrix, i.matrix))
    report.add(compare(F, "right counit", (i.tensor(eps) @ delta).matrix, i.matrix))
    _structure_map(report, C, CC, delta, "(mc2) comultiplication", "(qcc1)")
    _structure_map(report, C, k, eps, "(mc2) counit", "(qcc2)")

    report.add(compare(F, "(by)", (delta @ m).matrix, (tensor_multiplication(B) @ delta.tensor(delta)).matrix))
    report.add(compare(F, "comultiplication unital", (delta @ eta).matrix, eta.tensor(eta).matrix))
    report.add(compare(F, "counit multiplicative", (eps @ m).matrix, eps.tensor(eps).matrix))
    report.add(compare(F, "counit unital", (eps @ eta).matrix, F.eye(1)))

    unit_counit = (eta @ eps).matrix
    report.add(compare(F, "antipode S(b_1) b_2", (m @ S.tensor(i) @ delta).matrix, unit_counit))
    report.add(compare(F, "antipode b_1 S(b_2)", (m @ i.tensor(S) @ delta).matrix, unit_counit))
    _structure_map(report, C, C, S, "antipode H-linear", "antipode colinear")
    if B.antipode_inv is not None:
        report.add(compare(F, "antipode inverse", (S @ B.antipode_inv).matrix, i.matrix))
    for r in report.failures():
        logger.warning(f"{report.subject}: {r.line()}")
    return report


def braided_variant(B: BraidedHopfAlgebra, which: str) -> BraidedHopfAlgebra:
    """(bop), (bcop) and the op,cop variant; op and cop move to the mirror category."""
    if which not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got '{which}'")
    if B.antipode_inv is None and which != "opcop":
        raise MissingPrerequisite(f"{which} of {B.name} needs a bijective antipode")
    c_inv = B.braiding_inverse()
    if which == "op":
        return replace(B, mult=B.mult @ c_inv, antipode=B.antipode_inv, antipode_inv=B.antipode,
                       mirror=not B.mirror, name=f"{B.name}^op")
    if which == "cop":
        return replace(B, comult=c_inv @ B.comult, antipode=B.antipode_inv, antipode_inv=B.antipode,
                       mirror=not B.mirror, name=f"{B.name}^cop")
    return replace(B, mult=B.mult @ B.braiding(), comult=c_inv @ B.comult, name=f"{B.name}^op,cop")


def braided_dual(B: BraidedHopfAlgebra, side: str = "left_dual") -> BraidedHopfAlgebra:
    """B* (left_dual) or *B (right_dual): built from the categorical sigma composites and from
    the closed formulas, which must agree entrywise."""
    if B.mirror:
        raise FlavorMismatch("duals are built in the category with braiding c")
    if side not in DUAL_SIDES:
        raise ValueError(f"side must be one of {DUAL_SIDES}, got '{side}'")
    F = B.field
    C = B.carrier
    dual = yd_dual(C, side).dual
    if side == "left_dual":
        sigma = sigma_star_iso(C, C).map.map
        closed = LinearMap(F, sigma_star_closed_form(C, C))
        closed_inv = LinearMap(F, sigma_star_inverse_closed_form(C, C))
        tags, name = ("(mbra)", "(combra)"), f"{B.name}*"
    else:
        sigma = star_sigma_iso(C, C).map.map
        closed = LinearMap(F, star_sigma_closed_form(C, C))
        closed_inv = LinearMap(F, star_sigma_inverse_closed_form(C, C))
        tags, name = ("*B multiplication", "*B comultiplication"), f"*{B.name}"

    mult = B.comult.transpose() @ sigma
    comult = sigma.inverse() @ B.mult.transpose()
    report = VerificationReport(subject=f"{side} of {B.name}")
    report.add(compare(F, tags[0], mult.matrix, (B.comult.transpose() @ closed).matrix))
    report.add(compare(F, tags[1], comult.matrix, (closed_inv @ B.mult.transpose()).matrix))
    raise_on_failure(report)
    antipode_inv = B.antipode_inv.transpose() if B.antipode_inv is not None else None
    logger.debug(f"{name} built (dim {dual.dim})")
    return BraidedHopfAlgebra(dual, mult, B.counit.transpose(), comult, B.unit.transpose(),
                              B.antipode.transpose(), antipode_inv, name=name)


def verify_braided_morphism(f: LinearMap, A: BraidedHopfAlgebra, B: BraidedHopfAlgebra,
                            label: str) -> VerificationReport:
    """f: A -> B as a morphism of Hopf algebras in the Yetter-Drinfeld category."""
    F = A.field
    report = VerificationReport(subject=f"{label}: {A.name} -> {B.name}")
    _structure_map(report, A.carrier, B.carrier, f, f"{label} H-linear", f"{label} colinear")
    report.add(compare(F, f"{label} multiplicative", (f @ A.mult).matrix, (B.mult @ f.tensor(f)).matrix))
    report.add(compare(F, f"{label} unital", (f @ A.unit).matrix, B.unit.matrix))
    report.add(compare(F, f"{label} comultiplicative", (f.tensor(f) @ A.comult).matrix, (B.comult @ f).matrix))
    report.add(compare(F, f"{label} counital", (B.counit @ f).matrix, A.counit.matrix))
    report.add(compare(F, f"{label} antipode", (f @ A.antipode).matrix, (B.antipode @ f).matrix))
    return report


def require_braided_hopf(B: BraidedHopfAlgebra) -> BraidedHopfAlgebra:
    report = verify_braided_hopf(B)
    if not report.passed:
        bad = report.failures()[0]
        raise ConsistencyFailure(bad.tag, f"{B.name} is not a Hopf algebra in YD: {bad.detail}", bad.lhs, bad.rhs)
    return B
