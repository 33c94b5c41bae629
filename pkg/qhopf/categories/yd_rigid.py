"""Left and right duals of finite-dimensional LL Yetter-Drinfeld modules.

Duals live on the coordinate dual of the stored basis, so a functional is the
vector of its values on the basis. Evaluation and coevaluation are those of
the underlying H-modules; only the coaction is new.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from loguru import logger

from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import compare
from qhopf.categories.hmod import (SNAKE_TAGS, DualData, dual_module, functional_intertwines, vector_intertwines,
                                   zigzag_matrix)
from qhopf.categories.yd import YDModule, YDMorphism, tensor_ll_program, verify_yd
from qhopf.utils.errors import ConsistencyFailure, FlavorMismatch, NotInYD
from qhopf.utils.reports import VerificationReport

DUAL_SIDES = ("left_dual", "right_dual")


@dataclass(frozen=True, eq=False)
class YDDualData:
    """M* (side="left_dual", ev: M* (x) M -> k, coev: k -> M (x) M*) or
    *M (side="right_dual", ev': M (x) *M -> k, coev': k -> *M (x) M)."""

    dual: YDModule
    ev: LinearMap
    coev: LinearMap
    side: str
    report: VerificationReport


def q_l_relations(H) -> VerificationReport:
    """(fo1) and (fo2)."""
    F = H.field
    P = H.program
    pq = H.pq
    report = VerificationReport(subject=f"q_L and f relations of {H.name}")
    lhs = (P().load(pq.q_L, "Q1", "Q2").delta("Q2", "A", "B").load(H.phi, "X1", "X2", "X3")
           .mul("Q1", "X1", out="L1").mul("A", "X2", out="L2").mul("B", "X3", out="L3")
           .output("L1", "L2", "L3").run())
    rhs = (P().load(H.phi_inv, "x1", "x2", "x3").S("x1").delta("x2", "a", "b").load(pq.q_L, "Q1", "Q2")
           .mul("x1", "Q1", "a", out="L1").mul("Q2", "b", out="L2").rename("x3", "L3")
           .output("L1", "L2", "L3").run())
    report.add(compare(F, "(fo1)", lhs, rhs))
    lhs = (P().load(pq.p_R, "P1", "P2").S("P1").delta("P2", "a", "b").load(pq.q_L, "q1", "q2")
           .mul("P1", "q1", "a", out="L").mul("q2", "b", out="R")
           .load(pq.q_L, "Q1", "Q2").S("Q2").delta("Q2", "c", "d")
           .mul("L", "c", out="L").mul("Q1", "R", "d", out="R").output("L", "R").run())
    report.add(compare(F, "(fo2)", lhs, H.twist.f.coeffs))
    for r in report.failures():
        logger.warning(f"{report.subject}: {r.line()}")
    return report


lemma31 = q_l_relations


# ----------------------------------------------------------------------
# duals
# ----------------------------------------------------------------------
def left_dual_coaction(M: YDModule) -> np.ndarray:
    """(rdy2): <m*, f^2 . (g^1 . m_i)_{(0)}> S^{-1}(f^1 (g^1 . m_i)_{(-1)} g^2) (x) m^i."""
    H = M.H
    tw = H.twist
    return (H.program().ident("m", "mi", M.dim).load(tw.f_inv, "g1", "g2").act("g1", "m", M.action)
            .coact("m", "c", M.coaction).load(tw.f, "F1", "F2").mul("F1", "c", "g2", out="t").Sinv("t")
            .act("F2", "m", M.action).output("t", "mi", "m").run())


def right_dual_coaction(M: YDModule) -> np.ndarray:
    """(ldy2): <*m, S^{-1}(f^1) . (S^{-1}(g^2) . m_i)_{(0)}> g^1 S((S^{-1}(g^2) . m_i)_{(-1)}) f^2 (x) m^i."""
    H = M.H
    tw = H.twist
    return (H.program().ident("m", "mi", M.dim).load(tw.f_inv, "g1", "g2").Sinv("g2").act("g2", "m", M.action)
            .coact("m", "c", M.coaction).S("c").load(tw.f, "F1", "F2").mul("g1", "c", "F2", out="t")
            .Sinv("F1").act("F1", "m", M.action).output("t", "mi", "m").run())


def yd_dual(M: YDModule, side: str = "left_dual") -> YDDualData:
    """M* or *M in the LL category, with the H-module ev/coev checked as YD morphisms."""
    if M.flavor != "LL":
        raise FlavorMismatch(f"duals are built for LL modules, got {M.flavor}")
    if side not in DUAL_SIDES:
        raise ValueError(f"side must be one of {DUAL_SIDES}, got '{side}'")
    base = dual_module(M.module, side)
    coaction = left_dual_coaction(M) if side == "left_dual" else right_dual_coaction(M)
    dual = YDModule("LL", base.dual, coaction)
    report = VerificationReport(subject=f"{side} of {M.name} in YD")
    report.merge(verify_yd(dual))
    report.merge(base.report)
    if report.passed:
        report.merge(check_yd_snakes(M, dual, base.ev, base.coev, side))
    if not report.passed:
        raise NotInYD("LL", [r.tag for r in report.failures()])
    logger.debug(f"{side} of {M.name} built (dim {dual.dim})")
    return YDDualData(dual=dual, ev=base.ev, coev=base.coev, side=side, report=report)


def check_yd_snakes(M: YDModule, D: YDModule, ev: LinearMap, coev: LinearMap, side: str) -> VerificationReport:
    """Zig-zags (the YD associator is the module one); ev and coev intertwine action and coaction."""
    H = M.H
    F = M.field
    report = VerificationReport(subject=f"YD snakes for {D.name}")
    plain = DualData(dual=D.module, ev=ev, coev=coev, side=side, report=VerificationReport(subject=""))
    report.add(compare(F, SNAKE_TAGS[side][0], zigzag_matrix(M.module, plain, 0), F.eye(M.dim)))
    report.add(compare(F, SNAKE_TAGS[side][1], zigzag_matrix(M.module, plain, 1), F.eye(D.dim)))
    (e1, e2), (c1, c2) = ((D, M), (M, D)) if side == "left_dual" else ((M, D), (D, M))
    report.add(functional_intertwines(e1.module, e2.module, ev, "YD ev intertwines action"))
    pairing = ev.matrix.reshape(e1.dim, e2.dim)
    lhs = (tensor_ll_program(e1, e2).load(pairing, "p1", "p2").pair("m", "p1").pair("n", "p2")
           .output("L", "mi", "ni").run())
    report.add(compare(F, "YD ev intertwines coaction", lhs, F.reduce(np.multiply.outer(H.unit, pairing))))
    report.add(vector_intertwines(c1.module, c2.module, coev, "YD coev intertwines action"))
    lhs = tensor_ll_program(c1, c2, coev.matrix).output("L", "m", "n").run()
    rhs = F.reduce(np.multiply.outer(H.unit, coev.matrix.reshape(c1.dim, c2.dim)))
    report.add(compare(F, "YD coev intertwines coaction", lhs, rhs))
    return report


def yd_duals(M: YDModule) -> Tuple[YDDualData, YDDualData]:
    return yd_dual(M, "left_dual"), yd_dual(M, "right_dual")


# ----------------------------------------------------------------------
# transposes
# ----------------------------------------------------------------------
def identity(M: YDModule) -> LinearMap:
    return LinearMap.identity(M.field, M.dim)


def right_transpose_composite(nu: YDMorphism, src: YDDualData, dst: YDDualData) -> LinearMap:
    """(rt): (ev_N (x) M*) a^{-1}_{N*,N,M*} (N* (x) (nu (x) M*)) (N* (x) coev_M), contracted legwise."""
    N, M = nu.dst, nu.src
    Ms, Ns = src.dual, dst.dual
    H = N.H
    mat = (H.program().ident("x", "xi", Ns.dim).load(src.coev.matrix.reshape(M.dim, Ms.dim), "c1", "c2")
           .apply("c1", nu.map.matrix).act_legwise(H.phi_inv, ("x", Ns), ("c1", N), ("c2", Ms))
           .load(dst.ev.matrix.reshape(Ns.dim, N.dim), "e1", "e2").pair("x", "e1").pair("c1", "e2")
           .output("c2", "xi").matrix(1))
    return LinearMap(N.field, mat)


def left_transpose_composite(nu: YDMorphism, src: YDDualData, dst: YDDualData) -> LinearMap:
    """(lt): (*M (x) ev'_N) a_{*M,N,*N} ((*M (x) nu) (x) *N) (coev'_M (x) *N), contracted legwise."""
    N, M = nu.dst, nu.src
    Ms, Ns = src.dual, dst.dual
    H = N.H
    mat = (H.program().ident("x", "xi", Ns.dim).load(src.coev.matrix.reshape(Ms.dim, M.dim), "c1", "c2")
           .apply("c2", nu.map.matrix).act_legwise(H.phi, ("c1", Ms), ("c2", N), ("x", Ns))
           .load(dst.ev.matrix.reshape(N.dim, Ns.dim), "e1", "e2").pair("c2", "e1").pair("x", "e2")
           .output("c1", "xi").matrix(1))
    return LinearMap(N.field, mat)


def transpose(nu: YDMorphism, side: str = "left_dual") -> YDMorphism:
    """nu* : N* -> M* or *nu : *N -> *M; the categorical composite must be the plain transpose."""
    src, dst = yd_dual(nu.src, side), yd_dual(nu.dst, side)
    if side == "left_dual":
        composite, tag = right_transpose_composite(nu, src, dst), "(rt)"
    else:
        composite, tag = left_transpose_composite(nu, src, dst), "(lt)"
    result = compare(nu.src.field, tag, composite.matrix, nu.map.transpose().matrix)
    if not result.passed:
        raise ConsistencyFailure(tag, "transpose composite differs from the plain transpose", result.lhs, result.rhs)
    return YDMorphism(dst.dual, src.dual, composite)
