"""Isomorphisms between the Yetter-Drinfeld flavors.

F: LR -> LL and its inverse, K: LL -> RR and its inverse, and G: RL -> LR
with its inverse. G is K read over H^op: an RL module over H is an LL module
over H^op and an LR module over H is an RR module over H^op, so G and G^-1
use the Drinfeld twist of H^op.
"""
from typing import Callable

import numpy as np
from loguru import logger

from qhopf.core import linalg
from qhopf.core.tensor import compare
from qhopf.categories.hmod import HModule
from qhopf.categories.yd import (YDModule, YDMorphism, from_op, require_yd, yd_braiding_inverse_map,
                                 yd_braiding_map, yd_equal)
from qhopf.utils.errors import ConsistencyFailure, FlavorMismatch, NotInvertible
from qhopf.utils.reports import VerificationReport


def _expect(M: YDModule, flavor: str) -> None:
    if M.flavor != flavor:
        raise FlavorMismatch(f"expected an {flavor} module, got {M.flavor}")


# ----------------------------------------------------------------------
# F and F^-1
# ----------------------------------------------------------------------
def _s0_program(M: YDModule, coact: Callable):
    """q^1_1 x^1 S(q^2 x^3 (p~^2 . m)_{(1)} p~^1) (x) q^1_2 x^2 . (p~^2 . m)_{(0)}.

    ``coact`` inserts the step producing the legs "c" (coaction) and "m".
    """
    H = M.H
    pq = H.pq
    prog = H.program().ident("m", "mi", M.dim).load(pq.p_L, "P1", "P2").act("P2", "m", M.action)
    coact(prog)
    return (prog.mul("c", "P1", out="t").load(H.phi_inv, "x1", "x2", "x3").mul("x3", "t", out="t")
            .act("x2", "m", M.action).load(pq.q_R, "Q1", "Q2").mul("Q2", "t", out="t").S("t")
            .mul("x1", "t", out="t").delta("Q1", "Q11", "Q12").mul("Q11", "t", out="L")
            .act("Q12", "m", M.action))


def s0_coaction(M: YDModule) -> np.ndarray:
    return _s0_program(M, lambda p: p.coact("m", "c", M.coaction)).output("L", "m", "mi").run()


def s0_matrix(M: YDModule) -> np.ndarray:
    """The matrix of rho -> lambda in (s0), columns indexed like the coaction array."""
    n, d = M.H.dim, M.dim

    def placeholder(prog):
        prog.ident("mm", "cin", d).pair("m", "mm").ident("c", "ch", n).ident("m", "co", d)

    return _s0_program(M, placeholder).output("L", "m", "mi", "ch", "co", "cin").matrix(3)


def functor_F(M: YDModule) -> YDModule:
    """LR -> LL: same action, left coaction (s0)."""
    _expect(M, "LR")
    out = YDModule("LL", M.module, s0_coaction(M))
    logger.debug(f"F({M.name}) built")
    return require_yd(out)


def f_inverse_closed_form(M: YDModule) -> np.ndarray:
    """q~^2_1 X^2 . (p^1 . m)_{(0)} (x) S^{-1}(q~^1 X^1 (p^1 . m)_{(-1)} p^2 S(q~^2_2 X^3))."""
    H = M.H
    pq = H.pq
    return (H.program().ident("m", "mi", M.dim).load(pq.p_R, "P1", "P2").act("P1", "m", M.action)
            .coact("m", "c", M.coaction).mul("c", "P2", out="t")
            .load(pq.q_L, "Q1", "Q2").delta("Q2", "Q21", "Q22").load(H.phi, "X1", "X2", "X3")
            .mul("Q22", "X3", out="s").S("s").mul("Q1", "X1", "t", "s", out="t").Sinv("t")
            .mul("Q21", "X2", out="a").act("a", "m", M.action)
            .output("t", "m", "mi").run())


def functor_F_inv(M: YDModule) -> YDModule:
    """LL -> LR: the right coaction rho with (s0)(rho) = lambda, by linear solve."""
    _expect(M, "LL")
    F = M.field
    try:
        rho = linalg.solve(F, s0_matrix(M), M.coaction.reshape(-1)).reshape(M.coaction.shape)
    except NotInvertible:
        raise ConsistencyFailure("(s0)", f"no right coaction on {M.name} is sent to its left coaction") from None
    closed = f_inverse_closed_form(M)
    result = compare(F, "F^-1 closed form", closed, rho)
    if not result.passed:
        raise ConsistencyFailure(result.tag, "closed form disagrees with the linear solve", result.lhs, result.rhs)
    logger.debug(f"F^-1({M.name}) built")
    return require_yd(YDModule("LR", M.module, rho))


# ----------------------------------------------------------------------
# K and K^-1
# ----------------------------------------------------------------------
def functor_K(M: YDModule) -> YDModule:
    """LL -> RR: m . h = S(h) . m, rho(m) = f^2 . (g^1 . m)_{(0)} (x) S^{-1}(f^1 (g^1 . m)_{(-1)} g^2)."""
    _expect(M, "LL")
    H = M.H
    F = M.field
    tw = H.twist
    right = F.reduce(np.tensordot(H.antipode, M.action, axes=(0, 0)))
    rho = (H.program().ident("m", "mi", M.dim).load(tw.f_inv, "g1", "g2").act("g1", "m", M.action)
           .coact("m", "c", M.coaction).load(tw.f, "F1", "F2").mul("F1", "c", "g2", out="t").Sinv("t")
           .act("F2", "m", M.action).output("t", "m", "mi").run())
    return require_yd(YDModule("RR", HModule(H, right, "right", M.name), rho))


def functor_K_inv(M: YDModule) -> YDModule:
    """RR -> LL: h . m = m . S^{-1}(h),
    lambda(m) = g^1 S((m . S^{-1}(f^1))_{(1)}) f^2 (x) (m . S^{-1}(f^1))_{(0)} . S^{-1}(g^2)."""
    _expect(M, "RR")
    H = M.H
    F = M.field
    tw = H.twist
    left = F.reduce(np.tensordot(H.antipode_inv, M.action, axes=(0, 0)))
    lam = (H.program().ident("m", "mi", M.dim).load(tw.f, "F1", "F2").Sinv("F1").act("F1", "m", M.action)
           .coact("m", "c", M.coaction).S("c").load(tw.f_inv, "g1", "g2").mul("g1", "c", "F2", out="L")
           .Sinv("g2").act("g2", "m", M.action).output("L", "m", "mi").run())
    return require_yd(YDModule("LL", HModule(H, left, "left", M.name), lam))


# ----------------------------------------------------------------------
# G and G^-1 through H^op
# ----------------------------------------------------------------------
def functor_G(M: YDModule) -> YDModule:
    """RL -> LR: K over H^op, read back over H."""
    _expect(M, "RL")
    H = M.H
    over_op = YDModule("LL", HModule(H.op, M.action, "left", M.name), M.coaction)
    image = functor_K(over_op)
    return require_yd(YDModule("LR", HModule(H, image.action, "left", M.name), image.coaction))


def functor_G_inv(M: YDModule) -> YDModule:
    """LR -> RL: K^-1 over H^op, read back over H."""
    _expect(M, "LR")
    H = M.H
    over_op = YDModule("RR", HModule(H.op, M.action, "right", M.name), M.coaction)
    image = functor_K_inv(over_op)
    return require_yd(from_op(image, "RL", H))


FUNCTORS = {
    "F": functor_F,
    "F_inv": functor_F_inv,
    "K": functor_K,
    "K_inv": functor_K_inv,
    "G": functor_G,
    "G_inv": functor_G_inv,
}


def apply_to_morphism(functor: Callable, f: YDMorphism) -> YDMorphism:
    """Every functor here is the identity on underlying maps."""
    return YDMorphism(functor(f.src), functor(f.dst), f.map)


# ----------------------------------------------------------------------
# checks
# ----------------------------------------------------------------------
def check_round_trips(M: YDModule) -> VerificationReport:
    """F F^-1, K^-1 K, G G^-1 and the chain LL -> LR -> RR -> RL walked there and back on an LL module."""
    _expect(M, "LL")
    report = VerificationReport(subject=f"functor round trips on {M.name}")
    lr = functor_F_inv(M)
    report.record("F F^-1 = id", yd_equal(functor_F(lr), M))
    report.record("K^-1 K = id", yd_equal(functor_K_inv(functor_K(M)), M))
    # LR -> RR through LL, RR -> RL through LL and LR
    rr = functor_K(functor_F(lr))
    report.record("K F: LR -> RR", yd_equal(rr, functor_K(M)))
    rl = functor_G_inv(functor_F_inv(functor_K_inv(rr)))
    report.record("G G^-1 = id", yd_equal(functor_G(rl), lr))
    back = functor_K_inv(functor_K(functor_F(functor_G(rl))))
    report.record("chain LL -> LR -> RR -> RL and back = id", yd_equal(back, M))
    report.record("K K^-1 = id", yd_equal(functor_K(functor_K_inv(rr)), rr))
    report.record("G^-1 G = id", yd_equal(functor_G_inv(functor_G(rl)), rl))
    return report


def check_f_braiding(M: YDModule, N: YDModule):
    """F sends the mirror-reversed LR braiding c~_{M,N} = c^{-1}_{N,M} to the LL braiding."""
    _expect(M, "LR")
    _expect(N, "LR")
    lhs = yd_braiding_map(functor_F(M), functor_F(N))
    rhs = yd_braiding_inverse_map(N, M)
    return compare(M.field, "F preserves braiding", lhs.matrix, rhs.matrix)
