"""Canonical isomorphisms between duals of LL Yetter-Drinfeld modules.

Every closed-form map is compared against the composite of evaluations,
coevaluations, associators and braidings it comes from; a mismatch raises
ConsistencyFailure carrying both matrices.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from loguru import logger

from qhopf.core.linear_map import LinearMap
from qhopf.core.tensor import compare
from qhopf.categories.hmod import HModule, _tagged
from qhopf.categories.yd import (YDModule, YDMorphism, qt_embed, twist_coaction_array, verify_yd_morphism,
                                 yd_associator_map, yd_braiding_inverse_map, yd_braiding_map, yd_tensor)
from qhopf.categories.yd_rigid import YDDualData, identity, yd_dual
from qhopf.utils.errors import ConsistencyFailure
from qhopf.utils.reports import VerificationReport

KINDS = ("theta", "theta_prime", "Theta", "gamma_r", "gamma_l", "sigma_star", "star_sigma", "phi_star")


@dataclass(frozen=True, eq=False)
class CanonicalIso:
    kind: str
    map: YDMorphism
    inverse: YDMorphism
    report: VerificationReport


def raise_on_failure(report: VerificationReport) -> None:
    if not report.passed:
        bad = report.failures()[0]
        raise ConsistencyFailure(bad.tag, bad.detail or "closed form and composite disagree", bad.lhs, bad.rhs)


def _finish(kind: str, src: YDModule, dst: YDModule, forward: LinearMap, backward: LinearMap,
            report: VerificationReport) -> CanonicalIso:
    F = src.field
    iso = CanonicalIso(kind, YDMorphism(src, dst, forward), YDMorphism(dst, src, backward), report)
    report.add(compare(F, f"{kind} inverse o {kind}", (backward @ forward).matrix, F.eye(src.dim)))
    report.add(compare(F, f"{kind} o {kind} inverse", (forward @ backward).matrix, F.eye(dst.dim)))
    report.merge(_tagged(verify_yd_morphism(iso.map), kind))
    report.merge(_tagged(verify_yd_morphism(iso.inverse), f"{kind} inverse"))
    raise_on_failure(report)
    logger.debug(f"{kind}: {src.name} -> {dst.name} verified")
    return iso


def _a(U, V, W) -> LinearMap:
    return yd_associator_map(U, V, W)


def _a_inv(U, V, W) -> LinearMap:
    return yd_associator_map(U, V, W, inverse=True)


# ----------------------------------------------------------------------
# theta and theta'
# ----------------------------------------------------------------------
def theta_composite(M: YDModule, right: YDDualData, right_left: YDDualData) -> LinearMap:
    """(theta): M -> (*M)*, (ev'_M (x) (*M)*) a^{-1} (M (x) coev_{*M})."""
    E, Es = right.dual, right_left.dual
    return right.ev.tensor(identity(Es)) @ _a_inv(M, E, Es) @ identity(M).tensor(right_left.coev)


def theta_inverse_composite(M: YDModule, right: YDDualData, right_left: YDDualData) -> LinearMap:
    """(thetam): (*M)* -> M, (ev_{*M} (x) M) a^{-1} ((*M)* (x) coev'_M)."""
    E, Es = right.dual, right_left.dual
    return right_left.ev.tensor(identity(M)) @ _a_inv(Es, E, M) @ identity(Es).tensor(right.coev)


def theta_prime_composite(M: YDModule, left: YDDualData, left_right: YDDualData) -> LinearMap:
    """M -> *(M*), (*(M*) (x) ev_M) a (coev'_{M*} (x) M)."""
    D, Dr = left.dual, left_right.dual
    return identity(Dr).tensor(left.ev) @ _a(Dr, D, M) @ left_right.coev.tensor(identity(M))


def theta_prime_inverse_composite(M: YDModule, left: YDDualData, left_right: YDDualData) -> LinearMap:
    """*(M*) -> M, (M (x) ev'_{M*}) a (coev_M (x) *(M*))."""
    D, Dr = left.dual, left_right.dual
    return identity(M).tensor(left_right.ev) @ _a(M, D, Dr) @ left.coev.tensor(identity(Dr))


def canonical_theta(M: YDModule) -> CanonicalIso:
    """theta_M: M -> (*M)*; in coordinates the identity (thetay)."""
    right = yd_dual(M, "right_dual")
    right_left = yd_dual(right.dual, "left_dual")
    F = M.field
    report = VerificationReport(subject=f"theta for {M.name}")
    forward = theta_composite(M, right, right_left)
    backward = theta_inverse_composite(M, right, right_left)
    report.add(compare(F, "(thetay)", forward.matrix, F.eye(M.dim)))
    report.add(compare(F, "(thetam)", backward.matrix, F.eye(M.dim)))
    return _finish("theta", M, right_left.dual, forward, backward, report)


def canonical_theta_prime(M: YDModule) -> CanonicalIso:
    """theta'_M: M -> *(M*), given by the same coordinate formula as theta."""
    left = yd_dual(M, "left_dual")
    left_right = yd_dual(left.dual, "right_dual")
    F = M.field
    report = VerificationReport(subject=f"theta' for {M.name}")
    forward = theta_prime_composite(M, left, left_right)
    backward = theta_prime_inverse_composite(M, left, left_right)
    report.add(compare(F, "(thetay) theta'", forward.matrix, F.eye(M.dim)))
    report.add(compare(F, "theta' inverse", backward.matrix, F.eye(M.dim)))
    return _finish("theta_prime", M, left_right.dual, forward, backward, report)


# ----------------------------------------------------------------------
# Theta: M* -> *M
# ----------------------------------------------------------------------
def Theta_closed_form(M: YDModule) -> np.ndarray:
    """(rly): <m*, S(p^1) f^2 . (g^1 . m_j)_{(0)}>
    <m^j, S(q^2) S^{-1}(q^1 S^{-1}(f^1 (g^1 . m_j)_{(-1)} g^2) p^2) . m_i> m^i."""
    H, d, A = M.H, M.dim, M.action
    tw, pq = H.twist, H.pq
    return (H.program().ident("m", "mj", d).load(tw.f_inv, "g1", "g2").act("g1", "m", A)
            .coact("m", "c", M.coaction).load(tw.f, "F1", "F2").mul("F1", "c", "g2", out="t").Sinv("t")
            .load(pq.p_R, "P1", "P2").mul("t", "P2", out="t").S("P1").mul("P1", "F2", out="a").act("a", "m", A)
            .load(pq.q_R, "Q1", "Q2").mul("Q1", "t", out="w").Sinv("w").S("Q2").mul("Q2", "w", out="w")
            .ident("n", "ni", d).act("w", "n", A).pair("n", "mj")
            .output("ni", "m").run())


def V_element(H) -> np.ndarray:
    """(v): S^{-1}(f^2 p^2) (x) S^{-1}(f^1 p^1)."""
    return (H.program().load(H.twist.f, "F1", "F2").load(H.pq.p_R, "P1", "P2")
            .mul("F2", "P2", out="V1").Sinv("V1").mul("F1", "P1", out="V2").Sinv("V2")
            .output("V1", "V2").run())


def Theta_inverse_closed_form(M: YDModule) -> np.ndarray:
    """(irly): <*m, V^2 . m_{j(0)}> <m^j, beta S(V^1 m_{j(-1)}) . m_i> m^i."""
    H, d, A = M.H, M.dim, M.action
    return (H.program().ident("m", "mj", d).coact("m", "c", M.coaction).load(V_element(H), "V1", "V2")
            .act("V2", "m", A).mul("V1", "c", out="s").S("s").load(H.beta, "b").mul("b", "s", out="s")
            .ident("n", "ni", d).act("s", "n", A).pair("n", "mj")
            .output("ni", "m").run())


def Theta_composite(M: YDModule, left: YDDualData, right: YDDualData) -> LinearMap:
    """(rl): (*M (x) ev_M) a (c_{M*,*M} (x) M) a^{-1} (M* (x) coev'_M)."""
    D, E = left.dual, right.dual
    c = yd_braiding_map(D, E)
    return (identity(E).tensor(left.ev) @ _a(E, D, M) @ c.tensor(identity(M)) @ _a_inv(D, E, M)
            @ identity(D).tensor(right.coev))


def Theta_inverse_composite(M: YDModule, left: YDDualData, right: YDDualData) -> LinearMap:
    """(lr): (ev'_M (x) M*) a^{-1} (M (x) c^{-1}_{*M,M*}) a (coev_M (x) *M)."""
    D, E = left.dual, right.dual
    c_inv = yd_braiding_inverse_map(E, D)
    return (right.ev.tensor(identity(D)) @ _a_inv(M, E, D) @ identity(M).tensor(c_inv) @ _a(M, D, E)
            @ left.coev.tensor(identity(E)))


def canonical_Theta(M: YDModule, left: YDDualData = None, right: YDDualData = None) -> CanonicalIso:
    left = left or yd_dual(M, "left_dual")
    right = right or yd_dual(M, "right_dual")
    F = M.field
    report = VerificationReport(subject=f"Theta for {M.name}")
    forward = Theta_composite(M, left, right)
    backward = Theta_inverse_composite(M, left, right)
    report.add(compare(F, "(rly)", Theta_closed_form(M), forward.matrix))
    report.add(compare(F, "(irly)", Theta_inverse_closed_form(M), backward.matrix))
    return _finish("Theta", left.dual, right.dual, forward, backward, report)


# ----------------------------------------------------------------------
# Gamma: M** -> M and **M -> M
# ----------------------------------------------------------------------
def calF_element(H):
    """(calf): S(g^2) f^1 (x) S(g^1) f^2, as (element, inverse)."""
    tw = H.twist
    arr = (H.program().load(tw.f_inv, "g1", "g2").S("g1").S("g2").load(tw.f, "F1", "F2")
           .mul("g2", "F1", out="L").mul("g1", "F2", out="R").output("L", "R").run())
    el = H.element(arr)
    return el, H.invert(el)


def gamma_r_closed_form(M: YDModule) -> np.ndarray:
    """(gr): q^1 S^{-2}((S^2(p^1) . m_i)^F_{(-1)}) p^2 S^2(q^2) . (S^2(p^1) . m_i)^F_{(0)}."""
    H, A = M.H, M.action
    pq = H.pq
    Fel, Gel = calF_element(H)
    twisted = twist_coaction_array(M, Fel, Gel)
    return (H.program().ident("m", "mi", M.dim).load(pq.p_R, "P1", "P2").S("P1", 2).act("P1", "m", A)
            .coact("m", "c", twisted).Sinv("c", 2).load(pq.q_R, "Q1", "Q2").S("Q2", 2)
            .mul("Q1", "c", "P2", "Q2", out="t").act("t", "m", A).output("m", "mi").run())


def gamma_r_inverse_closed_form(M: YDModule) -> np.ndarray:
    """(igr): <m^i, S((p^1 . m)_{(-1)} p^2) alpha . (p^1 . m)_{(0)}> m^{*i}."""
    H, A = M.H, M.action
    return (H.program().ident("m", "mi", M.dim).load(H.pq.p_R, "P1", "P2").act("P1", "m", A)
            .coact("m", "c", M.coaction).mul("c", "P2", out="t").S("t").load(H.alpha, "a")
            .mul("t", "a", out="t").act("t", "m", A).output("m", "mi").run())


def gamma_l_closed_form(M: YDModule) -> np.ndarray:
    """(gl): V^1 g^1 S((S^{-1}(V^2 g^2) . m_i)_{(-1)}) alpha . (S^{-1}(V^2 g^2) . m_i)_{(0)}."""
    H, A = M.H, M.action
    return (H.program().ident("m", "mi", M.dim).load(V_element(H), "V1", "V2")
            .load(H.twist.f_inv, "g1", "g2").mul("V2", "g2", out="s").Sinv("s").act("s", "m", A)
            .coact("m", "c", M.coaction).S("c").load(H.alpha, "a").mul("V1", "g1", "c", "a", out="t")
            .act("t", "m", A).output("m", "mi").run())


def gamma_l_inverse_closed_form(M: YDModule) -> np.ndarray:
    """(igl): <m^i, S^{-2}(q^1 (p^1 . m)_{(-1)} p^2) q^2 . (p^1 . m)_{(0)}> m^{*i}."""
    H, A = M.H, M.action
    pq = H.pq
    return (H.program().ident("m", "mi", M.dim).load(pq.p_R, "P1", "P2").act("P1", "m", A)
            .coact("m", "c", M.coaction).load(pq.q_R, "Q1", "Q2").mul("Q1", "c", "P2", out="t")
            .Sinv("t", 2).mul("t", "Q2", out="t").act("t", "m", A).output("m", "mi").run())


def canonical_gamma(M: YDModule) -> Tuple[CanonicalIso, CanonicalIso]:
    """(rGamma_M = theta'^{-1}_M Theta_{M*}, lGamma_M = theta^{-1}_M Theta^{-1}_{*M})."""
    F = M.field
    left, right = yd_dual(M, "left_dual"), yd_dual(M, "right_dual")
    D, E = left.dual, right.dual
    left_left, left_right = yd_dual(D, "left_dual"), yd_dual(D, "right_dual")
    right_left, right_right = yd_dual(E, "left_dual"), yd_dual(E, "right_dual")

    report = VerificationReport(subject=f"rGamma for {M.name}")
    forward = theta_prime_inverse_composite(M, left, left_right) @ Theta_composite(D, left_left, left_right)
    backward = Theta_inverse_composite(D, left_left, left_right) @ theta_prime_composite(M, left, left_right)
    report.add(compare(F, "(gr)", gamma_r_closed_form(M), forward.matrix))
    report.add(compare(F, "(igr)", gamma_r_inverse_closed_form(M), backward.matrix))
    gamma_r = _finish("gamma_r", left_left.dual, M, forward, backward, report)

    report = VerificationReport(subject=f"lGamma for {M.name}")
    forward = theta_inverse_composite(M, right, right_left) @ Theta_inverse_composite(E, right_left, right_right)
    backward = Theta_composite(E, right_left, right_right) @ theta_composite(M, right, right_left)
    report.add(compare(F, "(gl)", gamma_l_closed_form(M), forward.matrix))
    report.add(compare(F, "(igl)", gamma_l_inverse_closed_form(M), backward.matrix))
    gamma_l = _finish("gamma_l", right_right.dual, M, forward, backward, report)
    return gamma_r, gamma_l


# ----------------------------------------------------------------------
# sigma: duals of tensor products
# ----------------------------------------------------------------------
def phi_star_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """N* (x) M* -> (M (x) N)*: <m*, f^1 . m> <n*, f^2 . n>."""
    H = M.H
    return (H.program().ident("m", "a", M.dim).ident("n", "b", N.dim).load(H.twist.f, "F1", "F2")
            .act("F1", "m", M.action).act("F2", "n", N.action).output("a", "b", "n", "m").matrix(2))


def phi_star_inverse_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """(sat): <mu, g^1 . m_i (x) g^2 . n_j> n^j (x) m^i."""
    H = M.H
    return (H.program().ident("m", "i", M.dim).ident("n", "j", N.dim).load(H.twist.f_inv, "g1", "g2")
            .act("g1", "m", M.action).act("g2", "n", N.action).output("j", "i", "m", "n").matrix(2))


def _split_legs(H, element, *split: int) -> np.ndarray:
    """Coefficients of a three-leg element with the legs in ``split`` replaced by their coproducts."""
    prog = H.program().load(element, "L0", "L1", "L2")
    out = []
    for i in range(3):
        if i in split:
            prog.delta(f"L{i}", f"L{i}a", f"L{i}b")
            out += [f"L{i}a", f"L{i}b"]
        else:
            out.append(f"L{i}")
    return prog.output(*out).run()


def phi_star_composite(M: YDModule, N: YDModule, Ml: YDDualData, Nl: YDDualData, MNl: YDDualData) -> LinearMap:
    """(phir), read right to left: N* M* coev_{MN}, a^{-1}, a (x) id, N* (x) a^{-1} (x) id, ev_M, ev_N.

    Tensor factors are kept as separate legs, so no associator on (M (x) N)^{(x)3} is formed.
    """
    H = M.H
    Md, Nd, MNd = Ml.dual, Nl.dual, MNl.dual
    mat = (H.program().ident("xn", "xni", Nd.dim).ident("xm", "xmi", Md.dim)
           .load(MNl.coev.matrix.reshape(M.dim, N.dim, MNd.dim), "cm", "cn", "cd")
           .act_legwise(_split_legs(H, H.phi_inv, 0, 1), ("xn", Nd), ("xm", Md), ("cm", M), ("cn", N), ("cd", MNd))
           .act_legwise(_split_legs(H, H.phi, 2), ("xn", Nd), ("xm", Md), ("cm", M), ("cn", N))
           .act_legwise(H.phi_inv, ("xm", Md), ("cm", M), ("cn", N))
           .load(Ml.ev.matrix.reshape(Md.dim, M.dim), "em1", "em2").pair("xm", "em1").pair("cm", "em2")
           .load(Nl.ev.matrix.reshape(Nd.dim, N.dim), "en1", "en2").pair("xn", "en1").pair("cn", "en2")
           .output("cd", "xni", "xmi").matrix(1))
    return LinearMap(M.field, mat)


def canonical_phi_star(M: YDModule, N: YDModule) -> CanonicalIso:
    F = M.field
    Ml, Nl = yd_dual(M, "left_dual"), yd_dual(N, "left_dual")
    MNl = yd_dual(yd_tensor(M, N), "left_dual")
    report = VerificationReport(subject=f"phi* for {N.name}, {M.name}")
    forward = phi_star_composite(M, N, Ml, Nl, MNl)
    backward = LinearMap(F, phi_star_inverse_closed_form(M, N))
    report.add(compare(F, "(phir)", phi_star_closed_form(M, N), forward.matrix))
    report.add(compare(F, "(sat)", (backward @ forward).matrix, F.eye(forward.src_dim)))
    return _finish("phi_star", yd_tensor(Nl.dual, Ml.dual), MNl.dual, forward, backward, report)


def sigma_star_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """(ydsr): <m*, f^2 q~^2_2 X^3 S^{-1}(q~^1 X^1 (p^1 . n)_{(-1)} p^2) . m> <n*, f^1 q~^2_1 X^2 . (p^1 . n)_{(0)}>."""
    H = M.H
    pq, tw = H.pq, H.twist
    AN = N.action
    return (H.program().ident("n", "b", N.dim).load(pq.p_R, "P1", "P2").act("P1", "n", AN)
            .coact("n", "c", N.coaction).mul("c", "P2", out="c")
            .load(pq.q_L, "Q1", "Q2").load(H.phi, "X1", "X2", "X3").mul("Q1", "X1", "c", out="t").Sinv("t")
            .delta("Q2", "Q21", "Q22").mul("Q22", "X3", "t", out="u").mul("Q21", "X2", out="v").act("v", "n", AN)
            .load(tw.f, "F1", "F2").act("F1", "n", AN).mul("F2", "u", out="u")
            .ident("m", "a", M.dim).act("u", "m", M.action)
            .output("a", "b", "m", "n").matrix(2))


def sigma_star_inverse_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """(iydsr): <mu, (g^1 . n_j)_{(-1)} g^2 . m_i (x) (g^1 . n_j)_{(0)}> m^i (x) n^j."""
    H = M.H
    return (H.program().ident("n", "j", N.dim).load(H.twist.f_inv, "g1", "g2").act("g1", "n", N.action)
            .coact("n", "c", N.coaction).mul("c", "g2", out="t")
            .ident("m", "i", M.dim).act("t", "m", M.action)
            .output("i", "j", "m", "n").matrix(2))


def star_phi_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """*N (x) *M -> *(M (x) N): <*m, S^{-1}(f^2) . m> <*n, S^{-1}(f^1) . n>."""
    H = M.H
    return (H.program().ident("m", "a", M.dim).ident("n", "b", N.dim).load(H.twist.f, "F1", "F2")
            .Sinv("F1").Sinv("F2").act("F2", "m", M.action).act("F1", "n", N.action)
            .output("a", "b", "n", "m").matrix(2))


def star_phi_composite(M: YDModule, N: YDModule, Mr: YDDualData, Nr: YDDualData, MNr: YDDualData) -> LinearMap:
    """(*(MN) (x) ev'_M)(*(MN) (x) ((M (x) ev'_N) (x) *M))(*(MN) (x) a_{M,N,*N} (x) *M)
    (*(MN) (x) a^{-1}_{MN,*N,*M}) a_{*(MN),MN,*N*M} (coev'_{MN} (x) *N *M), as one leg program."""
    H = M.H
    Ms, Ns, MNs = Mr.dual, Nr.dual, MNr.dual
    mat = (H.program().ident("xn", "xni", Ns.dim).ident("xm", "xmi", Ms.dim)
           .load(MNr.coev.matrix.reshape(MNs.dim, M.dim, N.dim), "cd", "cm", "cn")
           .act_legwise(_split_legs(H, H.phi, 1, 2), ("cd", MNs), ("cm", M), ("cn", N), ("xn", Ns), ("xm", Ms))
           .act_legwise(_split_legs(H, H.phi_inv, 0), ("cm", M), ("cn", N), ("xn", Ns), ("xm", Ms))
           .act_legwise(H.phi, ("cm", M), ("cn", N), ("xn", Ns))
           .load(Nr.ev.matrix.reshape(N.dim, Ns.dim), "en1", "en2").pair("cn", "en1").pair("xn", "en2")
           .load(Mr.ev.matrix.reshape(M.dim, Ms.dim), "em1", "em2").pair("cm", "em1").pair("xm", "em2")
           .output("cd", "xni", "xmi").matrix(1))
    return LinearMap(M.field, mat)


def star_sigma_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """(ydsl): <*m, S^{-1}(f^2 q^1 (x^1 p~^1 S^{-1}(f^1) . n)_{(-1)} x^2 p~^2_1) . m>
    <*n, S^{-1}(x^3 p~^2_2) q^2 . (x^1 p~^1 S^{-1}(f^1) . n)_{(0)}>."""
    H = M.H
    pq, tw = H.pq, H.twist
    AN = N.action
    return (H.program().ident("n", "b", N.dim).load(tw.f, "F1", "F2").Sinv("F1")
            .load(pq.p_L, "P1", "P2").mul("P1", "F1", out="w")
            .load(H.phi_inv, "x1", "x2", "x3").mul("x1", "w", out="w").act("w", "n", AN)
            .coact("n", "c", N.coaction).delta("P2", "P21", "P22").mul("c", "x2", "P21", out="c")
            .load(pq.q_R, "Q1", "Q2").mul("F2", "Q1", "c", out="t").Sinv("t")
            .mul("x3", "P22", out="s").Sinv("s").mul("s", "Q2", out="s").act("s", "n", AN)
            .ident("m", "a", M.dim).act("t", "m", M.action)
            .output("a", "b", "m", "n").matrix(2))


def star_sigma_inverse_closed_form(M: YDModule, N: YDModule) -> np.ndarray:
    """(iydsl): <nu, (S^{-1}(g^2) . n_j)_{(-1)} S^{-1}(g^1) . m_i (x) (S^{-1}(g^2) . n_j)_{(0)}> m^i (x) n^j."""
    H = M.H
    return (H.program().ident("n", "j", N.dim).load(H.twist.f_inv, "g1", "g2").Sinv("g2")
            .act("g2", "n", N.action).coact("n", "c", N.coaction).Sinv("g1").mul("c", "g1", out="t")
            .ident("m", "i", M.dim).act("t", "m", M.action)
            .output("i", "j", "m", "n").matrix(2))


def sigma_star_iso(M: YDModule, N: YDModule) -> CanonicalIso:
    """sigma*_{M,N} = phi*_{N,M} c^{-1}_{N*,M*}: M* (x) N* -> (M (x) N)*."""
    F = M.field
    Ml, Nl = yd_dual(M, "left_dual"), yd_dual(N, "left_dual")
    MNl = yd_dual(yd_tensor(M, N), "left_dual")
    report = VerificationReport(subject=f"sigma* for {M.name}, {N.name}")
    phi = phi_star_composite(M, N, Ml, Nl, MNl)
    report.add(compare(F, "(phir)", phi_star_closed_form(M, N), phi.matrix))
    report.add(compare(F, "(sat)", (LinearMap(F, phi_star_inverse_closed_form(M, N)) @ phi).matrix,
                       F.eye(phi.src_dim)))
    forward = phi @ yd_braiding_inverse_map(Nl.dual, Ml.dual)
    backward = LinearMap(F, sigma_star_inverse_closed_form(M, N))
    report.add(compare(F, "(ydsr)", sigma_star_closed_form(M, N), forward.matrix))
    return _finish("sigma_star", yd_tensor(Ml.dual, Nl.dual), MNl.dual, forward, backward, report)


def star_sigma_iso(M: YDModule, N: YDModule) -> CanonicalIso:
    """*sigma_{M,N} = *phi_{N,M} c^{-1}_{*N,*M}: *M (x) *N -> *(M (x) N)."""
    F = M.field
    Mr, Nr = yd_dual(M, "right_dual"), yd_dual(N, "right_dual")
    MNr = yd_dual(yd_tensor(M, N), "right_dual")
    report = VerificationReport(subject=f"*sigma for {M.name}, {N.name}")
    phi = star_phi_composite(M, N, Mr, Nr, MNr)
    report.add(compare(F, "*phi", star_phi_closed_form(M, N), phi.matrix))
    forward = phi @ yd_braiding_inverse_map(Nr.dual, Mr.dual)
    backward = LinearMap(F, star_sigma_inverse_closed_form(M, N))
    report.add(compare(F, "(ydsl)", star_sigma_closed_form(M, N), forward.matrix))
    return _finish("star_sigma", yd_tensor(Mr.dual, Nr.dual), MNr.dual, forward, backward, report)


def canonical_sigma(M: YDModule, N: YDModule) -> Tuple[CanonicalIso, CanonicalIso]:
    return sigma_star_iso(M, N), star_sigma_iso(M, N)


# ----------------------------------------------------------------------
# identities behind the sigma formulas
# ----------------------------------------------------------------------
def sigma_identities(H) -> VerificationReport:
    """(ufo), (ufox) and (uf) as tensor equalities in H."""
    F = H.field
    P = H.program
    pq, tw = H.pq, H.twist
    report = VerificationReport(subject=f"sigma helper identities of {H.name}")

    lhs = (P().load(pq.q_R, "Q1", "Q2").load(tw.f_inv, "g1", "g2").delta("g1", "a", "b")
           .mul("Q1", "a", out="L").mul("Q2", "b", out="r").S("r").mul("r", "g2", out="r")
           .output("L", "r").run())
    rhs = (P().load(H.phi, "X1", "X2", "X3").load(tw.f, "F1", "F2").S("X3").mul("X3", "F1", out="L")
           .S("X2").load(H.beta, "b").mul("X1", "b", "X2", "F2", out="r").S("r")
           .output("L", "r").run())
    report.add(compare(F, "(ufo)", lhs, rhs))

    lhs = (P().load(pq.p_R, "P1", "P2").load(tw.f, "f1", "f2").mul("P2", "f1", out="s").S("s")
           .delta("f2", "f21", "f22").load(tw.f, "F1", "F2").mul("s", "F1", "f21", out="L")
           .S("P1").mul("P1", "F2", "f22", out="R").output("L", "R").run())
    report.add(compare(F, "(ufox)", lhs, pq.q_L.coeffs))

    # w = g^1 S(q~^2_1 X^2) f^2
    lhs = (P().load(pq.q_L, "q1", "q2").delta("q2", "A", "B").load(H.phi, "X1", "X2", "X3")
           .mul("A", "X2", out="s").mul("q1", "X1", out="t").mul("B", "X3", out="u").S("s").S("t").S("u")
           .load(tw.f_inv, "g1", "g2").mul("g2", "t", out="m2").mul("g1", "s", out="w")
           .load(tw.f, "F1", "F2").mul("w", "F2", out="w").mul("u", "F1", out="L3")
           .load(pq.q_R, "Q1", "Q2").delta("w", "w1", "w2").mul("Q1", "w1", out="L1")
           .mul("Q2", "w2", out="v").S("v").mul("v", "m2", out="L2")
           .output("L1", "L2", "L3").run())
    rhs = (P().load(H.phi_inv, "x1", "x2", "x3").load(tw.f, "F1", "F2").delta("F1", "F11", "F12")
           .mul("F2", "x3", out="L2").S("L2").mul("F11", "x1", out="L3").mul("F12", "x2", out="L1")
           .load(tw.f, "f1", "f2").mul("f2", "L1", out="L1").mul("f1", "L3", out="L3")
           .output("L1", "L2", "L3").run())
    report.add(compare(F, "(uf)", lhs, rhs))
    for r in report.failures():
        logger.warning(f"{report.subject}: {r.line()}")
    return report


# ----------------------------------------------------------------------
# naturality
# ----------------------------------------------------------------------
def check_naturality(f: YDMorphism, g: YDMorphism) -> VerificationReport:
    """Theta, rGamma, lGamma, sigma* and *sigma commute with f: M -> M' (and g: N -> N')."""
    F = f.src.field
    report = VerificationReport(subject=f"naturality along {f.src.name} -> {f.dst.name}")
    fT = f.map.transpose()
    ThM, ThN = canonical_Theta(f.src), canonical_Theta(f.dst)
    report.add(compare(F, "Theta natural", (ThM.map.map @ fT).matrix, (fT @ ThN.map.map).matrix))
    (grM, glM), (grN, glN) = canonical_gamma(f.src), canonical_gamma(f.dst)
    report.add(compare(F, "rGamma natural", (f.map @ grM.map.map).matrix, (grN.map.map @ f.map).matrix))
    report.add(compare(F, "lGamma natural", (f.map @ glM.map.map).matrix, (glN.map.map @ f.map).matrix))
    ssM, tsM = canonical_sigma(f.src, g.src)
    ssN, tsN = canonical_sigma(f.dst, g.dst)
    fgT = f.map.tensor(g.map).transpose()
    both = fT.tensor(g.map.transpose())
    report.add(compare(F, "sigma* natural", (ssM.map.map @ both).matrix, (fgT @ ssN.map.map).matrix))
    report.add(compare(F, "*sigma natural", (tsM.map.map @ both).matrix, (fgT @ tsN.map.map).matrix))
    return report


# ----------------------------------------------------------------------
# quasitriangular specializations
# ----------------------------------------------------------------------
def check_qt_gamma(M: HModule, qt) -> VerificationReport:
    """On R-embedded modules rGamma is u^{-1}, its inverse u, lGamma u and its inverse u^{-1}."""
    F = M.field
    Mq = qt_embed(M, qt)
    gamma_r, gamma_l = canonical_gamma(Mq)
    u, u_inv = M.matrix_of(qt.u), M.matrix_of(qt.u_inv)
    report = VerificationReport(subject=f"(co1) on {M.name}")
    report.add(compare(F, "(co1) rGamma", gamma_r.map.map.matrix, u_inv))
    report.add(compare(F, "(co1) rGamma inverse", gamma_r.inverse.map.matrix, u))
    report.add(compare(F, "(co1) lGamma", gamma_l.map.map.matrix, u))
    report.add(compare(F, "(co1) lGamma inverse", gamma_l.inverse.map.matrix, u_inv))
    return report


def qt_sigma_matrix(M: HModule, N: HModule, qt, inverse: bool = False, right: bool = False) -> np.ndarray:
    """sigma* (or *sigma with ``right``) on R-embedded modules:
    <m*, f^2 R~^2 . m> <n*, f^1 R~^1 . n>, inverse <mu, R^2 g^2 . m_i (x) R^1 g^1 . n_j> m^i (x) n^j;
    *sigma puts S^{-1} on both legs."""
    H = M.H
    tw = H.twist
    prog = H.program().ident("m", "i", M.dim).ident("n", "j", N.dim)
    if inverse:
        prog.load(qt.R, "R1", "R2").load(tw.f_inv, "g1", "g2").mul("R2", "g2", out="u").mul("R1", "g1", out="v")
    else:
        prog.load(tw.f, "F1", "F2").load(qt.R_inv, "r1", "r2").mul("F2", "r2", out="u").mul("F1", "r1", out="v")
    if right:
        prog.Sinv("u").Sinv("v")
    return prog.act("u", "m", M.action).act("v", "n", N.action).output("i", "j", "m", "n").matrix(2)


def check_qt_sigma(M: HModule, N: HModule, qt) -> VerificationReport:
    """sigma*, *sigma and their inverses through f, R and R^{-1} on R-embedded modules."""
    F = M.field
    sigma_star, star_sigma = canonical_sigma(qt_embed(M, qt), qt_embed(N, qt))
    report = VerificationReport(subject=f"(co2) on {M.name}, {N.name}")
    report.add(compare(F, "(co2) sigma*", sigma_star.map.map.matrix, qt_sigma_matrix(M, N, qt)))
    report.add(compare(F, "(co2) sigma* inverse", sigma_star.inverse.map.matrix,
                       qt_sigma_matrix(M, N, qt, inverse=True)))
    report.add(compare(F, "(co2) *sigma", star_sigma.map.map.matrix, qt_sigma_matrix(M, N, qt, right=True)))
    report.add(compare(F, "(co2) *sigma inverse", star_sigma.inverse.map.matrix,
                       qt_sigma_matrix(M, N, qt, inverse=True, right=True)))
    return report
