"""Verification suites run by the command line and the batch script.

Each suite takes a :class:`SuiteContext` and returns a VerificationReport;
:func:`run_suite` folds it into a SuiteReport keyed by identity tag. Every
suite draws its random modules from its own generator seeded with
(seed, suite index), so selecting a subset of suites never changes what the
others sample.
"""
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from qhopf.algebra.quasi_hopf import (QuasiHopfAlgebra, gauge_twist, make_variant, random_gauge,
                                      verify_antipode, verify_quasi_bialgebra)
from qhopf.algebra.quasitriangular import QTStructure, r_inverse_invr1, r_inverse_invr2, verify_qt, verify_u
from qhopf.algebra.twist import verify_pq, verify_twist
from qhopf.braided.h0 import build_H0, check_h0_algebra_in_yd, h0_duals, theta_H0
from qhopf.braided.hopf import VARIANTS, braided_variant, verify_braided_hopf
from qhopf.braided.hstar import build_underline_Hstar, check_dual_chain, hstar_identities
from qhopf.categories.canonical import (canonical_gamma, canonical_phi_star, canonical_sigma, canonical_Theta,
                                        canonical_theta, canonical_theta_prime, check_naturality,
                                        check_qt_gamma, check_qt_sigma, sigma_identities)
from qhopf.categories.functors import check_f_braiding, check_round_trips, functor_F_inv
from qhopf.categories.hmod import (_tagged, associator_map, braiding_map, check_associator_naturality,
                                   check_braiding_naturality, check_hexagons, check_pentagon, dual_module,
                                   random_morphism, verify_module)
from qhopf.categories.yd import (BRAIDING_INVERSE_TAGS, FLAVORS, check_y3p, check_yd_hexagons,
                                 check_yd_naturality, check_yd_pentagon, embedded_braiding_matches,
                                 random_yd_morphism, twisted_coaction, verify_yd, yd_braiding)
from qhopf.categories.yd_rigid import q_l_relations, transpose, yd_duals
from qhopf.core.tensor import compare
from qhopf.utils.errors import ConsistencyFailure, MissingPrerequisite, NotInYD, NotQT, NotTriangular
from qhopf.utils.reports import SuiteReport, VerificationReport
from qhopf.utils.sampling import random_module, sample_yd_modules

SUITES = ("axioms", "twist", "pq", "qt", "yd", "functors", "rigidity", "canonical", "braided")


class SuiteSkipped(Exception):
    """The algebra lacks what the suite needs (for instance an R-matrix)."""


@dataclass
class SuiteContext:
    H: QuasiHopfAlgebra
    qt: Optional[QTStructure] = None
    seed: int = 0
    samples: int = 20

    def rng(self, suite: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, SUITES.index(suite)])

    def require_qt(self) -> QTStructure:
        if self.qt is None:
            raise SuiteSkipped(f"{self.H.name} carries no R-matrix")
        return self.qt

    @property
    def few(self) -> int:
        """How many pairs and triples to draw from the sampled modules."""
        return max(1, self.samples // 5)


def _guarded(report: VerificationReport, build: Callable, tag: Optional[str] = None) -> None:
    """Merge the report ``build`` returns, or record ``tag`` as passing when it returns
    anything else; a construction failure becomes a failing entry."""
    try:
        result = build()
    except ConsistencyFailure as e:
        report.record(e.tag, False, str(e).splitlines()[0],
                      None if e.lhs is None else str(e.lhs), None if e.rhs is None else str(e.rhs))
        return
    except NotInYD as e:
        for failing in e.tags:
            report.record(failing, False, f"not in {e.flavor}")
        return
    if isinstance(result, VerificationReport):
        report.merge(result)
    elif tag:
        report.record(tag, True)


def _pairs(items: Sequence, count: int):
    n = len(items)
    return [(items[i % n], items[(i + 1) % n]) for i in range(min(count, n))]


def _triples(items: Sequence, count: int):
    n = len(items)
    return [(items[i % n], items[(i + 1) % n], items[(i + 2) % n]) for i in range(min(count, n))]


def _smallest(items: Sequence, k: int) -> List:
    ordered = sorted(items, key=lambda M: M.dim)
    return [ordered[i % len(ordered)] for i in range(k)]


# ----------------------------------------------------------------------
# the suites
# ----------------------------------------------------------------------
def suite_axioms(ctx: SuiteContext) -> VerificationReport:
    """The quasi-Hopf axioms of H, of its op/cop variants, of a random gauge twist,
    and the monoidal structure of the module category."""
    H = ctx.H
    rng = ctx.rng("axioms")
    report = VerificationReport(subject=f"axioms of {H.name}")
    report.merge(verify_quasi_bialgebra(H)).merge(verify_antipode(H))
    for which in ("op", "cop", "op_cop"):
        V = make_variant(H, which)
        report.merge(_tagged(verify_quasi_bialgebra(V), which))
        report.merge(_tagged(verify_antipode(V), which))

    def gauge():
        HF = gauge_twist(H, random_gauge(H, rng))
        out = VerificationReport(subject=HF.name)
        out.merge(verify_quasi_bialgebra(HF)).merge(verify_antipode(HF))
        return _tagged(out, "gauge")
    _guarded(report, gauge)

    modules = [random_module(H, rng) for _ in range(ctx.samples)]
    for M in modules:
        report.merge(verify_module(M))
    for U, V, W in _triples(modules, ctx.few):
        f, g, h = (random_morphism(X, X, rng) for X in (U, V, W))
        report.add(check_associator_naturality(f, g, h))
    U, V, W, X = _smallest(modules, 4)
    report.add(check_pentagon(U, V, W, X))
    return report


def suite_twist(ctx: SuiteContext) -> VerificationReport:
    report = VerificationReport(subject=f"Drinfeld twist of {ctx.H.name}")
    _guarded(report, lambda: verify_twist(ctx.H, ctx.H.twist))
    return report


def suite_pq(ctx: SuiteContext) -> VerificationReport:
    H = ctx.H
    report = VerificationReport(subject=f"p/q elements of {H.name}")
    _guarded(report, lambda: verify_pq(H, H.pq))
    _guarded(report, lambda: q_l_relations(H))
    return report


def suite_qt(ctx: SuiteContext) -> VerificationReport:
    """R-matrix axioms, the three ways to R^{-1}, u, the reverse R-matrix and the
    R-matrix braiding on random modules."""
    qt = ctx.require_qt()
    H, F = ctx.H, ctx.H.field
    rng = ctx.rng("qt")
    report = VerificationReport(subject=f"quasitriangular structure of {H.name}")
    report.merge(verify_qt(H, qt.R))
    _guarded(report, lambda: VerificationReport(subject="R^-1").add(
        compare(F, "(invr1)", r_inverse_invr1(H, qt.R).coeffs, qt.R_inv.coeffs)))
    _guarded(report, lambda: VerificationReport(subject="R^-1").add(
        compare(F, "(invr2)", r_inverse_invr2(H, qt.R).coeffs, qt.R_inv.coeffs)))
    report.merge(verify_u(H, qt.R, qt.u, qt.u_inv))
    _guarded(report, lambda: _tagged(verify_qt(H, qt.reverse().R), "reverse"))

    modules = [random_module(H, rng) for _ in range(ctx.samples)]

    def braid(M, N):
        return braiding_map(M, N, qt.R)
    for U, V, W in _triples(modules, ctx.few):
        report.merge(check_hexagons(U, V, W, braid, associator_map, prefix="R-matrix hexagon"))
    for M, N in _pairs(modules, ctx.few):
        f, g = random_morphism(M, M, rng), random_morphism(N, N, rng)
        report.add(check_braiding_naturality(f, g, braid, "R-matrix braiding natural"))
        report.record("YD braiding of embedded modules = R braiding", embedded_braiding_matches(M, N, qt))
    return report


def suite_yd(ctx: SuiteContext) -> VerificationReport:
    """Per flavor: the YD axioms, braiding inverses, hexagons, the pentagon and naturality."""
    H = ctx.H
    rng = ctx.rng("yd")
    report = VerificationReport(subject=f"Yetter-Drinfeld modules over {H.name}")
    for flavor in FLAVORS:
        modules = sample_yd_modules(H, flavor, rng, ctx.samples, ctx.qt)
        for M in modules:
            report.merge(verify_yd(M))
            if flavor == "LL":
                _guarded(report, lambda M=M: check_y3p(M))
        for M, N in _pairs(modules, ctx.few):
            _guarded(report, lambda M=M, N=N: yd_braiding(M, N),
                     tag=BRAIDING_INVERSE_TAGS[flavor])
            f, g = random_yd_morphism(M, M, rng), random_yd_morphism(N, N, rng)
            report.add(check_yd_naturality(f, g))
        for U, V, W in _triples(modules, ctx.few):
            report.merge(check_yd_hexagons(U, V, W))
        report.add(check_yd_pentagon(*_smallest(modules, 4)))
    return report


def suite_functors(ctx: SuiteContext) -> VerificationReport:
    H = ctx.H
    rng = ctx.rng("functors")
    report = VerificationReport(subject=f"flavor functors over {H.name}")
    modules = sample_yd_modules(H, "LL", rng, ctx.samples, ctx.qt)
    for M in modules:
        _guarded(report, lambda M=M: check_round_trips(M))
    for M, N in _pairs(modules, ctx.few):
        _guarded(report, lambda M=M, N=N: VerificationReport(subject="F braiding").add(
            check_f_braiding(functor_F_inv(M), functor_F_inv(N))))

    def twisted():
        gauge = random_gauge(H, rng)
        HF = gauge_twist(H, gauge)
        out = VerificationReport(subject=f"twisted coactions over {HF.name}")
        for M in modules[:ctx.few]:
            out.merge(verify_yd(twisted_coaction(M, gauge, HF)))
        return _tagged(out, "twisted")
    _guarded(report, twisted)
    return report


def suite_rigidity(ctx: SuiteContext) -> VerificationReport:
    """Duals in H-modules and in YD, their snake identities and transposes."""
    H = ctx.H
    rng = ctx.rng("rigidity")
    report = VerificationReport(subject=f"rigidity over {H.name}")
    for M in [random_module(H, rng) for _ in range(ctx.few)]:
        for side in ("left_dual", "right_dual"):
            _guarded(report, lambda M=M, side=side: dual_module(M, side).report)
    modules = sample_yd_modules(H, "LL", rng, ctx.samples, ctx.qt)
    for M in modules:
        _guarded(report, lambda M=M: _merge_reports(d.report for d in yd_duals(M)))
    for M, N in _pairs(modules, ctx.few):
        nu = random_yd_morphism(M, N, rng)
        _guarded(report, lambda nu=nu: transpose(nu, "left_dual"), tag="(rt)")
        _guarded(report, lambda nu=nu: transpose(nu, "right_dual"), tag="(lt)")
    return report


def _merge_reports(reports) -> VerificationReport:
    out = VerificationReport(subject="merged")
    for r in reports:
        out.merge(r)
    return out


def suite_canonical(ctx: SuiteContext) -> VerificationReport:
    """The canonical isomorphisms on sampled LL modules, their naturality and the
    R-matrix specializations."""
    H = ctx.H
    rng = ctx.rng("canonical")
    report = VerificationReport(subject=f"canonical isomorphisms over {H.name}")
    _guarded(report, lambda: sigma_identities(H))
    modules = sample_yd_modules(H, "LL", rng, ctx.samples, ctx.qt)
    for M in modules:
        for build in (canonical_theta, canonical_theta_prime, canonical_Theta):
            _guarded(report, lambda M=M, build=build: build(M).report)
        _guarded(report, lambda M=M: _merge_reports(iso.report for iso in canonical_gamma(M)))
    for M, N in _pairs(modules, ctx.few):
        _guarded(report, lambda M=M, N=N: canonical_phi_star(M, N).report)
        _guarded(report, lambda M=M, N=N: _merge_reports(iso.report for iso in canonical_sigma(M, N)))
        f, g = random_yd_morphism(M, M, rng), random_yd_morphism(N, N, rng)
        _guarded(report, lambda f=f, g=g: check_naturality(f, g))
    if ctx.qt is not None:
        plain = [random_module(H, rng) for _ in range(ctx.few)]
        for M in plain:
            _guarded(report, lambda M=M: check_qt_gamma(M, ctx.qt))
        for M, N in _pairs(plain, ctx.few):
            _guarded(report, lambda M=M, N=N: check_qt_sigma(M, N, ctx.qt))
    return report


def suite_braided(ctx: SuiteContext) -> VerificationReport:
    """H_0 and its variants, H_0* and *H_0, Theta_H0, underline-H* and, for
    triangular R, the chain H_0* = *H_0 = underline-H*^cop."""
    H = ctx.H
    report = VerificationReport(subject=f"braided Hopf algebras from {H.name}")
    _guarded(report, lambda: check_h0_algebra_in_yd(H))
    _guarded(report, lambda: hstar_identities(H))
    qt = ctx.qt
    if qt is None:
        logger.info(f"{H.name} carries no R-matrix; H_0 and its duals are not built")
        return report
    H0 = build_H0(H, qt)
    report.merge(verify_braided_hopf(H0))
    for which in VARIANTS:
        _guarded(report, lambda which=which: _tagged(verify_braided_hopf(braided_variant(H0, which)), which))

    def duals():
        left, right = h0_duals(H, qt, H0)
        out = VerificationReport(subject="H_0 duals")
        out.record("H_0* explicit = generic", True)
        out.record("*H_0 explicit = generic", True)
        out.merge(theta_H0(H, qt, H0, (left, right)).report)
        return out
    _guarded(report, duals)
    _guarded(report, lambda: verify_braided_hopf(build_underline_Hstar(H, qt)))
    if qt.triangular:
        _guarded(report, lambda: check_dual_chain(H, qt))
    return report


SUITE_FUNCTIONS: Dict[str, Callable[[SuiteContext], VerificationReport]] = {
    "axioms": suite_axioms,
    "twist": suite_twist,
    "pq": suite_pq,
    "qt": suite_qt,
    "yd": suite_yd,
    "functors": suite_functors,
    "rigidity": suite_rigidity,
    "canonical": suite_canonical,
    "braided": suite_braided,
}


def parse_suites(text: str) -> List[str]:
    """Comma separated suite names; ``all`` expands to every suite. Order follows SUITES."""
    names = {part.strip() for part in text.split(",") if part.strip()}
    if not names:
        raise ValueError("no suites selected")
    unknown = names - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))} (known: {', '.join(SUITES)}, all)")
    if "all" in names:
        return list(SUITES)
    return [s for s in SUITES if s in names]


def _summarize(name: str, report: VerificationReport) -> SuiteReport:
    identities: Dict[str, bool] = {}
    for r in report.results:
        identities[r.tag] = identities.get(r.tag, True) and r.passed
    return SuiteReport(suite=name, identities=dict(sorted(identities.items())),
                       failures=report.failures())


def run_suite(name: str, ctx: SuiteContext, timings: bool = False) -> SuiteReport:
    logger.info(f"Suite {name} on {ctx.H.name} (seed {ctx.seed}, {ctx.samples} samples)")
    start = time.perf_counter()
    try:
        report = SUITE_FUNCTIONS[name](ctx)
    except (SuiteSkipped, NotQT, NotTriangular, MissingPrerequisite) as e:
        logger.info(f"Suite {name} skipped: {e}")
        return SuiteReport(suite=name, identities={}, skipped=str(e))
    except ConsistencyFailure as e:
        report = VerificationReport(subject=name)
        report.record(e.tag, False, str(e).splitlines()[0])
    summary = _summarize(name, report)
    if timings:
        summary.seconds = round(time.perf_counter() - start, 3)
    for r in summary.failures:
        logger.warning(f"{name}: {r.line()}")
    logger.info(f"Suite {name}: {sum(summary.identities.values())}/{len(summary.identities)} identities pass")
    return summary
