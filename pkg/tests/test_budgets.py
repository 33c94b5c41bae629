"""Wall-clock budgets of the catalog loads and the verification suites."""
import time

import pytest

from qhopf.catalog.builtins import BUILTINS, builtin
from qhopf.cli.main import EXIT_OK, main
from qhopf.cli.suites import SuiteContext, run_suite
from qhopf.core.fields import get_field

from conftest import BUILTIN_FIELDS, QT_BUILTINS


def _run(pairs, suites, samples):
    """Run the suites on every (name, field) pair; returns elapsed seconds and the failing identities."""
    failures = []
    start = time.perf_counter()
    for name, field in pairs:
        H, qt = builtin(name, field)
        ctx = SuiteContext(H, qt, seed=0, samples=samples)
        for suite in suites:
            summary = run_suite(suite, ctx)
            failures += [f"{name}/{field}/{suite}: {r.tag}" for r in summary.failures]
    return time.perf_counter() - start, failures


def test_builtins_load_quickly():
    # bypasses the per-field cache so every structure is rebuilt and validated
    start = time.perf_counter()
    for name, field in BUILTIN_FIELDS:
        H, _ = BUILTINS[name](get_field(field))
        assert H.dim > 0
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"loading the catalog took {elapsed:.1f}s"


@pytest.mark.parametrize("name", ["sweedler4_Rtri", "dZ2"])
def test_single_load_over_rationals(name):
    start = time.perf_counter()
    BUILTINS[name](get_field("q"))
    elapsed = time.perf_counter() - start
    assert elapsed < 5, f"{name} over Q took {elapsed:.1f}s"


def test_algebra_suites_budget():
    pairs = [(name, field) for name, field in BUILTIN_FIELDS if name != "H2_Ri"]
    for name, field in pairs:
        builtin(name, field)
    elapsed, failures = _run(pairs, ("twist", "pq"), samples=1)
    assert not failures, failures
    assert elapsed < 10, f"twist and pq took {elapsed:.1f}s"


def test_axiom_suite_budget():
    pairs = [(name, field) for name, field in BUILTIN_FIELDS if name != "H2_Ri"]
    for name, field in pairs:
        builtin(name, field)
    elapsed, failures = _run(pairs, ("axioms",), samples=2)
    assert not failures, failures
    assert elapsed < 10, f"axioms took {elapsed:.1f}s"


def test_qt_suite_budget():
    pairs = [(name, "fp:101") for name in QT_BUILTINS]
    for name, field in pairs:
        builtin(name, field)
    elapsed, failures = _run(pairs, ("qt",), samples=2)
    assert not failures, failures
    assert elapsed < 5, f"qt took {elapsed:.1f}s"


def test_yd_and_functor_suites_budget():
    pairs = [(name, "fp:101") for name in ("kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2", "dZ2")]
    for name, field in pairs:
        builtin(name, field)
    elapsed, failures = _run(pairs, ("yd", "functors"), samples=20)
    assert not failures, failures
    assert elapsed < 60, f"yd and functors took {elapsed:.1f}s"


def test_braided_suite_budget():
    pairs = [(name, "fp:101") for name in QT_BUILTINS]
    for name, field in pairs:
        builtin(name, field)
    elapsed, failures = _run(pairs, ("braided",), samples=2)
    assert not failures, failures
    assert elapsed < 30, f"braided took {elapsed:.1f}s"


def test_cli_verify_budget(capsys):
    start = time.perf_counter()
    code = main(["--log-level", "ERROR", "verify", "--algebra", "builtin:sweedler4_Rtri", "--samples", "2"])
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    assert code == EXIT_OK
    assert elapsed < 60, f"verify on sweedler4_Rtri took {elapsed:.1f}s"
