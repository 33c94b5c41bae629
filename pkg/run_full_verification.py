"""
Runs every verification suite on every builtin algebra and writes one JSON
report per algebra to the report directory. Run this before tagging a
release; the reports are the regression baseline.
"""
import sys
from pathlib import Path

from loguru import logger

from qhopf.catalog.builtins import builtin_names, default_field_for
from qhopf.cli.main import load_algebra, report_json, run_report
from qhopf.cli.suites import SUITES
from qhopf.utils.config import get_settings
from qhopf.utils.logging_setup import setup_logging


def run_full_verification(fields=("default", "fp:101")) -> bool:
    settings = get_settings()
    out_dir = Path(settings.report_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    logger.info("Starting full verification of the builtin catalog")

    all_passed = True
    for name in builtin_names():
        descriptors = dict.fromkeys(default_field_for(name) if f == "default" else f for f in fields)
        for descriptor in descriptors:
            logger.info("=" * 50)
            loaded = load_algebra(f"builtin:{name}", descriptor)
            report = run_report(loaded, SUITES, settings.seed, settings.samples)
            path = out_dir / f"{name}_{loaded.H.field.describe().replace(':', '')}.json"
            path.write_text(report_json(report), encoding="utf-8")
            status = "PASS" if report.passed else "FAIL"
            logger.info(f"{name} over {loaded.H.field}: {status} -> {path}")
            all_passed = all_passed and report.passed

    logger.info("=" * 50)
    logger.info(f"Full verification complete: {'all pass' if all_passed else 'FAILURES'}")
    return all_passed


if __name__ == "__main__":
    setup_logging()
    # every suite on six algebras over two fields; expect a few minutes
    sys.exit(0 if run_full_verification() else 1)
