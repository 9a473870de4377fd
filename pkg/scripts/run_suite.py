"""Run the default verification suite with timings and write a JSON report."""
from __future__ import annotations

import argparse
import sys

from embverify.report import emit_report
from embverify.suite import SuiteConfig, exit_status, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="suite_report.json")
    args = ap.parse_args()
    cfg = SuiteConfig(timings=True)
    reports = run_suite(cfg)
    emit_report(reports, "text", sys.stdout)
    emit_report(reports, "json", args.out, cfg)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())
