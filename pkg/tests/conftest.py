"""Shared test configuration.

The acceptance suite gets one PASS/FAIL line per criterion in the terminal
summary, keyed by test name.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LABELS = {
    "test_criterion_1_divisor_table": "criterion 1: divisor table reproduction",
    "test_criterion_2_coefficient_sets": "criterion 2: coefficient sets entrywise",
    "test_criterion_3_key_ext_vanishing": "criterion 3: key Ext vanishing in degrees 0..5",
    "test_criterion_4_complete_orthogonality": "criterion 4: complete orthogonality",
    "test_criterion_5_main_trace": "criterion 5: main trace against displayed states",
    "test_criterion_6_cohomology_spot_checks": "criterion 6: cohomology spot checks",
    "test_criterion_7_property_suites": "criterion 7: property suites",
    "test_criterion_8_chart_suite": "criterion 8: chart suite",
}

_results: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    if name in ACCEPTANCE_LABELS:
        _results[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria")
    for name, label in ACCEPTANCE_LABELS.items():
        outcome = _results.get(name)
        if outcome is None:
            verdict = "NOT RUN"
        else:
            verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"  {label}: {verdict}")
