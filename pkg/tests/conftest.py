"""Shared fixtures and the acceptance-criteria summary lines.

The acceptance tests record one entry per criterion; a terminal-summary
hook prints them as a single PASS/FAIL line each at the end of the run.
"""

import time

RESULTS = {}  # criterion number -> (passed, seconds, detail)


def record(num: int, passed: bool, seconds: float, detail: str = ""):
    RESULTS[num] = (passed, seconds, detail)


def run_criterion(num: int, budget, body):
    """Run one criterion body, record its line, enforce the time budget."""
    t0 = time.perf_counter()
    try:
        detail = body() or ""
    except BaseException:
        record(num, False, time.perf_counter() - t0, "raised")
        raise
    dt = time.perf_counter() - t0
    within = budget is None or dt < budget
    record(num, within, dt, detail)
    assert within, f"criterion {num} took {dt:.1f}s, budget {budget}s"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        passed, seconds, detail = RESULTS[num]
        word = "PASS" if passed else "FAIL"
        tail = f"  {detail}" if detail else ""
        terminalreporter.write_line(
            f"[criterion {num:02d}] {word}  ({seconds:.2f}s){tail}")
