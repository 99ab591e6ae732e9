"""Acceptance gate: every criterion at its stated tolerance (all exact).

Each test records a ``[PASS]``/``[FAIL]`` line that is printed in the
"acceptance criteria" section at the end of the pytest run.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

import conftest
from dimlat.acceptance import CriterionResult, run_criterion
from dimlat.dsl import DslError, parse, pretty_print

SCRIPTS = sorted((Path(__file__).parent / "scripts").glob("*.dl"))
TIME_LIMITS = {1: 60.0}


def record(res: CriterionResult) -> None:
    conftest.acceptance_lines.append(res.line())
    print(res.line())


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number):
    res = run_criterion(number)
    limit = TIME_LIMITS.get(number)
    if limit is not None and res.seconds >= limit:
        res.passed = False
        res.detail += f"; over the {limit:.0f}s limit"
    record(res)
    assert res.passed, res.detail


# malformed scripts and the line each diagnostic must name
MALFORMED_LINES = [
    ("algebra M { atom a : II_1; }\nelem p over M = { a: aleph 0 };", 2),
    ("algebra M {\n atom a : II_1;\n atom b : II_9;\n}", 3),
    ("algebra M { atom a : II_1; }\n\n\n\nsup F;", 5),
    ("algebra M { atom a : II_1; }\nelem p over M = { a: 1/2 };\nelem q over M = { a: 2/3 }\nleq p q;", 4),
    ("# comment\n\nalgebra M { atom a : II_1; } ?", 3),
    ("algebra M { atom a : II_inf(aleph 0); }\nfamily F over M described {\n  a: [0,1),\n  a: 2,\n};", 4),
]


def test_criterion_9_parser_and_selftest():
    start = time.perf_counter()
    problems = []
    for path in SCRIPTS:
        script = parse(path.read_text(encoding="utf-8"))
        if parse(pretty_print(script)) != script:
            problems.append(f"round trip fails for {path.name}")
    for src, line in MALFORMED_LINES:
        try:
            parse(src)
        except DslError as exc:
            if exc.line != line:
                problems.append(f"diagnostic names line {exc.line}, expected {line}: {exc}")
        else:
            problems.append(f"accepted malformed input ending {src[-20:]!r}")
    proc = subprocess.run([sys.executable, "-m", "dimlat", "selftest"], capture_output=True, text=True,
                          timeout=600, check=False)
    selftest_seconds = time.perf_counter() - start
    if proc.returncode != 0:
        problems.append(f"selftest exited {proc.returncode}: {proc.stdout[-500:]}{proc.stderr[-500:]}")
    if proc.stdout.count("[PASS]") != 8:
        problems.append("selftest did not report 8 passing criteria")
    if selftest_seconds >= 300:
        problems.append(f"selftest took {selftest_seconds:.0f}s")
    detail = (f"{len(SCRIPTS)} scripts round-trip, {len(MALFORMED_LINES)} malformed inputs, "
              f"selftest exit {proc.returncode}; {len(problems)} problems")
    if problems:
        detail += f"; first: {problems[0]}"
    record(CriterionResult(9, "parser round trip, diagnostics and selftest", not problems, detail,
                           time.perf_counter() - start))
    assert not problems, problems
