"""Shared fixtures plus the per-criterion acceptance summary.

Tests tagged ``@pytest.mark.criterion(n)`` are grouped by ``n``; after the run
one ``PASS``/``FAIL`` line is printed per criterion, naming the failing parts.
"""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

_results: dict[int, list[tuple[str, bool, float]]] = defaultdict(list)


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / f"{name}.tsv").read_text()
    return read


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results[marker.args[0]].append((item.name, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        parts = _results[n]
        ok = all(p for _, p, _ in parts)
        secs = sum(d for _, _, d in parts)
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  ({len(parts)} checks, {secs:.2f}s)"
        failed = [name for name, p, _ in parts if not p]
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
