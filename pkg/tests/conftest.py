from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lrscodes.ff import prime_power, tower  # noqa: E402

# every tower with q^m <= 2^12, as (p, a, m)
SMALL_TOWERS = [
    (*prime_power(q), m)
    for q in range(2, 65)
    if prime_power(q)
    for m in range(1, 13)
    if q**m <= 1 << 12
]


@functools.lru_cache(maxsize=None)
def get_tower(p: int, a: int = 1, m: int = 1):
    return tower(p, a, m)


@pytest.fixture(scope="session")
def towers():
    return get_tower


# acceptance results, filled in by test_acceptance.py and printed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  ({secs:.2f} s)  {detail}")
