import random
import sys
from fractions import Fraction

import pytest

LO_EXP, HI_EXP = -6, 6


def log_uniform_rational(rng: random.Random, lo=LO_EXP, hi=HI_EXP) -> Fraction:
    """Rational drawn log-uniformly from [10**lo, 10**hi] with a random denominator."""
    target = 10 ** rng.uniform(lo, hi)
    den = rng.randint(1, 10**6)
    value = Fraction(max(1, round(target * den)), den)
    return min(max(value, Fraction(10) ** lo), Fraction(10) ** hi)


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k.split()[1])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
