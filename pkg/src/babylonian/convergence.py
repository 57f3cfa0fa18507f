"""Stopping rules, an independent bisection oracle, and post-hoc trace analysis."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Optional, Sequence

from .errors import InsufficientIterates, InvalidDegree, NonPositiveRadicand
from .rational import as_rational, log10

if TYPE_CHECKING:
    from .iteration import IterationTrace

EXACT = "exact"
FIXED_PRECISION = "fixed-precision"

DEFAULT_TOLERANCE = Fraction(1, 10**30)
DEFAULT_MAX_ITER = 500

#: Relative error below which an iterate counts as inside the quadratic basin.
BASIN_RADIUS = Fraction(1, 10)


@dataclass(frozen=True)
class StoppingRule:
    """When to stop iterating, and how iterates are stored.

    The run stops once ``|x**m - r| <= tolerance * r``; the test is done in
    exact arithmetic.  ``max_iter`` bounds the number of steps taken after the
    initial guess.  In ``"fixed-precision"`` mode each new iterate is rounded
    up to ``precision`` fractional decimal digits, which keeps the numbers
    small at the cost of a floor on attainable accuracy.
    """

    tolerance: Fraction = DEFAULT_TOLERANCE
    max_iter: int = DEFAULT_MAX_ITER
    mode: str = EXACT
    precision: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "tolerance", as_rational(self.tolerance))
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.mode not in (EXACT, FIXED_PRECISION):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == FIXED_PRECISION and (self.precision is None or self.precision < 1):
            raise ValueError("fixed-precision mode needs precision >= 1")

    @classmethod
    def fixed_precision(cls, digits: int, **kwargs) -> "StoppingRule":
        return cls(mode=FIXED_PRECISION, precision=digits, **kwargs)


@dataclass(frozen=True)
class ConvergenceReport:
    converged: bool
    iterations_used: int
    final_relative_residual: Fraction
    observed_order: Optional[float]
    correct_digits_per_step: list = field(default_factory=list)

    @property
    def order_text(self) -> str:
        if self.observed_order is None:
            return "undetermined"
        return f"{self.observed_order + 0.0:.6f}"  # no "-0.000000"


# -- bisection oracle --------------------------------------------------------


def _floor_root(target: int, den: int, m: int) -> int:
    """Largest integer k with ``k**m * den <= target``, found by bisection."""
    if target < den:
        return 0
    lo = 1
    hi = 1 << (target.bit_length() // m + 1)
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if mid**m * den <= target:
            lo = mid
        else:
            hi = mid
    return lo


def _exact_root(r: Fraction, m: int) -> Optional[Fraction]:
    p = _floor_root(r.numerator, 1, m)
    q = _floor_root(r.denominator, 1, m)
    if p**m == r.numerator and q**m == r.denominator:
        return Fraction(p, q)
    return None


def reference_root(r, m: int, digits: int) -> Fraction:
    """Rational ``q`` with ``|q**m - r| <= 10**-digits * r``.

    Uses integer bisection on ``k**m * den <= num * 10**(m*s)`` only, so it
    shares no code path with the Newton iteration it is used to check.
    Perfect powers come back exact.
    """
    r = as_rational(r)
    if r <= 0:
        raise NonPositiveRadicand("radicand must be positive")
    if m < 1:
        raise InvalidDegree("degree must be >= 1")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    exact = _exact_root(r, m)
    if exact is not None:
        return exact

    root_magnitude = log10(r) / m
    scale = digits + len(str(m)) + max(0, math.ceil(-root_magnitude)) + 2
    bound = r / 10**digits
    while True:
        k = _floor_root(r.numerator * 10 ** (m * scale), r.denominator, m)
        q = Fraction(k, 10**scale)
        if abs(q**m - r) <= bound:
            return q
        scale += 2


# -- analysis -----------------------------------------------------------------


def correct_digits(error: Fraction, root: Fraction, cap: int) -> int:
    """``floor(-log10(error / root))`` clipped to ``[0, cap]``."""
    if error == 0:
        return cap
    ratio = error / root
    k = math.floor(-log10(ratio))
    # float estimate, settled exactly
    while ratio * Fraction(10) ** (k + 1) <= 1:
        k += 1
    while k > 0 and ratio * Fraction(10) ** k > 1:
        k -= 1
    return max(0, min(k, cap))


def observed_order(errors: Sequence[Fraction], qualifies: Sequence[bool]) -> float:
    """Order estimate ``log(e[n+1]/e[n]) / log(e[n]/e[n-1])`` from the last
    triple of consecutive qualifying errors.

    Raises InsufficientIterates if fewer than three errors qualify or no
    triple has ``e[n] != e[n-1]``.
    """
    if sum(bool(q) for q in qualifies) < 3:
        raise InsufficientIterates("fewer than 3 iterates inside the quadratic basin")
    for n in range(len(errors) - 2, 0, -1):
        if not (qualifies[n - 1] and qualifies[n] and qualifies[n + 1]):
            continue
        e0, e1, e2 = errors[n - 1], errors[n], errors[n + 1]
        if e1 == e0:
            continue
        return (log10(e2) - log10(e1)) / (log10(e1) - log10(e0))
    raise InsufficientIterates("no usable triple of consecutive basin iterates")


def working_digits(trace: "IterationTrace") -> int:
    """Decimal digits of accuracy the trace itself carries."""
    rule = trace.problem.stopping
    r = trace.problem.radicand
    final = trace.iterates[-1]
    digits = 1
    if final.residual != 0:
        digits = max(1, math.ceil(-log10(abs(final.residual) / r)))
    if rule.mode == FIXED_PRECISION:
        digits = max(digits, rule.precision + max(0, math.ceil(log10(final.value))))
    return digits


def analyze(trace: "IterationTrace", reference=None, digits: Optional[int] = None) -> ConvergenceReport:
    """Measure how a trace approached its root.

    Errors ``|x_n - root|`` are exact rationals.  When ``reference`` is not
    given it is computed with :func:`reference_root` at ``digits`` decimal
    digits (default: three times the trace's own working precision, at least
    50).  Errors smaller than the reference's accuracy are treated as
    unmeasurable and excluded from the order estimate.
    """
    problem = trace.problem
    r, m = problem.radicand, problem.degree
    rule = problem.stopping
    final = trace.iterates[-1]
    used = len(trace.iterates)

    if r == 0:
        rel = Fraction(0)
        return ConvergenceReport(True, used, rel, None, [digits or 0] * used)

    rel = abs(final.residual) / r
    converged = rel <= rule.tolerance

    if digits is None:
        digits = max(3 * working_digits(trace), 50)
    if reference is None:
        reference = reference_root(r, m, digits)
    reference = as_rational(reference)
    if reference <= 0:
        raise ValueError("reference root must be positive")

    errors = [abs(it.value - reference) for it in trace.iterates]
    per_step = [correct_digits(e, reference, digits) for e in errors]
    noise_floor = reference / Fraction(10) ** max(1, digits - 2)
    qualifies = [
        0 < e and e <= BASIN_RADIUS * reference and e >= noise_floor for e in errors
    ]
    try:
        order = observed_order(errors, qualifies)
    except InsufficientIterates:
        order = None
    return ConvergenceReport(converged, used, rel, order, per_step)
