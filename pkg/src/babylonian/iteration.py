"""Root-extraction steps and the driver that records full iteration traces.

The m-th root step averages m - 1 copies of ``x`` with ``r / x**(m-1)``::

    x_next = ((m - 1) * x + r / x**(m - 1)) / m

For m = 2 this is the classical averaging of ``x`` and ``r / x``.  It is also
exactly Newton's step for ``f(x) = x**m - r``, which :func:`newton_step` lets
callers check on any polynomial with rational coefficients.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .convergence import FIXED_PRECISION, StoppingRule
from .errors import (
    InvalidDegree,
    NonConvergence,
    NonPositiveIterate,
    NonPositiveRadicand,
    ZeroDerivative,
)
from .rational import as_rational, ceil_to_digits, decimal_string

logger = logging.getLogger(__name__)


def _check_step_args(x: Fraction, r: Fraction, m: int) -> None:
    if m < 1:
        raise InvalidDegree(f"degree must be >= 1, got {m}")
    if x <= 0:
        raise NonPositiveIterate(f"iterate must be positive, got {x}")
    if r <= 0:
        raise NonPositiveRadicand(f"radicand must be positive, got {r}")


def sqrt_step(x, r) -> Fraction:
    """One averaging step ``(x + r/x) / 2`` toward the square root of ``r``."""
    x, r = as_rational(x), as_rational(r)
    _check_step_args(x, r, 2)
    return (x + r / x) / 2


def mth_root_step(x, r, m: int) -> Fraction:
    """One step ``((m-1)*x + r/x**(m-1)) / m`` toward the m-th root of ``r``."""
    x, r = as_rational(x), as_rational(r)
    _check_step_args(x, r, m)
    return ((m - 1) * x + r / x ** (m - 1)) / m


def fixed_point_residual(x, r, m: int) -> Fraction:
    """Displacement of the step map at ``x``; zero exactly when ``x**m == r``."""
    x = as_rational(x)
    return mth_root_step(x, r, m) - x


# -- polynomials ---------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; ``coefficients[i]`` multiplies ``x**i``.

    Trailing zero coefficients are dropped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def root_of(cls, r, m: int) -> "Polynomial":
        """``x**m - r``."""
        return cls((-as_rational(r),) + (0,) * (m - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {b}" for s, b in terms[1:])


def poly_eval(p: Polynomial, x) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coefficients))[1:])


def newton_step(p: Polynomial, x) -> Fraction:
    """``x - p(x) / p'(x)``, exactly."""
    x = as_rational(x)
    slope = poly_eval(poly_derivative(p), x)
    if slope == 0:
        raise ZeroDerivative(f"derivative of {p} vanishes at x = {x}")
    return x - poly_eval(p, x) / slope


# -- problems and traces --------------------------------------------------------


def default_initial_guess(r, m: int) -> Fraction:
    """A power of two within a factor of two of ``r ** (1/m)``.

    Uses ``2 ** ceil(floor(log2 r) / m)`` for ``r >= 1`` and 1 below that, so
    ``r = 1`` starts on its exact root.
    """
    r = as_rational(r)
    if r < 1:
        return Fraction(1)
    log2_floor = int(r).bit_length() - 1
    return Fraction(2 ** (-(-log2_floor // m)))


@dataclass(frozen=True)
class RootProblem:
    radicand: Fraction
    degree: int = 2
    initial_guess: Optional[Fraction] = None
    stopping: StoppingRule = field(default_factory=StoppingRule)

    def __post_init__(self):
        r = as_rational(self.radicand)
        if self.degree < 1:
            raise InvalidDegree(f"degree must be >= 1, got {self.degree}")
        if r < 0:
            raise NonPositiveRadicand(f"radicand must be non-negative, got {r}")
        x = self.initial_guess
        x = default_initial_guess(r, self.degree) if x is None else as_rational(x)
        if x <= 0:
            raise NonPositiveIterate(f"initial guess must be positive, got {x}")
        object.__setattr__(self, "radicand", r)
        object.__setattr__(self, "initial_guess", x)


class Iterate(NamedTuple):
    index: int
    value: Fraction
    residual: Fraction

    def decimal(self, digits: int = 50) -> str:
        return decimal_string(self.value, digits)


@dataclass(frozen=True)
class IterationTrace:
    problem: RootProblem
    iterates: tuple

    @property
    def values(self) -> list:
        return [it.value for it in self.iterates]

    @property
    def final(self) -> Iterate:
        return self.iterates[-1]

    @property
    def converged(self) -> bool:
        r = self.problem.radicand
        return abs(self.final.residual) <= self.problem.stopping.tolerance * r

    def replay(self) -> list:
        """Recompute every iterate from its predecessor."""
        values = [self.iterates[0].value]
        for _ in self.iterates[1:]:
            values.append(advance(self.problem, values[-1]))
        return values


def advance(problem: RootProblem, x: Fraction) -> Fraction:
    """One step of ``problem``'s iteration, including any rounding."""
    nxt = mth_root_step(x, problem.radicand, problem.degree)
    rule = problem.stopping
    if rule.mode == FIXED_PRECISION:
        # rounding up keeps every iterate past the first on the upper side of the root
        nxt = ceil_to_digits(nxt, rule.precision)
    return nxt


def iterate(problem: RootProblem) -> IterationTrace:
    """Run the m-th root iteration from ``problem.initial_guess``.

    Stops as soon as ``|x**m - r| <= tolerance * r``.  Raises
    :class:`NonConvergence`, carrying the partial trace, after ``max_iter``
    steps without meeting the tolerance.
    """
    r, m = problem.radicand, problem.degree
    rule = problem.stopping
    if r == 0:
        zero = Fraction(0)
        return IterationTrace(problem, (Iterate(1, zero, zero),))

    threshold = rule.tolerance * r
    x = problem.initial_guess
    iterates = [Iterate(1, x, x**m - r)]
    while abs(iterates[-1].residual) > threshold:
        if len(iterates) > rule.max_iter:
            trace = IterationTrace(problem, tuple(iterates))
            raise NonConvergence(
                f"no convergence after {rule.max_iter} steps", trace
            )
        x = advance(problem, x)
        iterates.append(Iterate(len(iterates) + 1, x, x**m - r))
    logger.debug("converged after %d iterates", len(iterates))
    return IterationTrace(problem, tuple(iterates))


def solve(radicand, degree: int = 2, initial_guess=None, **stopping) -> IterationTrace:
    """Shorthand for ``iterate(RootProblem(...))``."""
    rule = StoppingRule(**stopping)
    return iterate(RootProblem(radicand, degree, initial_guess, rule))
