"""Babylonian root extraction and Newton's method over exact rationals."""
from .convergence import ConvergenceReport, StoppingRule, analyze, reference_root
from .errors import (
    BabylonianError,
    DivisionByZero,
    InsufficientIterates,
    InvalidDegree,
    InvalidDigit,
    NonConvergence,
    NonPositiveIterate,
    NonPositiveRadicand,
    ParseError,
    UndefinedPower,
    ZeroDerivative,
)
from .iteration import (
    IterationTrace,
    Polynomial,
    RootProblem,
    fixed_point_residual,
    iterate,
    mth_root_step,
    newton_step,
    poly_derivative,
    poly_eval,
    solve,
    sqrt_step,
)
from .rational import (
    ExactRational,
    Ordering,
    decimal_string,
    parse_rational,
    rat_add,
    rat_cmp,
    rat_div,
    rat_mul,
    rat_pow,
)
from .sexagesimal import SexagesimalNumeral, from_sexagesimal, to_sexagesimal

__version__ = "0.1.0"
