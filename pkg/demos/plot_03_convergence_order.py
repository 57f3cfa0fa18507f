"""
Measuring the order of convergence
==================================

Errors are taken against a root computed by integer bisection, which has
nothing in common with the iteration being measured.
"""
from fractions import Fraction

from babylonian import RootProblem, StoppingRule, analyze, iterate, reference_root
from babylonian.errors import NonConvergence

ref = reference_root(17, 3, 200)
trace = iterate(RootProblem(17, 3, 2))
report = analyze(trace, reference=ref, digits=200)
print("observed order:", report.order_text)
print("correct digits per step:", report.correct_digits_per_step)

###############################################################################
# Starting far away: the first steps shrink the guess by a constant factor
# (m-1)/m before the quadratic phase kicks in.
rule = StoppingRule.fixed_precision(40, tolerance=Fraction(1, 10**20), max_iter=2000)
far = iterate(RootProblem(17, 10, 10**6, rule))
print("steps from x1 = 1e6, m = 10:", len(far.iterates) - 1)
print("digits:", analyze(far).correct_digits_per_step[-8:])

###############################################################################
# With only 8 digits kept per step the iteration stalls, and the estimator
# says so instead of reporting a spurious 2.
try:
    iterate(RootProblem(17, 2, 4, StoppingRule.fixed_precision(8, max_iter=12)))
except NonConvergence as exc:
    print("stalled run order:", analyze(exc.trace).order_text)
