"""
Square root of 17 by averaging
==============================

Start from 4, average it with 17/4, then keep averaging each new value with
17 divided by it.  Every iterate is an exact fraction.
"""
from fractions import Fraction

from babylonian import RootProblem, StoppingRule, decimal_string, iterate, sqrt_step

# 4 and 17/4 multiply to 17; their mean is the next guess
x1 = Fraction(4)
print("4 * 17/4 =", x1 * Fraction(17, 4))
x2 = sqrt_step(x1, 17)
print("x2 =", x2, "=", decimal_string(x2, 3))

x3 = sqrt_step(x2, 17)
print("x3 =", x3, "=", decimal_string(x3, 12))

###############################################################################
# The driver keeps going until |x**2 - 17| <= 1e-30 * 17.
trace = iterate(RootProblem(17, 2, 4))
for it in trace.iterates:
    print(f"{it.index}  {it.decimal(40)}  residual {decimal_string(it.residual, 40)}")

###############################################################################
# Numerators and denominators roughly double in length each step.
for it in trace.iterates:
    print(it.index, len(str(it.value.denominator)), "denominator digits")

###############################################################################
# Rounding every iterate up to 20 decimals keeps the numbers small.
rule = StoppingRule.fixed_precision(20, tolerance=Fraction(1, 10**15))
for value in iterate(RootProblem(17, 2, 4, rule)).values:
    print(value)
