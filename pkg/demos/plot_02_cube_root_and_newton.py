"""
Cube roots and Newton's method
==============================

Averaging two copies of x with 17/x**2 gives a cube-root iteration.  The same
numbers come out of Newton's method applied to x**3 - 17.
"""
from babylonian import Polynomial, mth_root_step, newton_step, poly_derivative

f = Polynomial.root_of(17, 3)
print("f(x) =", f, "   f'(x) =", poly_derivative(f))

x = 2
for n in range(1, 6):
    averaged = mth_root_step(x, 17, 3)
    newton = newton_step(f, x)
    print(n, x, "->", averaged, "| equal to Newton:", averaged == newton)
    x = averaged

###############################################################################
# The same identity holds for any degree m: the mean of (m-1) copies of x and
# r / x**(m-1) is exactly x - f(x)/f'(x) for f(x) = x**m - r.
from fractions import Fraction

for m in range(2, 8):
    x, r = Fraction(7, 3), Fraction(1000, 11)
    print(m, mth_root_step(x, r, m) == newton_step(Polynomial.root_of(r, m), x))
