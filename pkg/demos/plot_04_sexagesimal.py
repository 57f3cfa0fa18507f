"""
Base-60 display
===============

Iterates written in semicolon/comma sexagesimal notation.
"""
from fractions import Fraction

from babylonian import RootProblem, iterate, to_sexagesimal
from babylonian.sexagesimal import parse_sexagesimal

print(to_sexagesimal(Fraction(33, 8), 2))  # 4;7,30

# a classic approximation of the square root of two
approx = parse_sexagesimal("1;24,51,10")
print(approx, float(approx), float(approx**2))

for it in iterate(RootProblem(2, 2, 1)).iterates:
    print(it.index, to_sexagesimal(it.value, 4))
