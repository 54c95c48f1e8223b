"""Analytic continuation and the reflection formula.

The Euler-Maclaurin evaluator continues zeta_H to the whole plane minus
the pole at s = 1.  Left of the series region the classical special
values come out exactly; the reflection formula linking s and 1 - s
closes to near machine precision and is the main correctness oracle.
"""

from fractions import Fraction

import numpy as np

from zetaline.zetacore import (
    functional_equation_residual,
    gen_euler_constant,
    hurwitz_zeta,
)

print("special values on the real axis")
for a in (0.25, 1.0 / 3.0, 0.5, 1.0):
    v0 = hurwitz_zeta(complex(0, 0), a).real
    v1 = hurwitz_zeta(complex(-1, 0), a).real
    # zeta_H(0, a) = 1/2 - a,  zeta_H(-1, a) = -(1/2)(a^2 - a + 1/6)
    b2 = -(a * a - a + 1.0 / 6.0) / 2.0
    print(f"  a={a:<10.6g} zeta_H(0,a)={v0:+.15f} (exact {0.5 - a:+.15f})"
          f"  zeta_H(-1,a)={v1:+.15f} (exact {b2:+.15f})")

print()
print("reflection-formula residuals, a = 1/3")
for s in (complex(2, 3), complex(3, 0), complex(4, -1), complex(6, 10)):
    r = functional_equation_residual(s, Fraction(1, 3))
    print(f"  s={s!s:<10} residual={r:.3e}")

print()
print("generalized Euler constants (gamma(1) is the classical one)")
for a in (0.25, 0.5, 1.0):
    print(f"  gamma({a}) = {gen_euler_constant(a):.15f}")

print()
print("continuation is smooth across the line sigma = 0..2, t = 5")
sig = np.linspace(0.0, 2.0, 9)
vals = [hurwitz_zeta(complex(x, 5.0), 0.5) for x in sig]
for x, v in zip(sig, vals):
    print(f"  sigma={x:4.2f}  |zeta_H| = {abs(v):.12f}")
