"""
The Riemann hypothesis for a curve, checked two ways
=====================================================

Count points on an elliptic curve over F_2, build its zeta function and
decide the Riemann hypothesis once from the roots of P(T) and once from
the causality of the scattering function attached to the normalized zeta.
A synthetic numerator that violates RH is run through the same pipeline.
"""

import numpy as np

from curvescatter import CurveSpec, check_rh, count_points, zeta_from_curve, zeta_from_numerator

# y^2 + y = x^3 over F_2, a supersingular elliptic curve
curve = CurveSpec.weierstrass(2, a3=1)
print("N_1, N_2 =", count_points(curve, 1), count_points(curve, 2))

# the numerator P(T) follows from N_1 alone when g = 1
zc = zeta_from_curve(curve)
print("P(T) coefficients:", zc.numerator, " class number h =", zc.h)

# both routes, plus the Laurent table e_m and the functional equation check
report = check_rh(zc)
print(report.verdict_line())
print("root moduli:", np.round(report.roots.root_moduli, 12), " q^-1/2 =", 2**-0.5)
print("e_0 =", report.em[0])
print("functional equation residual:", report.functional_equation_residual)

# a numerator with a real root of modulus 1/2 (not a curve): RH fails
fake = zeta_from_numerator(2, 1, [1, 3, 2], synthetic=True)
bad = check_rh(fake)
print(bad.verdict_line())
print("inner zeros of psi blocking causality:", bad.causality.offending_zeros_of_psi)

# genus 2: y^2 + y = x^5 over F_2
g2 = zeta_from_curve(CurveSpec.hyperelliptic(2, [0, 0, 0, 0, 0, 1], [1]))
print("genus 2 numerator:", g2.numerator, "->", check_rh(g2).verdict_line())
