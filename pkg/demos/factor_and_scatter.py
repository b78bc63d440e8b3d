"""
Inner/outer factorization and the scattering pair
==================================================

Take a rational function with zeros on both sides of the unit circle, split
it into a Blaschke product times an outer function, and look at the naive
and dual scattering functions built from the outer part.
"""

import numpy as np

from curvescatter import (
    ComplexPolynomial,
    RationalFunction,
    SpectralDensity,
    causality_test,
    circle_points,
    factor_rational,
    outer_from_density,
    relations_check,
    scattering_pair,
)

# psi(z) = (z - 1/2)(z - 3) / (1 - z/2): one zero inside, one outside, a pole at 2
num = ComplexPolynomial.from_roots([0.5, 3.0])
den = ComplexPolynomial([1.0, -0.5])
psi = RationalFunction(num, den)

f = factor_rational(psi)
print("inner zeros:", f.inner.zeros)
print("outer(0) =", f.outer(np.array([0.0]))[0])

# |inner| = 1 on the circle and inner * outer reproduces psi
_, z = circle_points(512)
print("max | |B| - 1 |:", np.max(np.abs(np.abs(f.inner(z)) - 1)))
print("max |B*outer - psi|:", np.max(np.abs(f.product()(z) - psi(z))))

# the outer part can also be recovered from |psi|^2 alone (cepstral route)
cep = outer_from_density(SpectralDensity.from_rational(psi))
_, zc = circle_points(cep.samples.size)
print("cepstral vs rational outer:", np.max(np.abs(cep.samples - f.outer(zc))))

# scattering: s_naive is unimodular on the circle, s_dual is its reciprocal
pair = scattering_pair(f)
verdict = causality_test(f)
print("causal:", verdict.causal, " offending zeros:", verdict.offending_zeros_of_psi)
rel = relations_check(pair, 1024, causal=verdict.causal)
print("relations max deviation:", rel.max_deviation())

# the exterior zero at 3 also blocks causality; a zero on the circle does not
psi2 = RationalFunction(ComplexPolynomial.from_roots([1.0]), den)
print("zero on the circle only, causal:", causality_test(factor_rational(psi2)).causal)
