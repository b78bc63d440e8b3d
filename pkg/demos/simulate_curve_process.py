"""
A stationary process driven by a curve
=======================================

Use the Laurent coefficients e_m of a normalized zeta function as the
moving-average weights of a two-sided process, simulate a long path from a
fixed seed and compare sample autocovariances with the analytic ones.
"""

import numpy as np

from curvescatter import (
    MovingAverageModel,
    autocovariance,
    e_coefficients,
    estimate_autocovariance,
    synthesize,
    zeta_from_point_counts,
)

# y^2 + y = x^3 over F_2 has N_1 = 3
zc = zeta_from_point_counts(2, 1, [3])
em = e_coefficients(zc, -40, 40)
print("e_0, e_1, e_-1:", em[0], em[1], em[-1])

# X_n = sum_m e_m eps_{n-m}, truncated at |m| <= 40
model = MovingAverageModel(em.values, -40)
print("sidedness:", model.sided)

# analytic autocovariance from the spectral density |psi|^2
gamma = autocovariance(model.density(), 8).gamma

# same seed, same path: the noise stream is counter based
path = synthesize(model, 2**18, seed=7)
est = estimate_autocovariance(path, 8)

for j in range(9):
    z = abs(est.gamma[j] - gamma[j]) / est.standard_errors[j]
    print(f"lag {j}: analytic {gamma[j].real:+.5f}  estimate {est.gamma[j].real:+.5f}  ({z:.2f} SE)")
