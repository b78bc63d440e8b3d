"""Shared test corpus and independent oracles.

The oracles here deliberately avoid the package's own machinery: point
counts use hand-written field arithmetic and a double loop over (x, y),
and Laurent coefficients come from circle quadrature.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from curvescatter import CurveSpec, RationalFunction

# Irreducible moduli for the oracle fields, chosen independently of the
# package defaults (point counts do not depend on the choice).
ORACLE_MODULI = {
    (2, 1): (0, 1), (3, 1): (0, 1), (5, 1): (0, 1), (7, 1): (0, 1),
    (2, 2): (1, 1, 1), (2, 3): (1, 1, 0, 1), (2, 4): (1, 1, 0, 0, 1), (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1), (3, 3): (1, 2, 0, 1), (5, 2): (2, 0, 1), (7, 2): (1, 0, 1),
}


class OracleField:
    """GF(p^n) with elements as coefficient tuples; slow and obvious."""

    def __init__(self, p, n):
        self.p, self.n = p, n
        self.mod = ORACLE_MODULI[(p, n)]
        self.elements = [tuple((i // p**j) % p for j in range(n)) for i in range(p**n)]

    def const(self, c):
        return tuple([c % self.p] + [0] * (self.n - 1))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d]
            if c:
                for k in range(n + 1):
                    prod[d - n + k] = (prod[d - n + k] - c * self.mod[k]) % p
        return tuple(prod[:n])

    def poly(self, coeffs, x):
        acc = self.const(0)
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.const(c))
        return acc


def brute_force_count(q, h, f, k):
    """Points on ``y^2 + h(x) y = f(x)`` over F_{q^k} by a double loop, plus one at infinity."""
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = round(np.log(q) / np.log(p))
    F = OracleField(p, e * k)
    count = 0
    for x in F.elements:
        hx, fx = F.poly(h, x), F.poly(f, x)
        for y in F.elements:
            lhs = F.add(F.mul(y, y), F.mul(hx, y))
            if lhs == fx:
                count += 1
    return count + 1


@dataclass(frozen=True)
class TrueCurve:
    name: str
    spec: CurveSpec
    counts: tuple       # N_1..N_g, frozen from the brute-force oracle
    numerator: tuple    # P(T), frozen


TRUE_CURVES = [
    TrueCurve("y^2+y=x^3 / F2", CurveSpec.weierstrass(2, a3=1), (3,), (1, 0, 2)),
    TrueCurve("y^2=x^3-x / F3", CurveSpec.weierstrass(3, a4=-1), (4,), (1, 0, 3)),
    TrueCurve("y^2+y=x^3 / F4", CurveSpec.weierstrass(4, a3=1), (9,), (1, 4, 4)),
    TrueCurve("y^2+xy=x^3+1 / F4", CurveSpec.weierstrass(4, a1=1, a6=1), (8,), (1, 3, 4)),
    TrueCurve("y^2=x^3+x+1 / F5", CurveSpec.weierstrass(5, a4=1, a6=1), (9,), (1, 3, 5)),
    TrueCurve("y^2=x^3+1 / F7", CurveSpec.weierstrass(7, a6=1), (12,), (1, 4, 7)),
    TrueCurve("y^2+y=x^5 / F2", CurveSpec.hyperelliptic(2, [0, 0, 0, 0, 0, 1], [1]), (3, 5), (1, 0, 0, 0, 4)),
    TrueCurve("y^2=x^5+2x+1 / F3", CurveSpec.hyperelliptic(3, [1, 2, 0, 0, 0, 1]), (7, 15), (1, 3, 7, 9, 9)),
]

# (q, g, P, RH holds): self-reciprocal integer numerators that are not curves
SYNTHETIC = [
    (2, 1, (1, 3, 2), False),
    (2, 1, (1, 4, 2), False),
    (3, 1, (1, 4, 3), False),
    (3, 1, (1, 5, 3), False),
    (5, 1, (1, 5, 5), False),
    (2, 2, (1, 0, 5, 0, 4), False),
    (2, 2, (1, 4, 6, 8, 4), False),
    (2, 1, (1, 1, 2), True),
    (3, 2, (1, 2, 3, 6, 9), True),
]


def quadrature_laurent(r: RationalFunction, m_min: int, m_max: int, grid: int = 2**12) -> np.ndarray:
    """Laurent coefficients on the unit circle by the trapezoidal rule."""
    theta = 2 * np.pi * np.arange(grid) / grid
    z = np.exp(1j * theta)
    c = np.fft.fft(r(z)) / grid
    return np.array([c[m % grid] for m in range(m_min, m_max + 1)])


def random_psi(rng: np.random.Generator):
    """A random rational psi in H^2 of degree <= 8 with zeros inside, outside and on the circle.

    Returns ``(psi, has_boundary_zero)``.
    """
    n_in, n_out, n_bd = rng.integers(0, 4), rng.integers(0, 4), rng.integers(0, 2)

    def ring(k, lo, hi):
        rad = rng.uniform(lo, hi, k)
        ang = rng.uniform(0, 2 * np.pi, k)
        return list(rad * np.exp(1j * ang))

    zeros = ring(n_in, 0.05, 0.9) + ring(n_out, 1.15, 3.0) + ring(n_bd, 1.0, 1.0)
    if rng.uniform() < 0.2:
        zeros.append(0j)
    if not zeros:
        zeros = ring(1, 1.2, 2.0)
    poles = ring(rng.integers(0, 3), 1.3, 3.0)
    lead = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    num = (np.poly(zeros) * lead)[::-1]
    # denominator equals 1 at the origin so |psi| stays moderate
    den = np.poly(poles)[::-1] if poles else np.array([1.0])
    return RationalFunction(num, den / den[0]), n_bd > 0


# pass/fail lines from test_acceptance.py, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
