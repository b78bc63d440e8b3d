"""
Inner/outer factorization in the Hardy space of the unit disc.

Rational functions are factored exactly: the zeros inside the disc form a
finite Blaschke product (the inner part) and everything else is outer.
Sampled densities go through the cepstral route, which realizes the outer
function as the exponential of the analytic completion of half the log
density.

Convention: the outer factor is normalized so that ``outer(0) > 0``; all
leftover phase lives in the inner part's unimodular constant.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateDensityError,
    InvalidInputError,
    NotHardyError,
    NotPurelyInnovatingError,
    PoleOnBoundaryError,
)
from .poly import (
    BOUNDARY_TOL,
    ComplexPolynomial,
    RationalFunction,
    circle_points,
)

__all__ = [
    "BlaschkeProduct",
    "FactorizedFunction",
    "InnernessCertificate",
    "CepstralOuter",
    "SzegoResult",
    "factor_rational",
    "is_inner",
    "outer_from_density",
    "szego_condition",
    "hardy_representative",
    "CEPSTRAL_GRID",
    "MODULUS_TOL",
]

logger = logging.getLogger(__name__)

CEPSTRAL_GRID = 2**14
MODULUS_TOL = 1e-8
CERT_GRID = 2**10


@dataclass(frozen=True)
class BlaschkeProduct:
    """``c * z**k * prod (z - a) / (1 - conj(a) z)`` over zeros ``a`` in the disc."""

    zeros: tuple = ()
    monomial_power: int = 0
    unimodular_constant: complex = 1.0 + 0j

    def __post_init__(self):
        if self.monomial_power < 0:
            raise InvalidInputError("monomial_power must be nonnegative")
        for a in self.zeros:
            if abs(a) >= 1.0:
                raise InvalidInputError(f"Blaschke zero {a} is not inside the unit disc")

    def is_trivial(self) -> bool:
        """True when the product is a constant."""
        return not self.zeros and self.monomial_power == 0

    def as_rational(self) -> RationalFunction:
        num = ComplexPolynomial.from_roots(self.zeros, self.unimodular_constant)
        den = ComplexPolynomial([1.0])
        for a in self.zeros:
            den = den * ComplexPolynomial([1.0, -np.conj(a)])
        return RationalFunction(num, den, self.monomial_power)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.unimodular_constant * np.power(z, self.monomial_power)
        for a in self.zeros:
            out = out * (z - a) / (1 - np.conj(a) * z)
        return out

    def to_json(self) -> dict:
        return {
            "zeros": [[complex(a).real, complex(a).imag] for a in self.zeros],
            "monomial_power": self.monomial_power,
            "unimodular_constant": [complex(self.unimodular_constant).real,
                                    complex(self.unimodular_constant).imag],
        }


@dataclass(frozen=True)
class FactorizedFunction:
    """``original == inner * outer`` with ``outer(0) > 0``.

    ``boundary_zeros`` lists zeros of the original function found on the
    unit circle; they carry no Blaschke factor and stay in ``outer``.
    """

    inner: BlaschkeProduct
    outer: RationalFunction
    original: RationalFunction
    boundary_zeros: tuple = field(default=())

    def product(self) -> RationalFunction:
        return self.inner.as_rational() * self.outer

    def to_json(self) -> dict:
        out = self.inner.to_json()
        return {
            "inner": out,
            "outer": self.outer.to_json(),
            "original": self.original.to_json(),
            "boundary_zeros": [[complex(a).real, complex(a).imag] for a in self.boundary_zeros],
        }


@dataclass(frozen=True)
class InnernessCertificate:
    verdict: bool
    domain: str
    offending_roots: tuple  # of (location, "zero" | "pole")
    max_modulus_deviation: float

    def to_json(self) -> dict:
        def enc(x):
            x = complex(x)
            if not np.isfinite(x):
                return "infinity"
            return [x.real, x.imag]

        return {
            "verdict": self.verdict,
            "domain": self.domain,
            "offending_roots": [{"location": enc(a), "kind": k} for a, k in self.offending_roots],
            "max_modulus_deviation": self.max_modulus_deviation
            if np.isfinite(self.max_modulus_deviation) else "infinity",
        }


def factor_rational(psi: RationalFunction, boundary_tol: float = BOUNDARY_TOL) -> FactorizedFunction:
    """Split a rational H^2 function into its inner and outer parts.

    Zeros with modulus below ``1 - boundary_tol`` (and any power of ``z``)
    go to the Blaschke product. Zeros inside the boundary band are logged
    and kept in the outer factor.

    Raises
    ------
    InvalidInputError
        If ``psi`` is identically zero.
    NotHardyError
        If ``psi`` has a pole in the closed disc (up to ``boundary_tol``).
    """
    if psi.is_zero():
        raise InvalidInputError("cannot factor the zero function")
    if psi.shift < 0:
        raise NotHardyError(f"pole of order {-psi.shift} at the origin")
    for p, _ in psi.poles():
        if abs(p) <= 1.0 + boundary_tol:
            raise NotHardyError(f"pole at {p:.12g} inside the closed unit disc")

    inside, boundary = [], []
    if psi.numerator.degree >= 1:
        for a, m in psi.numerator.roots():
            if abs(a) < 1.0 - boundary_tol:
                inside.extend([a] * m)
            elif abs(abs(a) - 1.0) <= boundary_tol:
                boundary.extend([a] * m)
    if boundary:
        logger.info("factor_rational: %d boundary zero(s) on the unit circle kept in the outer part",
                    len(boundary))

    num = psi.numerator
    if inside:
        flip = ComplexPolynomial([1.0])
        for a in inside:
            flip = flip * ComplexPolynomial([1.0, -np.conj(a)])
        num, _ = (num * flip).divmod(ComplexPolynomial.from_roots(inside))
    outer = RationalFunction(num, psi.denominator, 0)
    o0 = complex(outer(0.0))
    phase = o0 / abs(o0)
    outer = outer * (1.0 / phase)
    inner = BlaschkeProduct(tuple(complex(a) for a in inside), psi.shift, phase)
    return FactorizedFunction(inner, outer, psi, tuple(complex(b) for b in boundary))


def hardy_representative(r: RationalFunction, boundary_tol: float = BOUNDARY_TOL) -> RationalFunction:
    """A rational function in H^2 with the same modulus as ``r`` on the circle.

    Poles inside the disc are reflected to ``1 / conj(p)`` and the power of
    ``z`` is dropped; neither changes ``|r|`` on ``|z| = 1``.
    """
    poles = r.denominator.roots() if r.denominator.degree >= 1 else ()
    inside = [(p, m) for p, m in poles if abs(p) < 1.0 - boundary_tol]
    for p, _ in poles:
        if abs(abs(p) - 1.0) <= boundary_tol:
            raise PoleOnBoundaryError(f"pole at {p:.12g} lies on the unit circle", pole=p)
    if not inside:
        return RationalFunction(r.numerator, r.denominator, 0)
    den = ComplexPolynomial([r.denominator.leading])
    for p, m in poles:
        factor = ComplexPolynomial([1.0, -np.conj(p)]) if abs(p) < 1 else ComplexPolynomial([-p, 1.0])
        den = den * factor**m
    return RationalFunction(r.numerator, den, 0)


def is_inner(
    r: RationalFunction,
    domain: str = "disc",
    *,
    boundary_tol: float = BOUNDARY_TOL,
    modulus_tol: float = MODULUS_TOL,
    grid_size: int = CERT_GRID,
    allow_pole_at_infinity: bool = False,
) -> InnernessCertificate:
    """Certify whether ``r`` is inner on the disc or on the exterior domain.

    ``domain="exterior"`` means ``|z| > 1`` including infinity, so a
    numerator of higher total degree than the denominator is a pole there.
    With ``allow_pole_at_infinity`` a simple pole at infinity is tolerated
    in the exterior domain, and the mirrored simple pole at the origin in
    the disc.
    """
    if domain not in ("disc", "exterior"):
        raise InvalidInputError(f"unknown domain {domain!r}")
    if r.is_zero():
        return InnernessCertificate(False, domain, (), float("inf"))
    r = r.reduced()
    offending = []
    on_circle = False
    for p, m in r.poles():
        mod = abs(p)
        if abs(mod - 1.0) <= boundary_tol:
            offending.append((p, "pole"))
            on_circle = True
        elif domain == "disc" and mod < 1.0:
            if p == 0 and allow_pole_at_infinity and m <= 1:
                continue
            offending.append((p, "pole"))
        elif domain == "exterior" and mod > 1.0:
            offending.append((p, "pole"))
    if domain == "exterior":
        order = r.order_at_infinity()
        if order > (1 if allow_pole_at_infinity else 0):
            offending.append((complex(np.inf), "pole"))
    if on_circle:
        dev = float("inf")
    else:
        _, z = circle_points(grid_size)
        dev = float(np.max(np.abs(np.abs(r(z)) - 1.0)))
    verdict = not offending and dev <= modulus_tol
    return InnernessCertificate(verdict, domain, tuple(offending), dev)


@dataclass(frozen=True)
class SzegoResult:
    finite: bool
    value: float | None = None

    def __iter__(self):
        return iter((self.finite, self.value))


def _density_parts(f):
    """Return ``("rational", r)`` or ``("sampled", array)`` for density-like input."""
    if isinstance(f, RationalFunction):
        return "rational", f
    form = getattr(f, "form", None)
    if form == "rational":
        return "rational", f.rational
    if form == "sampled":
        return "sampled", np.asarray(f.samples, dtype=float)
    return "sampled", np.asarray(f, dtype=float)


def _mean_log_modulus(p: ComplexPolynomial) -> float:
    # Jensen: mean of log|p| over the circle
    val = np.log(abs(p.leading))
    if p.degree >= 1:
        for a, m in p.roots():
            val += m * np.log(max(1.0, abs(a)))
    return float(val)


def szego_condition(f) -> SzegoResult:
    """Whether ``mean(log f)`` over the circle is finite, and its value.

    Rational densities ``|r|^2`` are evaluated in closed form by Jensen's
    formula, which handles isolated zeros on the circle exactly. Sampled
    densities are finite iff every sample is positive; the value is the
    trapezoidal mean of ``log f``.
    """
    kind, data = _density_parts(f)
    if kind == "rational":
        if data.is_zero():
            return SzegoResult(False)
        val = 2.0 * (_mean_log_modulus(data.numerator) - _mean_log_modulus(data.denominator))
        return SzegoResult(True, val)
    if data.size == 0 or np.any(~np.isfinite(data)) or np.any(data <= 0):
        return SzegoResult(False)
    return SzegoResult(True, float(np.mean(np.log(data))))


@dataclass(frozen=True)
class CepstralOuter:
    """Circle samples of an outer function recovered from a sampled density.

    ``max_error`` is ``max | |outer|^2 - f |`` on the grid.
    """

    theta: np.ndarray
    samples: np.ndarray
    max_error: float

    def taylor_coefficients(self, count: int) -> np.ndarray:
        return (np.fft.fft(self.samples) / len(self.samples))[:count]


def outer_from_density(f, grid_size: int = CEPSTRAL_GRID) -> CepstralOuter:
    """Outer function with ``|outer|^2 = f`` on the circle, by the cepstral method.

    Parameters
    ----------
    f : SpectralDensity or array_like
        Sampled density on ``theta_k = 2 pi k / N`` with ``N`` a power of two.
        A rational density is first sampled on ``grid_size`` points.

    Raises
    ------
    DegenerateDensityError
        If any sample is zero or negative.
    NotPurelyInnovatingError
        If ``log f`` is not finite on the grid.
    """
    kind, data = _density_parts(f)
    if kind == "rational":
        _, z = circle_points(grid_size)
        data = np.abs(data(z)) ** 2
    n = data.size
    if n < 2 or n & (n - 1):
        raise InvalidInputError(f"grid size {n} is not a power of two")
    if np.any(data <= 0):
        raise DegenerateDensityError(
            "density has nonpositive samples; regularize it or use the rational path"
        )
    half_log = 0.5 * np.log(data)
    if not np.all(np.isfinite(half_log)):
        raise NotPurelyInnovatingError("log density is not finite on the grid")
    coef = np.fft.fft(half_log) / n
    weights = np.zeros(n)
    weights[0] = 1.0
    weights[1 : n // 2] = 2.0
    weights[n // 2] = 1.0
    analytic = np.fft.ifft(coef * weights) * n
    samples = np.exp(analytic)
    theta = 2 * np.pi * np.arange(n) / n
    err = float(np.max(np.abs(np.abs(samples) ** 2 - data)))
    return CepstralOuter(theta, samples, err)
