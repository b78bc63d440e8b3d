"""
Zeta functions of curves over finite fields and the Riemann Hypothesis two ways.

``Z(T) = P(T) / ((1 - T)(1 - qT))`` with ``P`` of degree ``2g``. The curve's
time series is the moving average whose weights ``e_m`` are the Laurent
coefficients on the unit circle of

    z^-(g-1) * q^((g-1)/2) * (q-1)/h * Z(z / sqrt(q)),

and the Riemann Hypothesis (all roots of ``P`` on ``|T| = q^-1/2``) holds
exactly when that series has causal scattering.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    ConsistencyError,
    FieldTooLargeError,
    InconsistentCountsError,
    InvalidCurveError,
    InvalidInputError,
    UnsupportedModelError,
)
from .fields import MAX_FIELD_SIZE, FiniteField, prime_power
from .hardy import factor_rational
from .poly import ComplexPolynomial, RationalFunction, circle_points, laurent_coefficients
from .scattering import CausalityVerdict, ScatteringPair, causality_test, scattering_pair

__all__ = [
    "CurveSpec",
    "CurveZeta",
    "EmTable",
    "RootsVerdict",
    "RHReport",
    "count_points",
    "zeta_from_point_counts",
    "zeta_from_numerator",
    "zeta_from_curve",
    "class_number",
    "functional_equation_residual",
    "normalized_zeta",
    "e_coefficients",
    "e0_divisor_formula_genus1",
    "psi_from_zeta",
    "closed_form_naive",
    "rh_by_roots",
    "rh_by_scattering",
    "check_rh",
    "RH_TOL",
    "CLOSED_FORM_TOL",
]

RH_TOL = 1e-9
CLOSED_FORM_TOL = 1e-9
GENUS_ZERO_MESSAGE = "genus 0 curves are rejected: the construction assumes g >= 1"

_KINDS = {"weierstrass": "weierstrass", "hyperelliptic": "hyperelliptic",
          "artin_schreier_hyperelliptic": "hyperelliptic"}


def _degree(coeffs) -> int:
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d] == 0:
        d -= 1
    return d


@dataclass(frozen=True)
class CurveSpec:
    """A plane model ``y^2 + h(x) y = f(x)`` over F_q with prime-field coefficients.

    Weierstrass cubics and odd-degree hyperelliptic models (``deg f = 2g+1``,
    ``deg h <= g``) both have a single point at infinity on the smooth model.
    """

    q: int
    genus: int
    kind: str
    h: tuple = ()
    f: tuple = ()

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidCurveError(GENUS_ZERO_MESSAGE)
        p, _ = prime_power(self.q)
        kind = _KINDS.get(self.kind)
        if kind is None:
            raise UnsupportedModelError(f"unsupported model kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        h = tuple(int(c) % p for c in self.h)
        f = tuple(int(c) % p for c in self.f)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "f", f)
        if kind == "weierstrass" and (self.genus != 1 or _degree(f) != 3 or _degree(h) > 1):
            raise InvalidCurveError("a Weierstrass model is a genus-1 cubic with deg h <= 1")
        if kind == "hyperelliptic":
            if _degree(f) != 2 * self.genus + 1:
                raise InvalidCurveError(f"hyperelliptic model of genus {self.genus} needs deg f = {2 * self.genus + 1}")
            if _degree(h) > self.genus:
                raise InvalidCurveError(f"hyperelliptic model needs deg h <= {self.genus}")
        if p == 2 and _degree(h) < 0:
            raise InvalidCurveError("in characteristic 2 the model y^2 = f(x) is singular; supply h")

    @classmethod
    def weierstrass(cls, q: int, a1=0, a2=0, a3=0, a4=0, a6=0) -> "CurveSpec":
        """``y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6``."""
        return cls(q, 1, "weierstrass", (a3, a1), (a6, a4, a2, 1))

    @classmethod
    def hyperelliptic(cls, q: int, f, h=(), genus: int | None = None) -> "CurveSpec":
        if genus is None:
            genus = (_degree([int(c) for c in f]) - 1) // 2
        return cls(q, genus, "hyperelliptic", tuple(h), tuple(f))

    @classmethod
    def from_json(cls, q: int, genus: int, model: dict) -> "CurveSpec":
        kind = model.get("kind", "")
        if _KINDS.get(kind) == "weierstrass" and "a" in model:
            a1, a2, a3, a4, a6 = (list(model["a"]) + [0] * 5)[:5]
            spec = cls.weierstrass(q, a1, a2, a3, a4, a6)
            if genus != 1:
                raise InvalidCurveError("a Weierstrass model has genus 1")
            return spec
        return cls(q, genus, kind, tuple(model.get("h", ())), tuple(model.get("f", ())))

    def to_json(self) -> dict:
        return {"kind": self.kind, "h": list(self.h), "f": list(self.f)}


@lru_cache(maxsize=16)
def _field(p: int, n: int, modulus: tuple | None) -> FiniteField:
    return FiniteField(p, n, modulus)


def count_points(spec: CurveSpec, k: int = 1, modulus=None) -> int:
    """Number of F_{q^k}-points on the smooth projective model of ``spec``.

    Every ``x`` in the field is enumerated. For each one, the number of
    ``y`` with ``y^2 + h(x) y = f(x)`` is read off a table built by
    enumerating all ``y`` once (squares in odd characteristic, the values
    of ``w^2 + w`` in characteristic two). One point at infinity is added.

    Raises
    ------
    FieldTooLargeError
        If ``q^k`` exceeds the brute-force cap of 2^20 elements.
    """
    if k < 1:
        raise InvalidInputError("extension degree must be >= 1")
    p, e = prime_power(spec.q)
    if spec.q**k > MAX_FIELD_SIZE:
        raise FieldTooLargeError(f"F_{spec.q}^{k} has more than {MAX_FIELD_SIZE} elements")
    F = _field(p, e * k, None if modulus is None else tuple(modulus))
    x = F.elements()
    a = F.poly_eval(spec.h, x)
    b = F.poly_eval(spec.f, x)
    if p == 2:
        w = F.elements()
        table = np.bincount(F.add(F.mul(w, w), w), minlength=F.order)
        nz = a != 0
        v = F.mul(b[nz], F.inv(F.mul(a[nz], a[nz])))
        affine = int(np.sum(~nz)) + int(np.sum(table[v]))
    else:
        y = F.elements()
        is_square = np.zeros(F.order, dtype=bool)
        is_square[F.mul(y, y)] = True
        disc = F.add(F.mul(a, a), F.scale(b, 4))
        chi = np.where(disc == 0, 0, np.where(is_square[disc], 1, -1))
        affine = int(np.sum(1 + chi))
    return affine + 1


@dataclass(frozen=True)
class CurveZeta:
    """Zeta function data: numerator ``P(T) = sum b_i T^i`` of degree ``2g``.

    Construct through :func:`zeta_from_point_counts`,
    :func:`zeta_from_numerator` or :func:`zeta_from_curve`, which validate;
    direct construction does not (useful for malformed controls).
    """

    q: int
    genus: int
    numerator: tuple
    source: str = "numerator"
    synthetic: bool = False

    @property
    def P(self) -> ComplexPolynomial:
        return ComplexPolynomial([float(b) for b in self.numerator])

    @property
    def h(self) -> int:
        return class_number(self)

    def validate(self) -> "CurveZeta":
        q, g, b = self.q, self.genus, self.numerator
        if g < 1:
            raise InvalidCurveError(GENUS_ZERO_MESSAGE)
        prime_power(q)
        if len(b) != 2 * g + 1:
            raise InvalidCurveError(f"numerator must have 2g+1 = {2 * g + 1} coefficients")
        if any(int(x) != x for x in b):
            raise InvalidCurveError("numerator coefficients must be integers")
        if b[0] != 1:
            raise InvalidCurveError("numerator must satisfy P(0) = 1")
        for i in range(g + 1):
            if b[2 * g - i] != q ** (g - i) * b[i]:
                raise InvalidCurveError(
                    f"functional-equation symmetry fails: b_{2 * g - i} != q^{g - i} b_{i}")
        if sum(b) <= 0:
            raise InvalidCurveError(f"P(1) = {sum(b)} is not a positive class number")
        return self

    def zeta_function(self) -> RationalFunction:
        """``Z(T)`` as a rational function of ``T``."""
        return RationalFunction(self.P, ComplexPolynomial([1.0, -1.0]) * ComplexPolynomial([1.0, -float(self.q)]))

    def predicted_counts(self, kmax: int) -> list[int]:
        """``N_k = q^k + 1 - sum alpha_i^k`` for ``k = 1..kmax``, exactly."""
        g2 = 2 * self.genus
        e = [(-1) ** i * int(self.numerator[i]) for i in range(g2 + 1)]  # elementary symmetric
        s = []
        for k in range(1, kmax + 1):
            val = (-1) ** (k - 1) * k * (e[k] if k <= g2 else 0)
            for i in range(1, min(k, g2 + 1)):
                val += (-1) ** (i - 1) * e[i] * s[k - i - 1]
            s.append(val)
        return [self.q**k + 1 - s[k - 1] for k in range(1, kmax + 1)]

    def to_json(self) -> dict:
        return {"q": self.q, "genus": self.genus, "numerator": [int(b) for b in self.numerator],
                "source": self.source, "synthetic": self.synthetic}


def zeta_from_point_counts(q: int, g: int, counts) -> CurveZeta:
    """Numerator of ``Z(T)`` from ``N_1 .. N_g``.

    ``Z = exp(sum N_k T^k / k)`` is expanded exactly to degree ``g``,
    multiplied by ``(1 - T)(1 - qT)``, and the upper half of ``P`` is
    completed by the functional-equation symmetry ``b_{2g-i} = q^{g-i} b_i``.

    Raises
    ------
    InconsistentCountsError
        If the coefficients are not integral.
    InvalidCurveError
        For genus 0, a wrong number of counts, or ``P(1) <= 0``.
    """
    if g < 1:
        raise InvalidCurveError(GENUS_ZERO_MESSAGE)
    counts = [int(n) for n in counts]
    if len(counts) != g:
        raise InvalidCurveError(f"expected {g} point counts, got {len(counts)}")
    z = [Fraction(1)]
    for n in range(1, g + 1):
        z.append(sum(Fraction(counts[k - 1]) * z[n - k] for k in range(1, n + 1)) / n)
    # multiply by (1 - T)(1 - qT) = 1 - (q+1) T + q T^2
    lin = [1, -(q + 1), q]
    b = [sum(lin[j] * z[i - j] for j in range(3) if i - j >= 0) for i in range(g + 1)]
    for i, bi in enumerate(b):
        if bi.denominator != 1:
            raise InconsistentCountsError(f"coefficient b_{i} = {bi} is not an integer")
    b = [int(x) for x in b]
    full = b + [q ** (g - i) * b[i] for i in range(g - 1, -1, -1)]
    zc = CurveZeta(q, g, tuple(full), "point_counts")
    return zc.validate()


def zeta_from_numerator(q: int, g: int, numerator, synthetic: bool = False) -> CurveZeta:
    b = []
    for x in numerator:
        if float(x) != int(round(float(x))):
            raise InvalidCurveError("numerator coefficients must be integers")
        b.append(int(round(float(x))))
    return CurveZeta(q, g, tuple(b), "numerator", synthetic).validate()


def zeta_from_curve(spec: CurveSpec, modulus=None) -> CurveZeta:
    counts = [count_points(spec, k, modulus) for k in range(1, spec.genus + 1)]
    zc = zeta_from_point_counts(spec.q, spec.genus, counts)
    return CurveZeta(zc.q, zc.genus, zc.numerator, "model")


def class_number(zc: CurveZeta) -> int:
    """``h = P(1)``, the number of divisor classes of each degree."""
    return int(sum(int(b) for b in zc.numerator))


def functional_equation_residual(zc: CurveZeta, grid_size: int = 256) -> float:
    """``max |Z(1/(qT)) - q^(1-g) T^(2-2g) Z(T)|`` over ``|T| = q^-1/2``.

    The grid is rotated by half a step so it avoids the real axis.
    """
    q, g = zc.q, zc.genus
    theta = 2 * np.pi * (np.arange(grid_size) + 0.5) / grid_size
    t = np.exp(1j * theta) / math.sqrt(q)
    Z = zc.zeta_function()
    lhs = Z(1.0 / (q * t))
    rhs = q ** (1 - g) * t ** (2 - 2 * g) * Z(t)
    return float(np.max(np.abs(lhs - rhs)))


def normalized_zeta(zc: CurveZeta) -> RationalFunction:
    """``z^-(g-1) q^((g-1)/2) (q-1)/h Z(z/sqrt q)`` as a rational function of ``z``."""
    q, g = zc.q, zc.genus
    s = math.sqrt(q)
    const = q ** ((g - 1) / 2) * (q - 1) / class_number(zc)
    num = zc.P.scale_argument(1 / s) * const
    den = ComplexPolynomial([1.0, -1 / s]) * ComplexPolynomial([1.0, -s])
    return RationalFunction(num, den, -(g - 1))


@dataclass(frozen=True)
class EmTable:
    m: np.ndarray
    values: np.ndarray

    def __getitem__(self, m: int) -> float:
        return float(self.values[m - int(self.m[0])])

    def symmetry_deviation(self) -> float:
        """``max |e_-m - e_m|`` over the symmetric part of the range."""
        dev = 0.0
        for m in self.m:
            if -m in self.m:
                dev = max(dev, abs(self[m] - self[-m]))
        return dev

    def tail_deviation(self, q: int, g: int) -> float:
        """``max |e_m + q^(-|m|/2)|`` over ``|m| >= g``."""
        sel = np.abs(self.m) >= g
        if not sel.any():
            return 0.0
        return float(np.max(np.abs(self.values[sel] + q ** (-np.abs(self.m[sel]) / 2))))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "e_m"])
        for m, v in zip(self.m, self.values):
            w.writerow([int(m), format(float(v), ".17g")])
        return buf.getvalue()


def e_coefficients(zc: CurveZeta, m_min: int, m_max: int) -> EmTable:
    """Moving-average weights ``e_m``: Laurent coefficients of :func:`normalized_zeta`."""
    vals = laurent_coefficients(normalized_zeta(zc), m_min, m_max)
    if np.max(np.abs(vals.imag), initial=0.0) > 1e-9:
        raise ConsistencyError("e_m coefficients of a real numerator came out complex")
    return EmTable(np.arange(m_min, m_max + 1), vals.real.copy())


def e0_divisor_formula_genus1(q: int, h: int) -> float:
    """``e_0`` from the divisor-class sum for genus 1.

    Of the ``h`` classes of degree 0 only the trivial one has ``l = 1``; the
    rest have ``l = 0``, so ``e_0 = (h - 1 + q)/h - 2``.
    """
    return (h - 1 + q) / h - 2


def psi_from_zeta(zc: CurveZeta) -> RationalFunction:
    """The H^2 function ``psi`` whose squared modulus is the curve's spectral density.

    ``psi = q^((g-1)/2) (q-1)/h * (z - q^-1/2)/(1 - z q^-1/2) * Z(z/sqrt q)``.
    The factor ``z - q^-1/2`` cancels the pole of ``Z(z/sqrt q)`` inside the
    disc, leaving a double pole at ``sqrt q``.

    Raises
    ------
    ConsistencyError
        If the cancellation is not recognized.
    """
    q, g = zc.q, zc.genus
    s = math.sqrt(q)
    const = q ** ((g - 1) / 2) * (q - 1) / class_number(zc)
    blaschke = RationalFunction([-1 / s, 1.0], [1.0, -1 / s])
    Zs = RationalFunction(
        zc.P.scale_argument(1 / s),
        ComplexPolynomial([1.0, -1 / s]) * ComplexPolynomial([1.0, -s]),
    )
    psi = (blaschke * Zs * const).reduced()
    poles = psi.poles()
    if poles.degree != 2 or any(abs(abs(p) - s) > 1e-8 * s for p, _ in poles):
        raise ConsistencyError(f"pole of Z(z/sqrt q) at q^-1/2 was not cancelled: poles {poles.roots}")
    return psi


def closed_form_naive(q: int, g: int) -> RationalFunction:
    """``((z - q^-1/2)/(1 - z q^-1/2))^2 z^(2g-2)``."""
    s = math.sqrt(q)
    b = RationalFunction([-1 / s, 1.0], [1.0, -1 / s])
    return (b * b) * RationalFunction.monomial(2 * g - 2)


@dataclass(frozen=True)
class RootsVerdict:
    verdict: bool
    root_moduli: tuple
    roots: tuple = ()

    def __iter__(self):
        return iter((self.verdict, self.root_moduli))


def rh_by_roots(zc: CurveZeta, tol: float = RH_TOL) -> RootsVerdict:
    """Every root of ``P`` has modulus ``q^-1/2`` within ``tol``."""
    locs = zc.P.roots().locations()
    moduli = np.abs(locs)
    ok = bool(np.all(np.abs(moduli - zc.q**-0.5) <= tol))
    return RootsVerdict(ok, tuple(float(m) for m in moduli), tuple(complex(r) for r in locs))


def _closed_form_residual(pair: ScatteringPair, q: int, g: int, grid_size: int) -> float:
    _, z = circle_points(grid_size)
    return float(np.max(np.abs(pair.naive(z) - closed_form_naive(q, g)(z))))


def rh_by_scattering(
    zc: CurveZeta,
    grid_size: int = 256,
    allow_pole_at_infinity: bool = False,
    closed_form_tol: float = CLOSED_FORM_TOL,
) -> CausalityVerdict:
    """Causality of the curve's scattering.

    In the causal case the naive scattering function is compared with its
    closed form on a circle grid; the residual is recorded on the verdict.

    Raises
    ------
    ConsistencyError
        If a causal verdict comes with a closed-form residual above
        ``closed_form_tol``.
    """
    verdict, _ = _scatter(zc, grid_size, allow_pole_at_infinity, closed_form_tol)
    return verdict


def _scatter(zc, grid_size, allow_pole_at_infinity, closed_form_tol):
    fpsi = factor_rational(psi_from_zeta(zc))
    pair = scattering_pair(fpsi)
    verdict = causality_test(fpsi, allow_pole_at_infinity=allow_pole_at_infinity)
    if verdict.causal:
        res = _closed_form_residual(pair, zc.q, zc.genus, grid_size)
        if res > closed_form_tol:
            raise ConsistencyError(f"causal naive scattering misses its closed form by {res:.3g}")
        verdict = CausalityVerdict(
            verdict.causal, verdict.certificate, verdict.offending_zeros_of_psi,
            verdict.exterior_zeros_of_psi, verdict.inner_trivial, res,
        )
    return verdict, pair


@dataclass(frozen=True)
class RHReport:
    zeta: CurveZeta
    roots: RootsVerdict
    causality: CausalityVerdict
    pair: ScatteringPair
    em: EmTable
    functional_equation_residual: float

    @property
    def agreement(self) -> bool:
        return self.roots.verdict == self.causality.causal

    def verdict_line(self) -> str:
        return (f"RH: {'PASS' if self.roots.verdict else 'FAIL'} | "
                f"causal: {'yes' if self.causality.causal else 'no'} | "
                f"agreement: {'yes' if self.agreement else 'no'}")

    def to_json(self) -> dict:
        return {
            "q": self.zeta.q,
            "genus": self.zeta.genus,
            "synthetic": self.zeta.synthetic,
            "source": self.zeta.source,
            "P": [int(b) for b in self.zeta.numerator],
            "h": class_number(self.zeta),
            "roots": [{"root": [r.real, r.imag], "modulus": abs(r)} for r in self.roots.roots],
            "e_m": {str(int(m)): float(v) for m, v in zip(self.em.m, self.em.values)},
            "rh_by_roots": self.roots.verdict,
            "rh_by_scattering": self.causality.causal,
            "agreement": self.agreement,
            "causality": self.causality.to_json(),
            "scattering": self.pair.to_json(),
            "closed_form_residual": self.causality.closed_form_residual,
            "functional_equation_residual": self.functional_equation_residual,
        }


def check_rh(
    zc: CurveZeta,
    *,
    tol: float = RH_TOL,
    grid_size: int = 256,
    em_range: int = 20,
    allow_pole_at_infinity: bool = False,
) -> RHReport:
    """Run both Riemann Hypothesis routes and collect the evidence."""
    roots = rh_by_roots(zc, tol)
    causality, pair = _scatter(zc, grid_size, allow_pole_at_infinity, CLOSED_FORM_TOL)
    em = e_coefficients(zc, -em_range, em_range)
    return RHReport(zc, roots, causality, pair, em, functional_equation_residual(zc))
