"""
Complex polynomials and rational functions on and around the unit circle.

Everything downstream (Hardy-space factorization, scattering functions, the
normalized zeta function of a curve) is an exact rational function of ``z``;
this module owns their representation, root finding, circle sampling and
Laurent expansion on the annulus containing ``|z| = 1``.

Coefficient arrays are always stored lowest degree first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, NumericalFailureError, PoleOnBoundaryError

__all__ = [
    "ComplexPolynomial",
    "RationalFunction",
    "RootSet",
    "poly_eval",
    "poly_roots",
    "rational_eval_circle",
    "laurent_coefficients",
    "circle_points",
    "encode_complex",
    "decode_complex",
    "BOUNDARY_TOL",
    "ROOT_TOL",
    "MAX_ITER",
    "CLUSTER_RADIUS",
    "REDUCE_TOL",
]

BOUNDARY_TOL = 1e-9
ROOT_TOL = 1e-13
MAX_ITER = 200
CLUSTER_RADIUS = 1e-8
REDUCE_TOL = 1e-10

# loose radius used to look for stalled approximations of one multiple root
_PROBE_RADIUS = 1e-3
# accepted normwise backward error |p(z)| / sum |a_k| |z|^k of a computed root
_ACCEPT_BACKWARD = 1e-11
_EPS = np.finfo(float).eps


def _as_complex_array(values) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values, dtype=complex))
    if arr.ndim != 1:
        raise InvalidInputError("coefficients must be a one-dimensional sequence")
    return arr


def encode_complex(x: complex) -> list:
    x = complex(x)
    return [x.real, x.imag]


def decode_complex(item) -> complex:
    if isinstance(item, (list, tuple)):
        if len(item) != 2:
            raise InvalidInputError(f"complex number must be a [re, im] pair, got {item!r}")
        return complex(float(item[0]), float(item[1]))
    if isinstance(item, str):
        return complex(item.replace(" ", ""))
    return complex(item)


class ComplexPolynomial:
    """Immutable polynomial with complex coefficients.

    Parameters
    ----------
    coeffs : sequence of complex
        ``coeffs[k]`` multiplies ``z**k``. Trailing zeros are stripped, so
        the zero polynomial has an empty coefficient array and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex] = ()):
        c = _as_complex_array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs)
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1].copy() if nz.size else np.zeros(0, dtype=complex)
        c.setflags(write=False)
        self._c = c

    # construction helpers
    @classmethod
    def from_roots(cls, roots: Iterable[complex], leading: complex = 1.0) -> "ComplexPolynomial":
        c = np.array([complex(leading)])
        for r in roots:
            c = np.convolve(c, [-complex(r), 1.0])
        return cls(c)

    @classmethod
    def monomial(cls, k: int, coeff: complex = 1.0) -> "ComplexPolynomial":
        c = np.zeros(k + 1, dtype=complex)
        c[k] = coeff
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> complex:
        return complex(self._c[-1]) if len(self._c) else 0j

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._c.imag) <= tol))

    def __call__(self, z):
        return poly_eval(self, z)

    def __len__(self):
        return len(self._c)

    def __repr__(self):
        return f"ComplexPolynomial({np.array2string(self._c, precision=6, separator=', ')})"

    def __eq__(self, other):
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return len(self._c) == len(other._c) and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    # arithmetic
    def __add__(self, other):
        other = _coerce_poly(other)
        n = max(len(self._c), len(other._c))
        out = np.zeros(n, dtype=complex)
        out[: len(self._c)] += self._c
        out[: len(other._c)] += other._c
        return ComplexPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ComplexPolynomial(-self._c)

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return ComplexPolynomial(self._c * other)
        other = _coerce_poly(other)
        if self.is_zero() or other.is_zero():
            return ComplexPolynomial()
        return ComplexPolynomial(np.convolve(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ComplexPolynomial([1.0])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "ComplexPolynomial"):
        """Euclidean division, returning ``(quotient, remainder)``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return ComplexPolynomial(), self
        q, r = np.polydiv(self._c[::-1], other._c[::-1])
        return ComplexPolynomial(np.asarray(q)[::-1]), ComplexPolynomial(np.asarray(r)[::-1])

    def derivative(self, order: int = 1) -> "ComplexPolynomial":
        c = self._c
        for _ in range(order):
            if len(c) <= 1:
                return ComplexPolynomial()
            c = c[1:] * np.arange(1, len(c))
        return ComplexPolynomial(c)

    def conj(self) -> "ComplexPolynomial":
        return ComplexPolynomial(np.conj(self._c))

    def reversed(self, degree: int | None = None) -> "ComplexPolynomial":
        """Return ``z**degree * p(1/z)`` (defaults to the polynomial's own degree)."""
        if self.is_zero():
            return ComplexPolynomial()
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise InvalidInputError("reversal degree below polynomial degree")
        c = np.zeros(degree + 1, dtype=complex)
        c[: len(self._c)] = self._c
        return ComplexPolynomial(c[::-1])

    def scale_argument(self, a: complex) -> "ComplexPolynomial":
        """Return the polynomial ``z -> p(a z)``."""
        return ComplexPolynomial(self._c * np.power(complex(a), np.arange(len(self._c))))

    def low_order_zeros(self) -> int:
        """Multiplicity of the root at ``z = 0`` (exact zero coefficients only)."""
        nz = np.flatnonzero(self._c)
        return int(nz[0]) if nz.size else 0

    def roots(self, **kwargs) -> "RootSet":
        return poly_roots(self, **kwargs)

    def to_json(self) -> list:
        return [encode_complex(x) for x in self._c]

    @classmethod
    def from_json(cls, data: Sequence) -> "ComplexPolynomial":
        return cls([decode_complex(x) for x in data])


def _coerce_poly(obj) -> ComplexPolynomial:
    if isinstance(obj, ComplexPolynomial):
        return obj
    if isinstance(obj, (int, float, complex, np.number)):
        return ComplexPolynomial([obj])
    return ComplexPolynomial(obj)


def poly_eval(p: ComplexPolynomial, z):
    """Evaluate ``p`` at ``z`` (scalar or array) by Horner's rule."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for a in p.coeffs[::-1]:
        acc = acc * z + a
    return acc[()] if acc.ndim == 0 else acc


def _backward_error(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Normwise backward error of approximate roots ``z`` of coefficients ``c``."""
    val = np.zeros_like(z)
    mag = np.zeros(z.shape)
    az = np.abs(z)
    for a in c[::-1]:
        val = val * z + a
        mag = mag * az + abs(a)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(mag > 0, np.abs(val) / mag, 0.0)


@dataclass(frozen=True)
class RootSet:
    """Distinct roots of a polynomial with their multiplicities.

    ``residual`` is the largest ``|p(root)|`` over the distinct roots.
    """

    roots: tuple  # of (complex, int)
    residual: float

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def locations(self) -> np.ndarray:
        """All roots repeated according to multiplicity."""
        out = [r for r, m in self.roots for _ in range(m)]
        return np.array(out, dtype=complex)

    def distinct(self) -> np.ndarray:
        return np.array([r for r, _ in self.roots], dtype=complex)

    def multiplicities(self) -> np.ndarray:
        return np.array([m for _, m in self.roots], dtype=int)

    def moduli(self) -> np.ndarray:
        return np.abs(self.locations())

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    # radii from the upper convex hull of the Newton polygon (log|a_k| vs k)
    with np.errstate(divide="ignore"):
        la = np.log(np.abs(c))
    pts = [k for k in range(n + 1) if np.isfinite(la[k])]
    hull: list[int] = []
    for k in pts:
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            if (la[j] - la[i]) * (k - i) <= (la[k] - la[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(k)
    z = np.empty(n, dtype=complex)
    pos = 0
    for i, j in zip(hull[:-1], hull[1:]):
        cnt = j - i
        radius = math.exp((la[i] - la[j]) / cnt)
        ang = 2 * np.pi * np.arange(cnt) / cnt + 2 * np.pi * (i + 1) / (n + 1) + 0.4
        z[pos : pos + cnt] = radius * np.exp(1j * ang)
        pos += cnt
    return z


def _aberth(c: np.ndarray, tol: float, max_iter: int):
    n = len(c) - 1
    z = _initial_guesses(c)
    done = np.zeros(n, dtype=bool)
    dc = c[1:] * np.arange(1, n + 1)
    for _ in range(max_iter):
        p = poly_eval(ComplexPolynomial(c), z) if n else z
        dp = np.zeros_like(z)
        for a in dc[::-1]:
            dp = dp * z + a
        done |= _backward_error(c, z) <= 4 * _EPS
        if done.all():
            return z, True
        with np.errstate(divide="ignore", invalid="ignore"):
            w = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            corr = w / (1.0 - w * s)
        bad = ~np.isfinite(corr)
        if bad.any():
            # nudge collided or stationary iterates
            corr[bad] = 1e-3 * (1 + np.abs(z[bad])) * np.exp(1j * np.arange(bad.sum()))
        corr[done] = 0
        z = z - corr
        done |= np.abs(corr) <= tol * np.abs(z)
        if done.all():
            return z, True
    return z, False


def _single_linkage(z: np.ndarray, radius: float) -> list[list[int]]:
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = max(1.0, abs(z[i]), abs(z[j]))
            if abs(z[i] - z[j]) <= radius * scale:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _refine_multiple(p: ComplexPolynomial, c0: complex, m: int) -> complex:
    """Newton on the (m-1)-th derivative, where an m-fold root is simple."""
    if m == 1:
        return c0
    d = p.derivative(m - 1)
    dd = d.derivative()
    best, best_val = c0, abs(d(c0))
    cur = c0
    for _ in range(4):
        den = dd(cur)
        if den == 0:
            break
        cur = cur - d(cur) / den
        val = abs(d(cur))
        if val < best_val:
            best, best_val = cur, val
    return complex(best)


def _solve(c: np.ndarray, tol: float, max_iter: int) -> np.ndarray:
    """Roots of the monic coefficient vector ``c`` (no zero roots)."""
    z, ok = _aberth(c, tol, max_iter)
    if ok and np.all(_backward_error(c, z) <= _ACCEPT_BACKWARD):
        return z
    z = np.roots(c[::-1]).astype(complex)
    cp = ComplexPolynomial(c)
    dcp = cp.derivative()
    for _ in range(3):
        d = dcp(z)
        z = z - np.where(d != 0, cp(z) / np.where(d != 0, d, 1), 0)
    return z


def poly_roots(
    p: ComplexPolynomial,
    *,
    tol: float = ROOT_TOL,
    max_iter: int = MAX_ITER,
    cluster_radius: float = CLUSTER_RADIUS,
) -> RootSet:
    """All complex roots of ``p`` with multiplicities.

    Roots come from Aberth-Ehrlich simultaneous iteration, falling back to
    companion-matrix eigenvalues if the iteration stalls. Approximations
    within ``cluster_radius`` (relative to ``max(1, |z|)``) are merged. A
    multiple root perturbed further apart than that by rounding is
    recognized when the centroid of a loose cluster is itself an accurate
    root; merged roots are polished by Newton's method on the appropriate
    derivative.

    Raises
    ------
    InvalidInputError
        For constant or zero polynomials.
    NumericalFailureError
        If neither route yields roots with a small backward error.
    """
    if p.degree < 1:
        raise InvalidInputError("poly_roots needs a polynomial of degree >= 1")
    k0 = p.low_order_zeros()
    c = p.coeffs[k0:]
    found: list[tuple[complex, int]] = []
    if k0:
        found.append((0j, k0))
    if len(c) > 1:
        # mostly large roots: work with the reversed polynomial and invert
        rev = len(c) > 2 and abs(c[0]) > abs(c[-1])
        c = c[::-1] / c[0] if rev else c / c[-1]
        z = np.array([-c[0]]) if len(c) == 2 else _solve(c, tol, max_iter)
        be = _backward_error(c, z)
        if not np.all(be <= _ACCEPT_BACKWARD):
            raise NumericalFailureError(
                f"root finder failed: backward error {be.max():.3g}", best=1.0 / z if rev else z
            )
        clusters = _cluster_roots(ComplexPolynomial(c), z, cluster_radius)
        found.extend((1.0 / r, m) if rev else (r, m) for r, m in clusters)
    residual = max((abs(p(r)) for r, _ in found), default=0.0)
    return RootSet(tuple((complex(r), int(m)) for r, m in found), float(residual))


def _cluster_roots(p: ComplexPolynomial, z: np.ndarray, cluster_radius: float):
    centres = []
    for g in _single_linkage(z, cluster_radius):
        m = len(g)
        centres.append((_refine_multiple(p, complex(np.mean(z[g])), m), m))
    if len(centres) < 2:
        return centres
    locs = np.array([r for r, _ in centres])
    out = []
    for g in _single_linkage(locs, _PROBE_RADIUS):
        if len(g) == 1:
            out.append(centres[g[0]])
            continue
        m = sum(centres[i][1] for i in g)
        cen = sum(centres[i][0] * centres[i][1] for i in g) / m
        cand = _refine_multiple(p, cen, m)
        # accept only if the merged point is a root to working precision
        # and the derivatives below order m vanish there as well
        ok = _backward_error(p.coeffs, np.array([cand]))[0] <= 64 * _EPS
        ok = ok and _backward_error(p.derivative(m - 1).coeffs, np.array([cand]))[0] <= 1e-9
        if ok:
            out.append((cand, m))
        else:
            out.extend(centres[i] for i in g)
    return out


def circle_points(grid_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(theta, z)`` with ``theta_k = 2 pi k / grid_size``."""
    if grid_size < 1:
        raise InvalidInputError("grid_size must be positive")
    theta = 2 * np.pi * np.arange(grid_size) / grid_size
    return theta, np.exp(1j * theta)


class RationalFunction:
    """``z**shift * numerator(z) / denominator(z)``.

    Factors of ``z`` are always carried by ``shift``: after construction
    neither polynomial vanishes at the origin (unless the numerator is the
    zero polynomial). Reduction of common roots is explicit, see
    :meth:`reduced`.
    """

    __slots__ = ("numerator", "denominator", "shift")

    def __init__(self, numerator, denominator=(1.0,), shift: int = 0):
        num = _coerce_poly(numerator)
        den = _coerce_poly(denominator)
        if den.is_zero():
            raise InvalidInputError("denominator is the zero polynomial")
        shift = int(shift)
        kd = den.low_order_zeros()
        if kd:
            den = ComplexPolynomial(den.coeffs[kd:])
            shift -= kd
        if num.is_zero():
            shift = 0
        else:
            kn = num.low_order_zeros()
            if kn:
                num = ComplexPolynomial(num.coeffs[kn:])
                shift += kn
        self.numerator = num
        self.denominator = den
        self.shift = shift

    @classmethod
    def constant(cls, c: complex) -> "RationalFunction":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> "RationalFunction":
        return cls([c], [1.0], k)

    def __repr__(self):
        return (
            f"RationalFunction(num={self.numerator.coeffs.tolist()}, "
            f"den={self.denominator.coeffs.tolist()}, shift={self.shift})"
        )

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.power(z, self.shift) * self.numerator(z) / self.denominator(z)
        return out[()] if np.ndim(out) == 0 else out

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return RationalFunction(self.numerator * other, self.denominator, self.shift)
        if isinstance(other, ComplexPolynomial):
            other = RationalFunction(other)
        return RationalFunction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
            self.shift + other.shift,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero function")
        return RationalFunction(self.denominator, self.numerator, -self.shift)

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return self * (1.0 / other)
        if isinstance(other, ComplexPolynomial):
            other = RationalFunction(other)
        return self * other.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        return RationalFunction(self.numerator**k, self.denominator**k, self.shift * k)

    def conj_reflection(self) -> "RationalFunction":
        """The function ``z -> conj(r(1 / conj(z)))``.

        On the unit circle this is simply ``conj(r(z))``. For real
        coefficients it is ``r(1/z)``.
        """
        n, d = self.numerator, self.denominator
        if n.is_zero():
            return RationalFunction([0.0])
        return RationalFunction(
            n.conj().reversed(), d.conj().reversed(), -self.shift - n.degree + d.degree
        )

    def zeros(self, **kwargs) -> RootSet:
        """Finite nonzero zeros plus a zero at the origin of order ``shift``."""
        return _with_origin(self.numerator, max(self.shift, 0), **kwargs)

    def poles(self, **kwargs) -> RootSet:
        return _with_origin(self.denominator, max(-self.shift, 0), **kwargs)

    def order_at_infinity(self) -> int:
        """``deg(num) + shift - deg(den)``: positive means a pole at infinity."""
        return self.numerator.degree + self.shift - self.denominator.degree

    def reduced(self, tol: float = REDUCE_TOL) -> "RationalFunction":
        """Cancel numerator and denominator roots lying within ``tol`` of each other."""
        if self.is_zero() or self.numerator.degree < 1 or self.denominator.degree < 1:
            return self
        nr = [list(x) for x in self.numerator.roots()]
        dr = [list(x) for x in self.denominator.roots()]
        cancelled = False
        for a in nr:
            for b in dr:
                if a[1] and b[1] and abs(a[0] - b[0]) <= tol * max(1.0, abs(a[0])):
                    k = min(a[1], b[1])
                    a[1] -= k
                    b[1] -= k
                    cancelled = True
        if not cancelled:
            return self
        num = ComplexPolynomial.from_roots(
            [r for r, m in nr for _ in range(m)], self.numerator.leading
        )
        den = ComplexPolynomial.from_roots(
            [r for r, m in dr for _ in range(m)], self.denominator.leading
        )
        return RationalFunction(num, den, self.shift)

    def normalized(self) -> "RationalFunction":
        """Same function with a monic denominator."""
        lead = self.denominator.leading
        return RationalFunction(self.numerator * (1 / lead), self.denominator * (1 / lead), self.shift)

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "shift": self.shift,
        }

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if isinstance(data, (list, tuple)):
            return cls(ComplexPolynomial.from_json(data))
        return cls(
            ComplexPolynomial.from_json(data["numerator"]),
            ComplexPolynomial.from_json(data.get("denominator", [1.0])),
            int(data.get("shift", 0)),
        )


def _with_origin(poly: ComplexPolynomial, k: int, **kwargs) -> RootSet:
    if poly.degree >= 1:
        rs = poly.roots(**kwargs)
    else:
        rs = RootSet((), 0.0)
    if k:
        return RootSet(((0j, k),) + rs.roots, rs.residual)
    return rs


def _check_boundary(poles: RootSet, tol: float):
    for r, _ in poles:
        if abs(abs(r) - 1.0) <= tol:
            raise PoleOnBoundaryError(f"pole at {r:.12g} lies on the unit circle", pole=r)


def rational_eval_circle(
    r: RationalFunction, grid_size: int, boundary_tol: float = BOUNDARY_TOL
) -> np.ndarray:
    """Samples ``r(exp(2 pi i k / grid_size))`` for ``k = 0 .. grid_size - 1``.

    Raises
    ------
    PoleOnBoundaryError
        If a pole lies within ``boundary_tol`` of the unit circle.
    """
    _check_boundary(r.poles(), boundary_tol)
    _, z = circle_points(grid_size)
    return np.asarray(r(z), dtype=complex)


def _taylor_at(poly: ComplexPolynomial, a: complex, order: int) -> np.ndarray:
    """First ``order`` Taylor coefficients of ``poly`` about ``a``."""
    out = np.zeros(order, dtype=complex)
    c = poly.coeffs
    for i in range(min(order, len(c))):
        ks = np.arange(i, len(c))
        binom = np.array([math.comb(int(k), i) for k in ks], dtype=float)
        out[i] = np.sum(c[i:] * binom * np.power(complex(a), ks - i))
    return out


def _inverse_power_series(delta: complex, mult: int, order: int) -> np.ndarray:
    """Taylor coefficients in ``w`` of ``(delta + w) ** -mult``."""
    n = np.arange(order)
    binom = np.array([math.comb(mult + int(k) - 1, int(k)) for k in n], dtype=float)
    return delta ** (-mult) * binom * (-1.0 / delta) ** n


def laurent_coefficients(
    r: RationalFunction, m_min: int, m_max: int, boundary_tol: float = BOUNDARY_TOL
) -> np.ndarray:
    """Laurent coefficients of ``r`` on the annulus containing the unit circle.

    Computed by exact partial fractions over the poles: poles inside the
    circle expand in negative powers of ``z``, poles outside in nonnegative
    powers, and the polynomial part contributes directly.

    Returns
    -------
    ndarray of complex, length ``m_max - m_min + 1``
        Entry ``i`` is the coefficient of ``z**(m_min + i)``.
    """
    if m_max < m_min:
        raise InvalidInputError("m_max must be >= m_min")
    ms = np.arange(m_min, m_max + 1)
    out = np.zeros(len(ms), dtype=complex)
    if r.is_zero():
        return out
    num = r.numerator * ComplexPolynomial.monomial(max(r.shift, 0))
    den = r.denominator * ComplexPolynomial.monomial(max(-r.shift, 0))
    poles = r.poles()
    _check_boundary(poles, boundary_tol)

    quo, rem = num.divmod(den)
    for k, a in enumerate(quo.coeffs):
        if m_min <= k <= m_max:
            out[k - m_min] += a
    if rem.is_zero():
        return out

    plist = list(poles)
    lead = den.leading
    for idx, (p, mult) in enumerate(plist):
        # g(z) = rem(z) (z - p)^mult / den(z), expanded about p
        series = _taylor_at(rem, p, mult) / lead
        for jdx, (p2, m2) in enumerate(plist):
            if jdx != idx:
                series = np.convolve(series, _inverse_power_series(p - p2, m2, mult))[:mult]
        for i in range(mult):
            j = mult - i  # coefficient of (z - p)^(-j)
            a = series[i]
            if a == 0:
                continue
            if abs(p) < 1.0:
                sel = ms <= -j
                n = -ms[sel] - j
                binom = np.array([math.comb(int(x) + j - 1, j - 1) for x in n], dtype=float)
                out[sel] += a * binom * np.power(complex(p), n)
            else:
                sel = ms >= 0
                mm = ms[sel]
                binom = np.array([math.comb(int(x) + j - 1, j - 1) for x in mm], dtype=float)
                out[sel] += a * (-1) ** j * binom * np.power(complex(p), -(mm + j).astype(float))
    return out
