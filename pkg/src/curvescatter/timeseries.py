"""
Second-order stationary time series, described through their spectral side.

A density is either rational (``f = |r|^2`` on the circle for a rational
function ``r``) or sampled on the uniform grid ``theta_k = 2 pi k / N``.
Moving-average models are finitely supported coefficient windows; sample
paths are produced from a counter-based generator so that any chunk of a
path can be regenerated independently of the rest.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .errors import InvalidInputError, InvalidModelError, NotPurelyInnovatingError
from .hardy import factor_rational, hardy_representative, outer_from_density, szego_condition
from .poly import ComplexPolynomial, RationalFunction, circle_points, decode_complex, laurent_coefficients

__all__ = [
    "SpectralDensity",
    "AutocovarianceSequence",
    "MovingAverageModel",
    "SamplePath",
    "Verdict",
    "autocovariance",
    "one_sided_representation",
    "synthesize",
    "white_noise",
    "estimate_autocovariance",
    "purely_innovating",
    "BARTLETT_WINDOW",
    "SE_FACTOR",
]

BARTLETT_WINDOW = 64
SE_FACTOR = 5.0
PSD_TOL = 1e-9


@dataclass(frozen=True)
class SpectralDensity:
    """Absolutely continuous spectral density on the unit circle.

    Build with :meth:`from_rational` or :meth:`from_samples`.
    """

    form: str
    rational: RationalFunction | None = None
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.form == "rational":
            if self.rational is None:
                raise InvalidInputError("rational density needs a rational function")
        elif self.form == "sampled":
            s = np.asarray(self.samples, dtype=float)
            if s.ndim != 1 or s.size == 0:
                raise InvalidInputError("sampled density needs a nonempty 1-d grid")
            if np.any(s < 0) or not np.all(np.isfinite(s)):
                raise InvalidInputError("density samples must be finite and nonnegative")
            s = s.copy()
            s.setflags(write=False)
            object.__setattr__(self, "samples", s)
        else:
            raise InvalidInputError(f"unknown density form {self.form!r}")

    @classmethod
    def from_rational(cls, r) -> "SpectralDensity":
        if isinstance(r, ComplexPolynomial):
            r = RationalFunction(r)
        return cls("rational", rational=r)

    @classmethod
    def from_samples(cls, values) -> "SpectralDensity":
        return cls("sampled", samples=np.asarray(values, dtype=float))

    @property
    def total_mass(self) -> float:
        return float(autocovariance(self, 0).gamma[0].real)

    def evaluate(self, grid_size: int) -> np.ndarray:
        if self.form == "sampled":
            if grid_size != self.samples.size:
                raise InvalidInputError("sampled density is fixed to its own grid")
            return np.asarray(self.samples)
        _, z = circle_points(grid_size)
        return np.abs(self.rational(z)) ** 2

    def to_json(self) -> dict:
        if self.form == "rational":
            return {"form": "rational", "r": self.rational.to_json()}
        return {"form": "sampled", "samples": [float(x) for x in self.samples]}

    @classmethod
    def from_json(cls, data: dict) -> "SpectralDensity":
        if data.get("form") == "rational" or "r" in data:
            return cls.from_rational(RationalFunction.from_json(data["r"]))
        return cls.from_samples(data["samples"])


@dataclass(frozen=True)
class AutocovarianceSequence:
    """``gamma[j]`` for lags ``0..max_lag``; negative lags by conjugate symmetry.

    Estimates carry per-lag ``standard_errors``.
    """

    gamma: np.ndarray
    standard_errors: np.ndarray | None = None

    @property
    def max_lag(self) -> int:
        return len(self.gamma) - 1

    def __call__(self, j: int) -> complex:
        return self.gamma[j] if j >= 0 else np.conj(self.gamma[-j])

    def toeplitz(self, k: int | None = None) -> np.ndarray:
        k = self.max_lag if k is None else k
        idx = np.arange(k + 1)
        lags = idx[None, :] - idx[:, None]
        g = self.gamma
        return np.where(lags >= 0, g[np.abs(lags)], np.conj(g[np.abs(lags)]))

    def is_positive_semidefinite(self, k: int | None = None, tol: float = PSD_TOL) -> bool:
        eig = np.linalg.eigvalsh(self.toeplitz(k))
        return bool(eig.min() >= -tol * max(1.0, abs(self.gamma[0])))


@dataclass(frozen=True)
class MovingAverageModel:
    """``X_n = sum_k c_k Y_{n-k}`` with ``c_k`` given for ``k = offset .. offset + len - 1``.

    ``tail_bound`` bounds the squared l2 norm of coefficients dropped by
    truncation (zero for an exact finite model).
    """

    coefficients: np.ndarray
    offset: int = 0
    tail_bound: float = 0.0

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        if not np.all(np.isfinite(c)):
            raise InvalidModelError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    @property
    def sided(self) -> str:
        return "one_sided" if self.offset >= 0 else "bi"

    @property
    def lags(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.coefficients))

    def is_empty(self) -> bool:
        return not np.any(self.coefficients != 0)

    def transfer_function(self) -> RationalFunction:
        """``psi(z) = sum_k c_k z^k``."""
        return RationalFunction(self.coefficients, [1.0], self.offset)

    def density(self) -> SpectralDensity:
        """Spectral density ``|psi|^2`` of the moving average driven by white noise."""
        return SpectralDensity.from_rational(self.transfer_function())

    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "coefficients": [[c.real, c.imag] for c in self.coefficients],
            "tail_bound": self.tail_bound,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MovingAverageModel":
        return cls(
            np.array([decode_complex(c) for c in data["coefficients"]]),
            int(data.get("offset", 0)),
            float(data.get("tail_bound", 0.0)),
        )


@dataclass(frozen=True)
class SamplePath:
    values: np.ndarray
    seed: int
    model: MovingAverageModel
    noise_kind: str = "gaussian"

    def __len__(self):
        return len(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value"])
        for i, v in enumerate(self.values):
            w.writerow([i, format(float(v), ".17g")])
        return buf.getvalue()


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def autocovariance(f: SpectralDensity, max_lag: int) -> AutocovarianceSequence:
    """``gamma_j = integral of exp(i j theta) f dtheta / 2pi`` for ``j = 0..max_lag``.

    That is the Laurent coefficient of ``f`` at index ``-j``, which equals
    ``E[X_n conj(X_{n+j})]`` for the process with density ``f``. Rational
    densities are expanded exactly as ``r * r_reflected``; sampled densities
    use the discrete Fourier transform of the grid.
    """
    if max_lag < 0:
        raise InvalidInputError("max_lag must be nonnegative")
    if f.form == "rational":
        r = f.rational
        g = laurent_coefficients(r * r.conj_reflection(), -max_lag, 0)[::-1]
    else:
        s = np.asarray(f.samples)
        n = s.size
        if max_lag >= n:
            raise InvalidInputError("max_lag exceeds the density grid")
        g = np.fft.ifft(s)[: max_lag + 1]
    g = np.asarray(g, dtype=complex).copy()
    g[0] = g[0].real
    return AutocovarianceSequence(g)


def purely_innovating(f: SpectralDensity) -> Verdict:
    """Purely-innovating test: absolutely continuous and finite Szego integral.

    Densities given by this package are absolutely continuous by
    construction, so the test reduces to the log-integrability of ``f``.
    """
    res = szego_condition(f)
    if not res.finite:
        return Verdict(False, "Szego condition fails: integral of log f diverges to -infinity")
    return Verdict(True, f"integral of log f = {res.value:.12g}")


def one_sided_representation(f: SpectralDensity, truncation: int) -> MovingAverageModel:
    """Causal moving-average coefficients ``c_0..c_truncation`` realizing ``f``.

    The coefficients are the Taylor coefficients at the origin of the outer
    factor of ``f``. The reported ``tail_bound`` bounds the dropped squared
    norm ``sum_{n > truncation} |c_n|^2`` by a Cauchy estimate on a circle
    between 1 and the nearest pole (rational path), or by the remaining grid
    coefficients (sampled path).

    Raises
    ------
    NotPurelyInnovatingError
        When the Szego condition fails.
    """
    if truncation < 0:
        raise InvalidInputError("truncation must be nonnegative")
    v = purely_innovating(f)
    if not v:
        raise NotPurelyInnovatingError(v.reason)
    if f.form == "sampled":
        outer = outer_from_density(f)
        coef = np.fft.fft(outer.samples) / len(outer.samples)
        half = len(coef) // 2
        c = coef[: truncation + 1] if truncation < half else np.concatenate(
            [coef[:half], np.zeros(truncation + 1 - half)])
        tail = float(np.sum(np.abs(coef[truncation + 1 : half]) ** 2))
        return MovingAverageModel(c, 0, tail)

    outer = factor_rational(hardy_representative(f.rational)).outer
    c = laurent_coefficients(outer, 0, truncation)
    return MovingAverageModel(c, 0, _tail_bound(outer, truncation))


def _tail_bound(outer: RationalFunction, truncation: int) -> float:
    if outer.denominator.degree < 1:
        coeffs = outer.numerator.coeffs
        return float(np.sum(np.abs(coeffs[truncation + 1 :]) ** 2))
    rho = min(abs(p) for p, _ in outer.poles())
    radius = np.sqrt(rho)
    _, z = circle_points(4096)
    bound = float(np.max(np.abs(outer(radius * z))))
    # |c_n| <= M_R R^-n summed over n > truncation
    r2 = radius**-2
    return bound**2 * r2 ** (truncation + 1) / (1.0 - r2)


_NOISE_KINDS = ("gaussian", "rademacher")


def white_noise(seed: int, length: int, noise_kind: str = "gaussian", start: int = 0) -> np.ndarray:
    """Unit-variance white noise ``Y_start .. Y_{start+length-1}`` for a given seed.

    Each value consumes exactly one 64-bit Philox output, so any window can
    be produced by jumping the counter: concatenated chunks equal one serial
    draw.
    """
    if noise_kind not in _NOISE_KINDS:
        raise InvalidInputError(f"noise_kind must be one of {_NOISE_KINDS}")
    if start < 0:
        raise InvalidInputError("start must be nonnegative")
    bg = np.random.Philox(key=int(seed) & (2**64 - 1))
    bg.advance(start // 4)
    raw = bg.random_raw(length + start % 4)[start % 4 :]
    if noise_kind == "rademacher":
        return np.where(raw >> np.uint64(63), 1.0, -1.0)
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    return ndtri(u)


def synthesize(model: MovingAverageModel, n: int, seed: int, noise_kind: str = "gaussian") -> SamplePath:
    """Deterministic sample path ``X_0 .. X_{n-1}`` of a finite moving average.

    The noise window is widened by the coefficient support so that every
    emitted value uses the full filter.

    Raises
    ------
    InvalidModelError
        If the model has no nonzero coefficient or complex coefficients.
    """
    if n < 1:
        raise InvalidInputError("path length must be at least 1")
    if model.is_empty():
        raise InvalidModelError("moving-average model has empty coefficient support")
    c = model.coefficients
    if np.any(np.abs(c.imag) > 0):
        raise InvalidModelError("sample paths are real; model coefficients must be real")
    width = len(c) - 1
    y = white_noise(seed, n + width, noise_kind)
    x = np.convolve(y, c.real, mode="valid")
    x.setflags(write=False)
    return SamplePath(x, int(seed), model, noise_kind)


def estimate_autocovariance(
    path, max_lag: int, window: int = BARTLETT_WINDOW
) -> AutocovarianceSequence:
    """Biased sample autocovariances with Bartlett standard errors.

    ``gamma_hat_j = (1/n) sum_t x_t x_{t+j}`` (the mean is known to be
    zero and not subtracted). The standard error at lag ``j`` uses
    Bartlett's formula with plug-in estimates summed over ``|k| <= window``.
    """
    x = np.asarray(getattr(path, "values", path), dtype=float)
    n = x.size
    if max_lag < 0 or n < 4 * max_lag or n == 0:
        raise InvalidInputError(f"path of length {n} is too short for max_lag {max_lag}")
    top = min(max_lag + window, n - 1)
    nfft = 1 << int(np.ceil(np.log2(2 * n)))
    spec = np.fft.rfft(x, nfft)
    acov = np.fft.irfft(spec * np.conj(spec), nfft)[: top + 1] / n
    g = np.concatenate([acov[::-1], acov[1:]])  # lags -top..top
    var = np.empty(max_lag + 1)
    ks = np.arange(-window, window + 1)
    for j in range(max_lag + 1):
        a = _lag(g, top, ks)
        b = _lag(g, top, ks + j) * _lag(g, top, ks - j)
        var[j] = np.sum(a * a + b) / n
    return AutocovarianceSequence(acov[: max_lag + 1].astype(complex), np.sqrt(np.maximum(var, 0.0)))


def _lag(g: np.ndarray, top: int, k: np.ndarray) -> np.ndarray:
    out = np.zeros(k.shape)
    ok = np.abs(k) <= top
    out[ok] = g[k[ok] + top]
    return out
