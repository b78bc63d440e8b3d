"""
Naive and dual scattering functions of a purely innovating process.

For ``psi`` in H^2 with spectral density ``|psi|^2`` and outer part
``psi_out``, the naive scattering function is ``psi_out / psi_out^*`` and the
dual one is its reciprocal, where ``^*`` is the conjugate reflection
``z -> conj(f(1/conj z))``. Both are kept as exact rational functions;
circle samples are derived from them.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError
from .hardy import BOUNDARY_TOL, FactorizedFunction, InnernessCertificate, is_inner
from .poly import RationalFunction, circle_points

__all__ = [
    "ScatteringPair",
    "CausalityVerdict",
    "RelationsReport",
    "naive_scattering",
    "dual_scattering",
    "scattering_pair",
    "causality_test",
    "relations_check",
]


@dataclass(frozen=True)
class ScatteringPair:
    naive: RationalFunction
    dual: RationalFunction
    source: FactorizedFunction

    def samples(self, grid_size: int):
        """``(theta, naive, dual)`` on the uniform circle grid."""
        theta, z = circle_points(grid_size)
        return theta, np.asarray(self.naive(z)), np.asarray(self.dual(z))

    def to_json(self) -> dict:
        return {"naive": self.naive.to_json(), "dual": self.dual.to_json()}

    def to_csv(self, grid_size: int) -> str:
        theta, sn, sd = self.samples(grid_size)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theta", "naive_re", "naive_im", "dual_re", "dual_im"])
        for row in zip(theta, sn.real, sn.imag, sd.real, sd.imag):
            w.writerow([format(float(v), ".17g") for v in row])
        return buf.getvalue()


@dataclass(frozen=True)
class CausalityVerdict:
    """Outcome of the causality test.

    ``offending_zeros_of_psi`` lists the nonzero inner (Blaschke) zeros of
    ``psi``; ``exterior_zeros_of_psi`` the zeros strictly outside the closed
    disc, which also obstruct causality. ``inner_trivial`` reports whether
    the inner part is a constant. ``closed_form_residual`` is filled in by
    callers that compare against a known closed form.
    """

    causal: bool
    certificate: InnernessCertificate
    offending_zeros_of_psi: tuple = ()
    exterior_zeros_of_psi: tuple = ()
    inner_trivial: bool = True
    closed_form_residual: float | None = None

    def to_json(self) -> dict:
        enc = lambda xs: [[complex(a).real, complex(a).imag] for a in xs]
        return {
            "causal": self.causal,
            "certificate": self.certificate.to_json(),
            "offending_zeros_of_psi": enc(self.offending_zeros_of_psi),
            "exterior_zeros_of_psi": enc(self.exterior_zeros_of_psi),
            "inner_trivial": self.inner_trivial,
            "closed_form_residual": self.closed_form_residual,
        }


def naive_scattering(fpsi: FactorizedFunction) -> RationalFunction:
    """``psi_out(z) / psi_out^*(z)`` as a reduced rational function."""
    out = fpsi.outer
    return (out / out.conj_reflection()).reduced()


def dual_scattering(fpsi: FactorizedFunction) -> RationalFunction:
    """Reciprocal of :func:`naive_scattering`."""
    return naive_scattering(fpsi).reciprocal()


def scattering_pair(fpsi: FactorizedFunction) -> ScatteringPair:
    naive = naive_scattering(fpsi)
    return ScatteringPair(naive, naive.reciprocal(), fpsi)


def _structural_causality(fpsi: FactorizedFunction, boundary_tol: float, allow_pole_at_infinity: bool):
    """Causality read off the zeros of psi and its degree balance.

    The naive function depends on ``psi_out`` only. It has a pole in the
    disc at ``1/conj(b)`` for every zero ``b`` of ``psi_out`` outside the
    closed disc (these are the exterior zeros of ``psi`` together with the
    reflections of its nonzero inner zeros), and at the origin when the
    outer part vanishes at infinity. Zeros of ``psi`` at the origin are
    harmless.
    """
    exterior = []
    psi = fpsi.original
    if psi.numerator.degree >= 1:
        for b, m in psi.numerator.roots():
            if abs(b) > 1.0 + boundary_tol:
                exterior.extend([complex(b)] * m)
    out = fpsi.outer
    deficit = out.denominator.degree - out.numerator.degree
    ok_degree = deficit <= (1 if allow_pole_at_infinity else 0)
    causal = not fpsi.inner.zeros and not exterior and ok_degree
    return causal, tuple(exterior), fpsi.inner.is_trivial()


def causality_test(
    fpsi: FactorizedFunction,
    *,
    boundary_tol: float = BOUNDARY_TOL,
    allow_pole_at_infinity: bool = False,
) -> CausalityVerdict:
    """Decide whether ``psi`` has causal scattering, two ways.

    Route one certifies that the naive scattering function is inner on the
    disc. Route two inspects ``psi`` directly: causal iff it has no nonzero
    zeros off the unit circle and its outer part does not vanish at
    infinity. For zeta-derived ``psi`` (which does not vanish at 0) this is
    the same as a trivial inner part with no exterior zeros.

    Raises
    ------
    ConsistencyError
        If the two routes disagree.
    """
    cert = is_inner(
        naive_scattering(fpsi), "disc",
        boundary_tol=boundary_tol, allow_pole_at_infinity=allow_pole_at_infinity,
    )
    structural, exterior, inner_trivial = _structural_causality(
        fpsi, boundary_tol, allow_pole_at_infinity
    )
    if structural != cert.verdict:
        raise ConsistencyError(
            f"causality routes disagree: naive inner={cert.verdict}, zero structure={structural}"
        )
    return CausalityVerdict(
        cert.verdict,
        cert,
        () if cert.verdict else fpsi.inner.zeros,
        exterior,
        inner_trivial,
    )


@dataclass(frozen=True)
class RelationsReport:
    modulus_deviation: float
    product_deviation: float
    reflection_deviation: float | None
    reflection_applicable: bool = field(default=True)

    def max_deviation(self) -> float:
        vals = [self.modulus_deviation, self.product_deviation]
        if self.reflection_deviation is not None:
            vals.append(self.reflection_deviation)
        return max(vals)


def relations_check(
    pair: ScatteringPair,
    grid_size: int = 1024,
    causal: bool | None = None,
    interior_radius: float = 0.5,
) -> RelationsReport:
    """Check ``|s| = 1``, ``s_naive s = 1`` and, for causal pairs, the reflection identity.

    The reflection identity ``conj(s_naive(conj z)) = s(1/z)`` is evaluated
    on the circle ``|z| = interior_radius`` inside the disc. It is skipped
    (``reflection_applicable = False``) for non-causal pairs.
    """
    _, z = circle_points(grid_size)
    sn = np.asarray(pair.naive(z))
    sd = np.asarray(pair.dual(z))
    mod = float(max(np.max(np.abs(np.abs(sd) - 1)), np.max(np.abs(np.abs(sn) - 1))))
    prod = float(np.max(np.abs(sn * sd - 1)))
    if causal is None:
        causal = causality_test(pair.source).causal
    if not causal:
        return RelationsReport(mod, prod, None, False)
    w = interior_radius * z
    lhs = np.conj(np.asarray(pair.naive(np.conj(w))))
    rhs = np.asarray(pair.dual(1.0 / w))
    return RelationsReport(mod, prod, float(np.max(np.abs(lhs - rhs))), True)
