import logging

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from corpus import random_psi
from curvescatter import (
    BlaschkeProduct,
    DegenerateDensityError,
    NotHardyError,
    RationalFunction,
    SpectralDensity,
    circle_points,
    factor_rational,
    is_inner,
    outer_from_density,
    szego_condition,
)

_, Z = circle_points(1024)


def test_constant_is_its_own_outer():
    f = factor_rational(RationalFunction([3]))
    assert f.inner.is_trivial()
    assert_allclose(f.outer(Z), 3)


def test_interior_zero_goes_to_blaschke_factor():
    psi = RationalFunction([-1, 2])  # 2(z - 1/2)
    f = factor_rational(psi)
    assert_allclose(f.inner.zeros, [0.5])
    assert f.outer(0).real > 0 and abs(f.outer(0).imag) < 1e-15
    assert_allclose(f.outer(Z), 2 - Z, atol=1e-14)
    assert_allclose(np.abs(f.outer(Z)), np.abs(psi(Z)), atol=1e-14)
    b = (Z - 0.5) / (1 - Z / 2)
    const = f.inner(Z) / b
    assert_allclose(np.abs(const), 1, atol=1e-14)
    assert np.ptp(const.real) < 1e-12


def test_zero_at_origin_is_inner():
    f = factor_rational(RationalFunction([0, 1, 0.5]))
    assert f.inner.monomial_power == 1 and not f.inner.zeros
    assert_allclose(f.outer(Z), 1 + Z / 2, atol=1e-14)


def test_pole_inside_disc_is_not_hardy():
    with pytest.raises(NotHardyError):
        factor_rational(RationalFunction([1], [1, -2]))


def test_boundary_zero_stays_outer(caplog):
    with caplog.at_level(logging.INFO, logger="curvescatter"):
        f = factor_rational(RationalFunction([1, 1]))
    assert f.inner.is_trivial()
    assert_allclose(f.boundary_zeros, [-1], atol=1e-12)
    assert any("boundary" in rec.message for rec in caplog.records)


def test_is_inner_examples():
    assert is_inner(RationalFunction([0, 1]), "disc").verdict
    s = 2**-0.5
    b = RationalFunction([-s, 1], [1, -s])
    assert is_inner(b * b, "disc").verdict
    cert = is_inner(RationalFunction([1, -0.5], [-0.5, 1]), "disc")
    assert not cert.verdict
    locs = [loc for loc, kind in cert.offending_roots if kind == "pole"]
    assert_allclose(locs, [0.5], atol=1e-12)


def test_exterior_domain():
    # 1/B is inner for the exterior when B is a Blaschke factor
    b = RationalFunction([-0.3, 1], [1, -0.3])
    assert is_inner(b.reciprocal(), "exterior").verdict
    assert not is_inner(b, "exterior").verdict


@given(st.lists(st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False), max_size=6),
       st.integers(0, 3), st.floats(0, 6.28))
def test_blaschke_products_are_inner(zeros, k, phase):
    b = BlaschkeProduct(tuple(zeros), k, np.exp(1j * phase))
    assert is_inner(b.as_rational(), "disc").verdict
    assert_allclose(np.abs(b(Z)), 1, atol=1e-10)


@pytest.mark.parametrize("seed", range(25))
def test_factorization_invariants(seed):
    psi, _ = random_psi(np.random.default_rng(seed))
    f = factor_rational(psi)
    assert np.max(np.abs(f.product()(Z) - psi(Z))) < 1e-9
    assert np.max(np.abs(np.abs(f.inner(Z)) - 1)) < 1e-10
    if f.outer.numerator.degree >= 1:
        assert f.outer.numerator.roots().moduli().min() >= 1 - 1e-6
    # idempotence
    assert factor_rational(f.outer).inner.is_trivial()


# the cepstral path needs a strictly positive density
POSITIVE_SEEDS = [s for s in range(60) if not random_psi(np.random.default_rng(s))[1]][:20]


@pytest.mark.parametrize("seed", POSITIVE_SEEDS)
def test_cepstral_outer_matches_exact(seed):
    psi, _ = random_psi(np.random.default_rng(seed))
    exact = factor_rational(psi).outer
    cep = outer_from_density(SpectralDensity.from_rational(psi), 2**14)
    _, z = circle_points(2**14)
    assert np.max(np.abs(cep.samples - exact(z))) < 1e-6


def test_cepstral_examples():
    _, z = circle_points(2**12)
    one = outer_from_density(np.ones(2**12))
    assert_allclose(one.samples, 1, atol=1e-14)
    c = outer_from_density(np.abs(1 + z / 2) ** 2)
    assert_allclose(c.samples, 1 + z / 2, atol=1e-6)
    c = outer_from_density(np.abs(2 * (z - 0.5)) ** 2)
    assert_allclose(c.samples, 2 * (1 - z / 2), atol=1e-6)
    assert_allclose(c.taylor_coefficients(3), [2, -1, 0], atol=1e-6)


def test_cepstral_rejects_zero_samples():
    f = np.ones(64)
    f[3] = 0
    with pytest.raises(DegenerateDensityError):
        outer_from_density(f)


def test_szego_examples():
    finite, value = szego_condition(SpectralDensity.from_rational(RationalFunction([1])))
    assert finite and value == 0
    finite, value = szego_condition(SpectralDensity.from_rational(RationalFunction([1, -1])))
    assert finite and abs(value) < 1e-15
    theta = 2 * np.pi * np.arange(1024) / 1024
    arc = np.where(theta <= np.pi / 2, 0.0, 1.0)
    finite, value = szego_condition(SpectralDensity.from_samples(arc))
    assert not finite and value is None


def test_szego_jensen_matches_quadrature():
    r = RationalFunction([2, -1, 0.3j], [1, 0.4])
    _, value = szego_condition(SpectralDensity.from_rational(r))
    _, z = circle_points(2**14)
    assert_allclose(value, np.mean(np.log(np.abs(r(z)) ** 2)), atol=1e-12)
