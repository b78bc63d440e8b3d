import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from corpus import random_psi
from curvescatter import (
    InvalidInputError,
    InvalidModelError,
    MovingAverageModel,
    NotPurelyInnovatingError,
    RationalFunction,
    SpectralDensity,
    autocovariance,
    circle_points,
    estimate_autocovariance,
    one_sided_representation,
    purely_innovating,
    synthesize,
    white_noise,
)
from curvescatter.timeseries import SE_FACTOR
from curvescatter.zeta import e_coefficients, normalized_zeta, zeta_from_point_counts

WHITE = SpectralDensity.from_rational(RationalFunction([1]))


def curve_model(trunc):
    em = e_coefficients(zeta_from_point_counts(2, 1, [3]), -trunc, trunc)
    return MovingAverageModel(em.values, -trunc)


def test_white_noise_autocovariance():
    assert_allclose(autocovariance(WHITE, 4).gamma, [1, 0, 0, 0, 0])


def test_ma1_autocovariance():
    f = SpectralDensity.from_rational(RationalFunction([1, 0.5]))
    acv = autocovariance(f, 3)
    assert_allclose(acv.gamma, [1.25, 0.5, 0, 0], atol=1e-15)
    assert acv(-1) == acv(1)


def test_sampled_autocovariance_matches_rational():
    r = RationalFunction([1, -0.3, 0.2], [1, -0.4])
    _, z = circle_points(2**12)
    fs = SpectralDensity.from_samples(np.abs(r(z)) ** 2)
    assert_allclose(autocovariance(fs, 6).gamma, autocovariance(SpectralDensity.from_rational(r), 6).gamma,
                    atol=1e-12)


@given(st.lists(st.floats(-3, 3), min_size=1, max_size=6))
def test_real_coefficients_give_symmetric_real_autocovariance(c):
    acv = autocovariance(SpectralDensity.from_rational(RationalFunction(c)), 6)
    assert_allclose(acv.gamma.imag, 0, atol=1e-12)
    for j in range(7):
        assert acv(-j) == np.conj(acv(j))


def test_one_sided_examples():
    assert_allclose(one_sided_representation(WHITE, 3).coefficients, [1, 0, 0, 0], atol=1e-15)
    f = SpectralDensity.from_rational(RationalFunction([1, 0.5]))
    assert_allclose(one_sided_representation(f, 3).coefficients, [1, 0.5, 0, 0], atol=1e-14)
    f = SpectralDensity.from_rational(RationalFunction([-1, 2]))
    assert_allclose(one_sided_representation(f, 3).coefficients, [2, -1, 0, 0], atol=1e-14)


def test_one_sided_sampled_path():
    _, z = circle_points(2**12)
    f = SpectralDensity.from_samples(np.abs(2 * (z - 0.5)) ** 2)
    assert_allclose(one_sided_representation(f, 3).coefficients, [2, -1, 0, 0], atol=1e-6)


def test_one_sided_rejects_szego_failure():
    theta = 2 * np.pi * np.arange(256) / 256
    f = SpectralDensity.from_samples(np.where(theta < np.pi / 2, 0.0, 1.0))
    with pytest.raises(NotPurelyInnovatingError):
        one_sided_representation(f, 4)


def test_tail_bound_dominates_dropped_mass():
    r = RationalFunction([1, 0.2], [1, -0.6])
    f = SpectralDensity.from_rational(r)
    m = one_sided_representation(f, 10)
    full = one_sided_representation(f, 200).coefficients
    dropped = np.sum(np.abs(full[11:]) ** 2)
    assert dropped <= m.tail_bound


@pytest.mark.parametrize("seed", range(10))
def test_round_trip_through_one_sided_representation(seed):
    psi, _ = random_psi(np.random.default_rng(100 + seed))
    f = SpectralDensity.from_rational(psi)
    m = one_sided_representation(f, 400)
    back = autocovariance(m.density(), 8).gamma
    assert_allclose(back, autocovariance(f, 8).gamma, atol=1e-8)


def test_purely_innovating():
    assert purely_innovating(WHITE)
    zc = zeta_from_point_counts(2, 1, [3])
    assert purely_innovating(SpectralDensity.from_rational(normalized_zeta(zc)))
    theta = 2 * np.pi * np.arange(256) / 256
    v = purely_innovating(SpectralDensity.from_samples(np.where(theta < np.pi / 2, 0.0, 1.0)))
    assert not v and "Szego" in v.reason


@pytest.mark.parametrize("acv", [
    autocovariance(SpectralDensity.from_rational(RationalFunction([1, 0.5])), 12),
    autocovariance(SpectralDensity.from_rational(RationalFunction([1, -0.9, 0.3], [1, 0.5])), 12),
])
def test_toeplitz_positivity(acv):
    assert acv.is_positive_semidefinite(12)


def test_identity_filter_reproduces_noise():
    p = synthesize(MovingAverageModel(np.array([1.0]), 0), 1000, seed=5)
    assert_allclose(p.values, white_noise(5, 1000))


def test_chunks_equal_serial_draw():
    serial = white_noise(11, 1003, "gaussian")
    chunks = np.concatenate([white_noise(11, 250, "gaussian", start=s) for s in range(0, 1000, 250)]
                            + [white_noise(11, 3, "gaussian", start=1000)])
    assert np.array_equal(serial, chunks)
    assert np.array_equal(white_noise(11, 9, "rademacher", start=5), white_noise(11, 14, "rademacher")[5:])


def test_synthesis_is_reproducible():
    m = curve_model(20)
    a = synthesize(m, 1000, seed=2024)
    b = synthesize(m, 1000, seed=2024)
    assert np.array_equal(a.values, b.values)
    assert a.to_csv() == b.to_csv()


def test_golden_curve_path():
    # frozen from the first run
    p = synthesize(curve_model(20), 1000, seed=2024)
    assert p.values[0] == 1.1668329878670805
    assert p.values[999] == -0.5910649412935586


def test_ma1_sample_mean():
    n = 2**16
    p = synthesize(MovingAverageModel(np.array([1.0, 0.5]), 0), n, seed=42)
    assert abs(p.values.mean()) < 5 * (5 / 4 / n) ** 0.5 * 2


def test_rademacher_noise_is_unit_variance_sign():
    y = white_noise(3, 10000, "rademacher")
    assert set(np.unique(y)) == {-1.0, 1.0}
    assert abs(y.mean()) < 5 / 100


@pytest.mark.parametrize("model, seed", [
    (MovingAverageModel(np.array([1.0]), 0), 1),
    (MovingAverageModel(np.array([1.0, 0.5]), 0), 3),
])
@pytest.mark.parametrize("noise_kind", ["gaussian", "rademacher"])
def test_estimates_within_five_standard_errors(model, seed, noise_kind):
    est = estimate_autocovariance(synthesize(model, 2**20, seed, noise_kind), 8)
    ana = autocovariance(model.density(), 8).gamma
    assert np.all(np.abs(est.gamma - ana) <= SE_FACTOR * est.standard_errors)
    assert est.is_positive_semidefinite(8)


def test_model_errors():
    with pytest.raises(InvalidModelError):
        synthesize(MovingAverageModel(np.zeros(3), 0), 10, seed=0)
    with pytest.raises(InvalidModelError):
        synthesize(MovingAverageModel(np.array([1j]), 0), 10, seed=0)
    with pytest.raises(InvalidInputError):
        estimate_autocovariance(np.ones(10), 8)


def test_model_json_round_trip():
    m = MovingAverageModel(np.array([1.0, -0.5 + 0.25j]), -1, 1e-3)
    back = MovingAverageModel.from_json(m.to_json())
    assert_allclose(back.coefficients, m.coefficients)
    assert back.offset == -1 and back.tail_bound == 1e-3
