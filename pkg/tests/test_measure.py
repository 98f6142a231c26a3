import io

import numpy as np
import pytest

from su3kit import group, measure
from su3kit.group import CANONICAL_HIGH, compose_batch

from oracles import ks_two_sample_pvalue, ks_uniform_pvalue

SQ3 = np.sqrt(3.0)


def test_total_volume_closed_form():
    assert measure.total_volume() == pytest.approx((SQ3 / 2) * np.pi ** 5, rel=1e-15)
    assert measure.total_volume() == pytest.approx(265.0208, abs=5e-4)


def test_volume_mc_matches_closed_form_within_3_sigma():
    est, se = measure.volume_mc_estimate(1_000_000, seed=4)
    assert abs(est - measure.total_volume()) <= 3 * se


def test_samples_respect_canonical_ranges():
    p = measure.sample_haar(0, 20_000)
    assert p.min() >= 0.0
    assert np.all(p.max(axis=0) <= CANONICAL_HIGH)
    # the non-uniform marginals actually reach deep into their ranges
    assert p[:, 1].max() > 1.4 and p[:, 3].max() > 1.4


def test_sampling_is_deterministic_per_seed():
    a = measure.sample_haar(123, 500)
    b = measure.sample_haar(123, 500)
    c = measure.sample_haar(124, 500)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_theta_marginal_inverse_cdf():
    p = measure.sample_haar(1, 100_000)
    # sin^4(theta) should be exactly uniform under the inverse-CDF sampler
    assert ks_uniform_pvalue(np.sin(p[:, 3]) ** 4) > 0.01
    # and E[sin^2 theta] = 2/3
    s2 = np.sin(p[:, 3]) ** 2
    assert abs(s2.mean() - 2 / 3) <= 3 * s2.std(ddof=1) / np.sqrt(s2.size)


def test_beta_marginal_inverse_cdf():
    p = measure.sample_haar(2, 100_000)
    assert ks_uniform_pvalue(np.sin(p[:, 1]) ** 2) > 0.01
    assert ks_uniform_pvalue(np.sin(p[:, 5]) ** 2) > 0.01


def test_integrate_constant_is_exact():
    res = measure.integrate(lambda d: np.ones(d.shape[0]), n=1000, seed=0)
    assert res.estimate == 1.0
    assert res.std_error == 0.0
    assert res.n_samples == 1000 and res.seed == 0


def test_integrate_schur_diagonal_and_off_diagonal():
    res = measure.integrate(lambda d: np.abs(d[:, 0, 0]) ** 2, n=100_000, seed=5)
    assert abs(res.estimate - 1 / 3) <= 3 * res.std_error

    res = measure.integrate(lambda d: d[:, 0, 0] * d[:, 1, 1].conj(), n=100_000, seed=6)
    assert abs(res.estimate) <= 3 * res.std_error


def test_orthogonality_suite_all_81_within_4_sigma():
    report = measure.orthogonality_suite(100_000, seed=7)
    assert report.max_sigma() <= 4.0
    diag = report.estimates[0, 0, 0, 0]
    assert diag.real == pytest.approx(1 / 3, abs=4 * report.std_error_re[0, 0, 0, 0])
    # a fully off-diagonal entry sits at zero
    assert abs(report.estimates[0, 1, 0, 2]) <= 4 * max(report.std_error_re[0, 1, 0, 2],
                                                        report.std_error_im[0, 1, 0, 2])


def test_orthogonality_residual_shrinks_like_sqrt_n():
    worst_small = measure.orthogonality_suite(20_000, seed=8)
    worst_big = measure.orthogonality_suite(80_000, seed=9)
    r_small = np.abs(worst_small.estimates - worst_small.targets).max()
    r_big = np.abs(worst_big.estimates - worst_big.targets).max()
    ratio = r_small / r_big
    assert 2 / 1.5 <= ratio <= 2 * 1.5


def test_translation_invariance_left_and_right():
    n = 50_000
    angles = measure.sample_haar(10, n)
    d = compose_batch(angles)
    g = group.random_su3(1, np.random.default_rng(11))[0]
    gd = np.einsum('ab,mbc->mac', g, d)
    dg = np.einsum('mab,bc->mac', d, g)

    functions = [
        lambda u: np.abs(u[:, 0, 0]) ** 2,
        lambda u: np.abs(u[:, 2, 0]) ** 2,
        lambda u: (u[:, 0, 0] * u[:, 1, 1].conj()).real,
        lambda u: (u[:, 0, 1] * u[:, 2, 2].conj()).imag,
        lambda u: np.abs(np.trace(u, axis1=1, axis2=2)) ** 2,
        lambda u: np.trace(u, axis1=1, axis2=2).real,
        lambda u: (u[:, 0, 2] * u[:, 0, 0].conj()).real,
        lambda u: (u[:, 0, 2] * u[:, 0, 0].conj()).imag,
        lambda u: np.abs(u[:, 1, 2]) ** 4,
        lambda u: (u[:, 2, 2] ** 2 * u[:, 0, 0].conj() ** 2).real,
    ]
    for f in functions:
        base = f(d)
        for moved in (f(gd), f(dg)):
            diff = moved - base
            sigma = diff.std(ddof=1) / np.sqrt(n)
            assert abs(diff.mean()) <= 4 * sigma


def test_sampler_matches_qr_haar_distributions():
    # fully independent route to Haar: QR of Ginibre matrices
    n = 20_000
    d_chart = compose_batch(measure.sample_haar(12, n))
    d_qr = group.random_su3(n, np.random.default_rng(13))
    observables = [
        lambda u: np.trace(u, axis1=1, axis2=2).real,
        lambda u: np.trace(u, axis1=1, axis2=2).imag,
        lambda u: np.abs(u[:, 0, 1]) ** 2,
        lambda u: (u[:, 0, 0] * u[:, 1, 1].conj()).real,
        lambda u: np.angle(u[:, 2, 2]),
    ]
    for f in observables:
        assert ks_two_sample_pvalue(f(d_chart), f(d_qr)) > 1e-3


def test_translation_by_diagonal_signs():
    # this element exposes any chart under-coverage immediately
    g = np.diag([-1.0, -1.0, 1.0]).astype(complex)
    n = 50_000
    d = compose_batch(measure.sample_haar(14, n))
    for f in (lambda u: (u[:, 0, 2] * u[:, 0, 0].conj()).imag,
              lambda u: np.trace(u, axis1=1, axis2=2).real):
        diff = f(np.einsum('ab,mbc->mac', g, d)) - f(d)
        assert abs(diff.mean()) <= 4 * diff.std(ddof=1) / np.sqrt(n)
        diff = f(np.einsum('mab,bc->mac', d, g)) - f(d)
        assert abs(diff.mean()) <= 4 * diff.std(ddof=1) / np.sqrt(n)


def test_csv_round_trip_and_determinism():
    samples = measure.sample_haar(3, 50)
    buf1, buf2 = io.StringIO(), io.StringIO()
    measure.dump_csv(samples, buf1)
    measure.dump_csv(samples, buf2)
    assert buf1.getvalue() == buf2.getvalue()
    header = buf1.getvalue().splitlines()[0]
    assert header == "alpha,beta,gamma,theta,a,b,c,phi"
    buf1.seek(0)
    loaded = measure.load_csv(buf1)
    np.testing.assert_array_equal(loaded, samples)


def test_sample_haar_rejects_bad_n():
    with pytest.raises(ValueError):
        measure.sample_haar(0, 0)
