import numpy as np
import pytest

from su3kit import phase, states
from su3kit.group import compose_batch
from su3kit.measure import sample_haar

from oracles import central_difference

SQ3 = np.sqrt(3.0)


def gamma_circle(theta=np.pi / 4, samples=10_000):
    w = np.zeros((2, 8))
    w[:, 3] = theta
    w[1, 2] = 2 * np.pi
    return phase.LoopSpec(w, samples_per_segment=samples)


def smooth_random_loop(rng, samples=2000, k=5):
    w = rng.uniform(0.2, 1.3, size=(k + 1, 8))
    w[-1] = w[0]
    return phase.LoopSpec(w, samples_per_segment=samples)


def test_connection_sparsity_and_limits():
    for p in sample_haar(0, 20):
        cov = phase.connection(p)
        assert np.abs(cov[[1, 3, 4, 5, 6]]).max() == 0.0
        assert cov[7] == pytest.approx(-2 / SQ3)
    p = np.zeros(8)
    cov = phase.connection(p)          # theta = 0
    assert np.abs(cov[:7]).max() == 0.0
    p[3], p[1] = np.pi / 2, 0.0        # theta = pi/2, beta = 0
    cov = phase.connection(p)
    assert cov[0] == pytest.approx(1.0)
    assert cov[2] == pytest.approx(1.0)
    assert cov[7] == pytest.approx(-2 / SQ3)


def test_connection_matches_overlap_derivative():
    def arg_step(p, j, h=1e-6):
        pp, pm = p.copy(), p.copy()
        pp[j] += h
        pm[j] -= h
        psi0, psip, psim = (states.psi_of(q) for q in (p, pp, pm))
        return (-1j * (psi0.conj() @ (psip - psim)) / (2 * h)).real

    for p in sample_haar(1, 10):
        cov = phase.connection(p)
        fd = np.array([arg_step(p, j) for j in range(8)])
        assert np.abs(cov - fd).max() <= 1e-7


def test_curvature_components_and_antisymmetry():
    for p in sample_haar(2, 20):
        f = phase.curvature(p)
        np.testing.assert_array_equal(f, -f.T)
        nonzero = {(i, j) for i in range(8) for j in range(8) if f[i, j] != 0}
        assert nonzero <= {(3, 0), (0, 3), (1, 0), (0, 1), (3, 2), (2, 3)}
    f = phase.curvature([0, np.pi / 4, 0, np.pi / 4, 0, 0, 0, 0])
    assert f[3, 0] == pytest.approx(0.0, abs=1e-16)
    assert f[1, 0] == pytest.approx(-1.0)
    assert f[3, 2] == pytest.approx(1.0)
    # theta = 0 kills everything
    assert np.abs(phase.curvature(np.zeros(8))).max() == 0.0


def test_curvature_is_exterior_derivative_of_connection():
    def conn(p):
        return phase.connection(p)

    for p in sample_haar(3, 10):
        f = phase.curvature(p)
        for i in range(8):
            for j in range(8):
                d_ij = central_difference(conn, p, i)[j] - central_difference(conn, p, j)[i]
                assert abs(f[i, j] - d_ij) <= 1e-6


def test_curvature_is_closed_two_form():
    # dF = 0: cyclic sum of partial derivatives vanishes
    def curv(p):
        return phase.curvature(p)

    for p in sample_haar(4, 5):
        df = np.array([central_difference(curv, p, l) for l in range(8)])
        for l in range(8):
            for i in range(8):
                for j in range(8):
                    cyc = df[l][i, j] + df[i][j, l] + df[j][l, i]
                    assert abs(cyc) <= 1e-5


def test_loopspec_validation():
    with pytest.raises(ValueError, match="at least 2 waypoints"):
        phase.LoopSpec(np.zeros((1, 8)))
    with pytest.raises(ValueError, match="samples_per_segment"):
        phase.LoopSpec(np.zeros((2, 8)), samples_per_segment=0)
    w = np.zeros((2, 8))
    w[1, 3] = 0.3   # genuinely open path
    with pytest.raises(ValueError, match="closed loop"):
        phase.LoopSpec(w, closed=True)
    open_loop = phase.LoopSpec(w, closed=False)
    with pytest.raises(ValueError, match="closed"):
        phase.phase_connection(open_loop)
    with pytest.raises(ValueError, match="closed"):
        phase.phase_pancharatnam(open_loop)


def test_loopspec_accepts_full_period_windings():
    loop = gamma_circle(samples=32)    # gamma runs 0 -> 2 pi
    assert loop.closed
    assert loop.sample_points().shape == (33, 8)


def test_constant_loop_has_zero_phase():
    w = np.tile(np.array([0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]), (3, 1))
    loop = phase.LoopSpec(w, samples_per_segment=16)
    assert phase.phase_connection(loop) == 0.0
    assert phase.phase_pancharatnam(loop) == pytest.approx(0.0, abs=1e-15)


def test_gamma_circle_closed_form():
    loop = gamma_circle()
    assert phase.phase_connection(loop) == pytest.approx(np.pi, abs=1e-6)
    assert phase.phase_pancharatnam(loop) == pytest.approx(np.pi, abs=1e-4)


def test_include_dphi_changes_nothing_on_closed_loops():
    rng = np.random.default_rng(5)
    loop = smooth_random_loop(rng)
    base = phase.phase_connection(loop)
    with_term = phase.phase_connection(loop, include_dphi=True)
    assert with_term == pytest.approx(base, abs=1e-12)


def test_connection_vs_pancharatnam_on_random_smooth_loops():
    rng = np.random.default_rng(6)
    for _ in range(20):
        loop = smooth_random_loop(rng)
        a = phase.phase_connection(loop)
        b = phase.phase_pancharatnam(loop)
        assert abs(a - b) <= 1e-4


def test_stokes_rectangle_agreement():
    base = np.array([0.3, 0.4, 0.0, 0.0, 0.5, 0.6, 0.7, 0.8])
    for (t0, t1, g0, g1) in [(0.0, np.pi / 4, 0.0, 2 * np.pi),
                             (0.2, 1.1, 0.3, 2.4),
                             (0.5, 0.9, 1.0, 1.7)]:
        surf = phase.phase_curvature(base, ("theta", "gamma"),
                                     ((t0, t1), (g0, g1)), samples=(2048, 64))
        corners = []
        for th, ga in [(t0, g0), (t1, g0), (t1, g1), (t0, g1), (t0, g0)]:
            w = base.copy()
            w[3], w[2] = th, ga
            corners.append(w)
        loop = phase.LoopSpec(np.array(corners), samples_per_segment=2048)
        assert abs(surf - phase.phase_connection(loop)) <= 1e-6


def test_curvature_rectangle_closed_form():
    base = np.zeros(8)
    got = phase.phase_curvature(base, ("theta", "gamma"),
                                ((0.0, np.pi / 4), (0.0, 2 * np.pi)),
                                samples=(4096, 16))
    assert got == pytest.approx(np.pi, abs=1e-6)
    zero = phase.phase_curvature(base, ("theta", "gamma"),
                                 ((0.3, 0.3), (0.0, 2 * np.pi)), samples=(64, 64))
    assert zero == 0.0


def test_phase_orientation_reversal():
    rng = np.random.default_rng(7)
    loop = smooth_random_loop(rng, samples=500)
    assert phase.phase_connection(loop.reversed()) == pytest.approx(
        -phase.phase_connection(loop), abs=1e-12)
    assert phase.phase_pancharatnam(loop.reversed()) == pytest.approx(
        -phase.phase_pancharatnam(loop), abs=1e-12)
    base = np.zeros(8)
    fwd = phase.phase_curvature(base, ("theta", "gamma"), ((0.1, 0.7), (0.2, 1.4)))
    rev = phase.phase_curvature(base, ("gamma", "theta"), ((0.2, 1.4), (0.1, 0.7)))
    assert rev == pytest.approx(-fwd, abs=1e-12)


def test_reparameterization_second_order_convergence():
    rng = np.random.default_rng(8)
    w = rng.uniform(0.3, 1.2, size=(4, 8))
    w[-1] = w[0]
    values = [phase.phase_connection(phase.LoopSpec(w, samples_per_segment=m))
              for m in (16, 32, 64)]
    ratio = (values[0] - values[1]) / (values[1] - values[2])
    assert 2.5 <= ratio <= 5.5


def test_pancharatnam_gauge_robustness():
    loop = gamma_circle(samples=500)
    pts = loop.sample_points()
    psi = compose_batch(pts)[:, :, 2]
    base = phase.overlap_chain_phase(psi)
    # smooth single-valued gauge along the loop
    chi = 0.7 * np.sin(np.linspace(0, 2 * np.pi, len(psi))) + 0.2
    gauged = psi * np.exp(1j * chi)[:, None]
    assert phase.overlap_chain_phase(gauged) == pytest.approx(base, abs=1e-12)


def test_pancharatnam_rejects_orthogonal_consecutive_states():
    w = np.zeros((3, 8))
    w[1, 3] = np.pi / 2      # state jumps from (0,0,1) to an orthogonal one
    w[2] = w[0]
    loop = phase.LoopSpec(w, samples_per_segment=1)
    with pytest.raises(ValueError, match="finer sampling|samples_per_segment"):
        phase.phase_pancharatnam(loop)
