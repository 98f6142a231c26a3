import itertools

import numpy as np
import pytest

from su3kit import algebra

SQ3 = np.sqrt(3.0)


def test_basis_is_hermitian_traceless_and_normalized():
    for k in range(8):
        lam = algebra.LAMBDA[k]
        assert np.abs(lam - lam.conj().T).max() == 0
        assert abs(np.trace(lam)) < 1e-15
    gram = np.einsum('iab,jba->ij', algebra.LAMBDA, algebra.LAMBDA)
    np.testing.assert_allclose(gram, 2 * np.eye(3 * 3 - 1), atol=1e-15)


def test_basis_entries_match_standard_convention():
    assert algebra.LAMBDA[0][0, 1] == 1
    assert algebra.LAMBDA[1][0, 1] == -1j
    assert algebra.LAMBDA[2][0, 0] == 1 and algebra.LAMBDA[2][1, 1] == -1
    assert algebra.LAMBDA[4][0, 2] == -1j and algebra.LAMBDA[4][2, 0] == 1j
    np.testing.assert_allclose(np.diag(algebra.LAMBDA[7]),
                               np.array([1, 1, -2]) / SQ3, atol=1e-16)


def test_commutator_table_residuals():
    assert algebra.commutator_tensor_check().max() <= 1e-14


def test_anticommutator_table_residuals():
    assert algebra.anticommutator_tensor_check().max() <= 1e-14


def test_structure_constant_values():
    c = algebra.C_TENSOR
    # [l1, l2] = 2i l3
    assert c[2, 0, 1] == pytest.approx(2.0, abs=1e-15)
    # diagonal generators commute
    assert np.abs(c[:, 2, 7]).max() == 0
    # [l4, l5] = i(l3 + sqrt(3) l8)
    assert c[2, 3, 4] == pytest.approx(1.0, abs=1e-15)
    assert c[7, 3, 4] == pytest.approx(SQ3, abs=1e-14)
    assert c[7, 5, 6] == pytest.approx(SQ3, abs=1e-14)
    # the seven unit entries, e.g. C_147, C_246
    assert c[6, 0, 3] == pytest.approx(1.0, abs=1e-15)
    assert c[5, 1, 3] == pytest.approx(1.0, abs=1e-15)


def test_d_tensor_values():
    d = algebra.D_TENSOR
    assert d[7, 7, 7] == pytest.approx(-1 / SQ3, abs=1e-15)
    for k in (0, 1, 2):
        assert d[k, k, 7] == pytest.approx(1 / SQ3, abs=1e-15)
    for k in (3, 4, 5, 6):
        assert d[k, k, 7] == pytest.approx(-1 / (2 * SQ3), abs=1e-15)
    assert d[0, 3, 5] == pytest.approx(0.5, abs=1e-15)       # d_146
    assert d[1, 3, 6] == pytest.approx(-0.5, abs=1e-15)      # d_247


def test_tensor_symmetries_all_index_triples():
    c, d = algebra.C_TENSOR, algebra.D_TENSOR
    for i, j, k in itertools.product(range(8), repeat=3):
        assert c[k, i, j] == -c[k, j, i]
        assert abs(c[k, i, j] + c[i, k, j]) <= 1e-15
        assert abs(c[k, i, j] - c[i, j, k]) <= 1e-15
        assert d[i, j, k] == d[j, i, k]
        assert abs(d[i, j, k] - d[i, k, j]) <= 1e-15
        assert abs(d[i, j, k] - d[k, j, i]) <= 1e-15


def test_star_unit_vector_examples():
    e8 = algebra.basis_vector(8)
    np.testing.assert_allclose(algebra.star(-e8, -e8), -e8, atol=1e-15)
    np.testing.assert_allclose(algebra.star(np.zeros(8), e8), np.zeros(8), atol=0)
    e3 = algebra.basis_vector(3)
    np.testing.assert_allclose(algebra.star(e3, e3), e8, atol=1e-15)


def test_star_symmetry_random_pairs():
    rng = np.random.default_rng(42)
    for _ in range(100):
        a, b = rng.standard_normal((2, 8))
        np.testing.assert_allclose(algebra.star(a, b), algebra.star(b, a), atol=1e-13)


def test_expand_basis_elements():
    re, im = algebra.expand(algebra.LAMBDA[4])
    np.testing.assert_allclose(re, algebra.basis_vector(5), atol=1e-15)
    np.testing.assert_allclose(im, 0, atol=1e-15)

    re, im = algebra.expand(1j * algebra.LAMBDA[2])
    np.testing.assert_allclose(re, 0, atol=1e-15)
    np.testing.assert_allclose(im, algebra.basis_vector(3), atol=1e-15)

    re, im = algebra.expand(algebra.LAMBDA[0] + 2 * algebra.LAMBDA[7])
    np.testing.assert_allclose(re, [1, 0, 0, 0, 0, 0, 0, 2], atol=1e-15)
    np.testing.assert_allclose(im, 0, atol=1e-15)


def test_expand_rejects_nonzero_trace():
    with pytest.raises(ValueError, match="not traceless"):
        algebra.expand(np.eye(3))


def test_expand_inverts_reconstruction():
    rng = np.random.default_rng(7)
    for _ in range(100):
        coeff = rng.standard_normal(8)
        m = algebra.from_coefficients(coeff)
        re, im = algebra.expand(m)
        assert np.abs(re - coeff).max() <= 1e-13
        assert np.abs(im).max() <= 1e-13
    # complex coefficients round-trip too
    re0, im0 = rng.standard_normal((2, 8))
    re, im = algebra.expand(algebra.from_coefficients(re0, im0))
    np.testing.assert_allclose(re, re0, atol=1e-13)
    np.testing.assert_allclose(im, im0, atol=1e-13)
