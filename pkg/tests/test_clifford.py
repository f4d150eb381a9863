"""Matrix-level identities of the Dirac algebra."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from diracvortex import clifford

I4 = np.eye(4)


def test_gamma0_squares_to_identity():
    assert np.array_equal(clifford.gamma(0) @ clifford.gamma(0), I4)


def test_spacelike_gammas_square_to_minus_identity():
    for mu in (1, 2, 3):
        g = clifford.gamma(mu)
        assert np.array_equal(g @ g, -I4)


def test_distinct_gammas_anticommute():
    g1, g2 = clifford.gamma(1), clifford.gamma(2)
    assert np.array_equal(g1 @ g2 + g2 @ g1, np.zeros((4, 4)))


def test_full_clifford_relation():
    assert clifford.clifford_residual() <= 1e-15


def test_gamma_index_out_of_range():
    with pytest.raises(ValueError):
        clifford.gamma(4)
    with pytest.raises(ValueError):
        clifford.gamma(-1)


def test_cylindrical_at_zero_and_quarter_turn():
    gr, gphi = clifford.gamma_cylindrical(0.0)
    assert np.allclose(gr, clifford.gamma(1))
    assert np.allclose(gphi, clifford.gamma(2))
    gr, gphi = clifford.gamma_cylindrical(np.pi / 2)
    assert np.allclose(gr, clifford.gamma(2), atol=1e-15)
    assert np.allclose(gphi, -clifford.gamma(1), atol=1e-15)


def test_cylindrical_phase_entries():
    # anti-diagonal block structure with exp(+-i phi) phases
    phi = np.pi / 4
    gr, gphi = clifford.gamma_cylindrical(phi)
    assert gr[0, 3] == pytest.approx(np.exp(-1j * phi))
    assert gr[1, 2] == pytest.approx(np.exp(1j * phi))
    assert gr[2, 1] == pytest.approx(-np.exp(-1j * phi))
    assert gr[3, 0] == pytest.approx(-np.exp(1j * phi))
    assert gphi[0, 3] == pytest.approx(-1j * np.exp(-1j * phi))
    assert gphi[1, 2] == pytest.approx(1j * np.exp(1j * phi))
    assert gphi[2, 1] == pytest.approx(1j * np.exp(-1j * phi))
    assert gphi[3, 0] == pytest.approx(-1j * np.exp(1j * phi))


def test_sigma_cylindrical_structure():
    sr, _ = clifford.sigma_cylindrical(0.0)
    assert np.allclose(sr, clifford.SIGMA_X)
    sr, _ = clifford.sigma_cylindrical(np.pi)
    assert np.allclose(sr, -clifford.SIGMA_X, atol=1e-15)
    phi = 0.83
    sr, sphi = clifford.sigma_cylindrical(phi)
    exp_r = np.zeros((4, 4), dtype=complex)
    exp_r[0, 1] = exp_r[2, 3] = np.exp(-1j * phi)
    exp_r[1, 0] = exp_r[3, 2] = np.exp(1j * phi)
    exp_phi = np.zeros((4, 4), dtype=complex)
    exp_phi[0, 1] = exp_phi[2, 3] = -1j * np.exp(-1j * phi)
    exp_phi[1, 0] = exp_phi[3, 2] = 1j * np.exp(1j * phi)
    assert np.allclose(sr, exp_r)
    assert np.allclose(sphi, exp_phi)


@given(st.floats(min_value=-20.0, max_value=20.0, allow_nan=False))
def test_cylindrical_squares(phi):
    gr, gphi = clifford.gamma_cylindrical(phi)
    sr, sphi = clifford.sigma_cylindrical(phi)
    assert np.allclose(gr @ gr, -I4, atol=1e-15)
    assert np.allclose(gphi @ gphi, -I4, atol=1e-15)
    assert np.allclose(sr @ sr, I4, atol=1e-15)
    assert np.allclose(sphi @ sphi, I4, atol=1e-15)


def test_sigma_tensor_diagonal_is_zero():
    assert np.array_equal(clifford.sigma_tensor(1, 1), np.zeros((4, 4)))


def test_sigma_tensor_antisymmetry():
    for mu in range(4):
        for nu in range(4):
            assert np.array_equal(clifford.sigma_tensor(mu, nu),
                                  -clifford.sigma_tensor(nu, mu))


def test_sigma_tensor_against_product_oracle():
    # direct matrix-product computation of (1/2)[gamma_mu, gamma_nu]
    for mu in range(4):
        for nu in range(4):
            gm = clifford.METRIC_SIGNS[mu] * clifford.gamma(mu)
            gn = clifford.METRIC_SIGNS[nu] * clifford.gamma(nu)
            oracle = 0.5 * (gm @ gn - gn @ gm)
            assert np.allclose(clifford.sigma_tensor(mu, nu), oracle, atol=1e-15)


def test_sigma_12_is_spin_z_up_to_phase():
    assert np.allclose(clifford.sigma_tensor(1, 2), -1j * clifford.SIGMA_Z)


def test_commutator_identity_all_quadruples():
    worst = max(clifford.check_sigma_commutator(m, n, r, s)
                for m in range(4) for n in range(4)
                for r in range(4) for s in range(4))
    assert worst <= 1e-14


def test_commutator_all_indices_distinct_vanishes():
    a = clifford.sigma_tensor(1, 2)
    b = clifford.sigma_tensor(3, 0)
    assert np.allclose(a @ b - b @ a, np.zeros((4, 4)), atol=1e-15)
    assert clifford.check_sigma_commutator(1, 2, 3, 0) <= 1e-15


def test_specific_quadruples():
    assert clifford.check_sigma_commutator(1, 2, 2, 3) <= 1e-14
    assert clifford.check_sigma_commutator(0, 1, 0, 1) <= 1e-14
