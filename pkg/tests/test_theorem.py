import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helicity_clifford.numerics import I2, max_diff
from helicity_clifford.clifford import PAULI
from helicity_clifford.spinors import UnitMomentum, charge_conj2, phi_L, phi_R
from helicity_clifford.theorem import (
    Handedness,
    eigen_equations,
    helicity_matrix_closed,
    helicity_operator,
    phi_grid,
    projector_identities,
    sweep_main_result,
    theta_grid,
    verify_main_result,
)

angles_theta = st.floats(0.0, math.pi)
angles_phi = st.floats(0.0, 2 * math.pi, exclude_max=True)


def test_grids():
    t = theta_grid(5)
    assert t[0] == 0 and t[-1] == math.pi
    p = phi_grid(4)
    assert list(p) == [0, math.pi / 2, math.pi, 3 * math.pi / 2]


@pytest.mark.parametrize(
    "theta, phi, expected",
    [(0, 0, PAULI[2]), (math.pi / 2, 0, PAULI[0]), (math.pi / 2, math.pi / 2, PAULI[1])],
)
def test_helicity_operator_examples(theta, phi, expected):
    assert max_diff(helicity_operator(UnitMomentum(theta, phi)).matrix, expected) <= 1e-15


@given(angles_theta, angles_phi)
def test_helicity_operator_properties(theta, phi):
    p = UnitMomentum(theta, phi)
    H = helicity_operator(p).matrix
    assert max_diff(H, helicity_matrix_closed(p)) <= 1e-14
    assert max_diff(H, H.conj().T) <= 1e-15
    assert max_diff(H @ H, I2) <= 1e-12
    assert abs(np.trace(H)) <= 1e-12


def test_projector_identities_pole():
    assert max(projector_identities(UnitMomentum(0, 0), 0.0)) <= 1e-14


def test_projector_identities_double_angle_oracle():
    theta, phi = math.pi / 2, math.pi / 3
    p = UnitMomentum(theta, phi)
    # double-angle form of |R><R|
    ref = 0.5 * np.array(
        [[1 + math.cos(theta), math.sin(theta) * cmath.exp(-1j * phi)],
         [math.sin(theta) * cmath.exp(1j * phi), 1 - math.cos(theta)]]
    )
    r = phi_R(p)
    assert max_diff(np.outer(r, r.conj()), ref) <= 1e-15
    assert max(projector_identities(p, 0.0)) <= 1e-12


def test_projector_identities_with_phase_offset():
    # Right-handed projectors do not see delta_phi; left-handed ones are rotated
    # to azimuth phi + delta_phi and therefore miss sigma.p_hat off the poles.
    for theta in theta_grid(9):
        for phi in phi_grid(8):
            p = UnitMomentum(theta, phi)
            r0 = projector_identities(p, 0.0)
            r1 = projector_identities(p, 1.7)
            assert r1[:2] == r0[:2]
            q = UnitMomentum(theta, (phi + 1.7) % (2 * math.pi))
            lc, l = charge_conj2(phi_L(p, 1.7)), phi_L(p, 1.7)
            Hq = helicity_operator(q).matrix
            assert max_diff(np.outer(lc, lc.conj()), 0.5 * (I2 + Hq)) <= 1e-12
            assert max_diff(np.outer(l, l.conj()), 0.5 * (I2 - Hq)) <= 1e-12
            expected = math.sin(theta) * abs(math.sin(1.7 / 2))
            assert r1[2] == pytest.approx(expected, abs=1e-12)


def test_completeness():
    for theta in theta_grid(17):
        for phi in phi_grid(16):
            r = phi_R(UnitMomentum(theta, phi))
            rc = charge_conj2(r)
            assert max_diff(np.outer(r, r.conj()) + np.outer(rc, rc.conj()), I2) <= 1e-12


def test_eigen_equations_examples():
    assert eigen_equations(UnitMomentum(0, 0))[0] == 0
    assert eigen_equations(UnitMomentum(math.pi, 0))[0] <= 1e-15
    H = helicity_operator(UnitMomentum(math.pi, 0)).matrix
    assert max_diff(H, -PAULI[2]) <= 1e-15


def test_eigen_equations_grid():
    for theta in theta_grid(64):
        for phi in phi_grid(64):
            assert max(eigen_equations(UnitMomentum(theta, phi), 0.0)) <= 1e-12


@pytest.mark.parametrize("theta", [0.0, math.pi])
def test_pole_residuals_phi_independent(theta):
    base = eigen_equations(UnitMomentum(theta, 0.0))
    for phi in phi_grid(16):
        res = eigen_equations(UnitMomentum(theta, phi))
        assert max(res) <= 1e-15
        assert max(abs(a - b) for a, b in zip(res, base)) <= 1e-15


@given(angles_theta, angles_phi, st.sampled_from([0.0, 2 * math.pi, 4 * math.pi]))
def test_antiparticle_flip(theta, phi, dphi):
    p = UnitMomentum(theta, phi)
    H = helicity_operator(p).matrix
    for v, s in ((phi_R(p), 1), (phi_L(p, dphi), -1)):
        assert np.linalg.norm(H @ v - s * v) <= 1e-12
        c = charge_conj2(v)
        assert np.linalg.norm(H @ c + s * c) <= 1e-12


def test_phi_L_with_offset_is_eigenvector_of_rotated_direction():
    for theta in theta_grid(9):
        for phi in phi_grid(8):
            for dphi in (0.3, math.pi, 5.0):
                q = UnitMomentum(theta, (phi + dphi) % (2 * math.pi))
                v = phi_L(UnitMomentum(theta, phi), dphi)
                H = helicity_operator(q).matrix
                assert np.linalg.norm(H @ v + v) <= 1e-12


def test_phi_L_offset_breaks_eigen_equation_off_poles():
    p = UnitMomentum(math.pi / 2, 0.0)
    res = eigen_equations(p, math.pi)
    # phi_L becomes the +1 eigenvector: ||H v + v|| = 2
    assert res[1] == pytest.approx(2.0, abs=1e-12)
    assert res[0] <= 1e-15 and res[2] <= 1e-15


@pytest.mark.parametrize("hand, sign", [(Handedness.RIGHT, 1), (Handedness.LEFT, -1)])
def test_verify_main_result_examples(gs, hand, sign):
    rep = verify_main_result(UnitMomentum(math.pi / 4, math.pi / 6), 0.0, hand, gs=gs)
    assert rep.passed
    assert rep.extracted_h.h == pytest.approx(sign, abs=1e-12)
    assert max(rep.eigen_residuals) <= 1e-12 and max(rep.projector_residuals) <= 1e-12
    assert rep.max_residual() <= 1e-10


def test_verify_main_result_pole(gs):
    rep = verify_main_result(UnitMomentum(0, 0), 0.0, Handedness.RIGHT, gs=gs)
    assert rep.passed and rep.extracted_h.h == 1


def test_sweep_matches_pointwise(gs):
    dphis = [0.0, 1.1]
    res = sweep_main_result(5, 4, dphis, gs=gs)
    assert len(res) == 5 * 4 * 2 * 2
    i = 0
    for dphi in dphis:
        for hand in (Handedness.RIGHT, Handedness.LEFT):
            for theta in theta_grid(5):
                for phi in phi_grid(4):
                    rep = verify_main_result(UnitMomentum(theta, phi), dphi, hand, gs=gs)
                    assert res.handedness[i] == hand.sign
                    assert res.theta[i] == theta and res.phi[i] == phi and res.delta_phi[i] == dphi
                    assert res.h[i] == pytest.approx(rep.extracted_h.h, abs=1e-14)
                    assert np.allclose(res.eigen[i], rep.eigen_residuals, atol=1e-14, rtol=0)
                    assert np.allclose(res.projector[i], rep.projector_residuals, atol=1e-14, rtol=0)
                    assert bool(res.passed[i]) == rep.passed
                    i += 1


def test_sweep_zero_offset_passes():
    res = sweep_main_result(16, 16, [0.0, 2 * math.pi])
    assert res.passed.all()


def test_global_phase_reading_satisfies_every_identity():
    # Diagnostic: applying delta_phi as an overall factor on phi_L(p, 0) leaves
    # all projector and eigen identities intact.
    for theta in theta_grid(9):
        for phi in phi_grid(8):
            p = UnitMomentum(theta, phi)
            H = helicity_operator(p).matrix
            for dphi in (0.4, 1.7, math.pi):
                l = np.exp(-0.5j * dphi) * phi_L(p, 0.0)
                lc = charge_conj2(l)
                assert np.linalg.norm(H @ l + l) <= 1e-12
                assert np.linalg.norm(H @ lc - lc) <= 1e-12
                assert max_diff(np.outer(l, l.conj()), 0.5 * (I2 - H)) <= 1e-12
                assert max_diff(np.outer(lc, lc.conj()), 0.5 * (I2 + H)) <= 1e-12
