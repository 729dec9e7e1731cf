"""From K = hJ to the helicity eigenvalue equations.

:func:`verify_main_result` starts from a Dirac spinor with one chirality
zeroed, extracts h from its slash vectors, and then checks the projector
identities and the four eigen-equations of sigma . p_hat for the
momentum-space states and their charge conjugates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .bilinears import HELICITY_TOL, HelicityResult, extract_helicity, helicity_batch, slash_pair, slash_pairs
from .clifford import PAULI, GammaSet, build_gamma_set
from .numerics import I2, TOL, max_diff, outer
from .spinors import UnitMomentum, assemble, charge_conj2, phi_L, phi_R


class Handedness(enum.Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def sign(self) -> int:
        return 1 if self is Handedness.RIGHT else -1


@dataclass(frozen=True)
class HelicityOperator:
    matrix: np.ndarray
    direction: UnitMomentum


@dataclass(frozen=True)
class TheoremReport:
    direction: UnitMomentum
    delta_phi: float
    handedness: Handedness
    extracted_h: HelicityResult
    eigen_residuals: tuple[float, float, float, float]
    projector_residuals: tuple[float, float]
    passed: bool

    def max_residual(self) -> float:
        return max(self.extracted_h.residual, *self.eigen_residuals, *self.projector_residuals)


def helicity_operator(p: UnitMomentum) -> HelicityOperator:
    """sigma . p_hat built from the Pauli matrices."""
    v = p.vector
    m = v[0] * PAULI[0] + v[1] * PAULI[1] + v[2] * PAULI[2]
    return HelicityOperator(m, p)


def helicity_matrix_closed(p: UnitMomentum) -> np.ndarray:
    """Closed 2x2 form [[cos t, sin t e^{-i phi}], [sin t e^{i phi}, -cos t]]."""
    ct, st = math.cos(p.theta), math.sin(p.theta)
    return np.array(
        [[ct, st * np.exp(-1j * p.phi)], [st * np.exp(1j * p.phi), -ct]], dtype=complex
    )


def projector_identities(p: UnitMomentum, delta_phi: float = 0.0) -> tuple[float, float, float, float]:
    """Max-norm residuals of

        P(R) = (1 + s.p)/2,  P(R^C) = (1 - s.p)/2,
        P(L^C) = (1 + s.p)/2, P(L) = (1 - s.p)/2.
    """
    H = helicity_operator(p).matrix
    plus, minus = 0.5 * (I2 + H), 0.5 * (I2 - H)
    r, l = phi_R(p), phi_L(p, delta_phi)
    rc, lc = charge_conj2(r), charge_conj2(l)
    return (
        max_diff(outer(r, r), plus),
        max_diff(outer(rc, rc), minus),
        max_diff(outer(lc, lc), plus),
        max_diff(outer(l, l), minus),
    )


def eigen_equations(p: UnitMomentum, delta_phi: float = 0.0) -> tuple[float, float, float, float]:
    """2-norm residuals of (s.p)|x> -/+ |x> for x = R(+), L(-), R^C(-), L^C(+)."""
    H = helicity_operator(p).matrix
    r, l = phi_R(p), phi_L(p, delta_phi)
    rc, lc = charge_conj2(r), charge_conj2(l)
    return tuple(
        float(np.linalg.norm(H @ v - s * v)) for v, s in ((r, 1), (l, -1), (rc, -1), (lc, 1))
    )


def handed_spinor(p: UnitMomentum, delta_phi: float, handedness: Handedness) -> np.ndarray:
    """Dirac spinor with the opposite-handed half set to zero."""
    zero = np.zeros(2, dtype=complex)
    if handedness is Handedness.RIGHT:
        return assemble(phi_R(p), zero)
    return assemble(zero, phi_L(p, delta_phi))


def verify_main_result(
    p: UnitMomentum,
    delta_phi: float,
    handedness: Handedness,
    tol: float = TOL,
    gs: GammaSet | None = None,
    helicity_tol: float = HELICITY_TOL,
) -> TheoremReport:
    """Run the chain K = hJ  =>  projector identities  =>  eigen-equations.

    ``helicity_tol`` bounds the K - hJ residual; ``tol`` bounds the eigen and
    projector residuals.  NotProportional / ZeroCurrent propagate.
    """
    if gs is None:
        gs = build_gamma_set()
    psi = handed_spinor(p, delta_phi, handedness)
    hres = extract_helicity(slash_pair(psi, gs), helicity_tol)
    proj = projector_identities(p, delta_phi)
    proj_used = proj[:2] if handedness is Handedness.RIGHT else proj[2:]
    eig = eigen_equations(p, delta_phi)
    passed = (
        abs(hres.h - handedness.sign) <= helicity_tol
        and max(eig) <= tol
        and max(proj_used) <= tol
    )
    return TheoremReport(p, delta_phi, handedness, hres, eig, proj_used, bool(passed))


def theta_grid(n: int) -> np.ndarray:
    """n polar angles, uniform and inclusive on [0, pi]."""
    return np.linspace(0.0, math.pi, n)


def phi_grid(n: int) -> np.ndarray:
    """n azimuths, uniform and half-open on [0, 2 pi)."""
    return np.arange(n) * (2 * math.pi / n)


@dataclass(frozen=True)
class SweepResult:
    """Column-wise results of a grid sweep, one row per case.

    Rows are ordered by (delta_phi, handedness, theta, phi), slowest first.
    """

    theta: np.ndarray
    phi: np.ndarray
    delta_phi: np.ndarray
    handedness: np.ndarray  # +1 right, -1 left
    h: np.ndarray
    h_residual: np.ndarray
    eigen: np.ndarray  # (n, 4)
    projector: np.ndarray  # (n, 2): the two identities used for that handedness
    passed: np.ndarray

    def __len__(self) -> int:
        return len(self.theta)


def sweep_main_result(
    n_theta: int,
    n_phi: int,
    delta_phis,
    tol: float = TOL,
    helicity_tol: float = HELICITY_TOL,
    gs: GammaSet | None = None,
) -> SweepResult:
    """Batch :func:`verify_main_result` over a (theta, phi, delta_phi) grid and both handednesses."""
    th, ph = np.meshgrid(theta_grid(n_theta), phi_grid(n_phi), indexing="ij")
    th, ph = th.ravel(), ph.ravel()
    cols = {k: [] for k in ("theta", "phi", "dphi", "hand")}
    for dphi in np.asarray(delta_phis, dtype=float):
        for sign in (1, -1):
            cols["theta"].append(th)
            cols["phi"].append(ph)
            cols["dphi"].append(np.full_like(th, dphi))
            cols["hand"].append(np.full(th.shape, sign))
    theta = np.concatenate(cols["theta"])
    phi = np.concatenate(cols["phi"])
    dphi = np.concatenate(cols["dphi"])
    hand = np.concatenate(cols["hand"])

    c, s = np.cos(theta / 2), np.sin(theta / 2)
    psi = np.zeros((len(theta), 4), dtype=complex)
    right = hand > 0
    psi[right, 0] = (c * np.exp(-0.5j * phi))[right]
    psi[right, 1] = (s * np.exp(0.5j * phi))[right]
    ph2 = phi + dphi
    psi[~right, 2] = (s * np.exp(-0.5j * ph2))[~right]
    psi[~right, 3] = (-c * np.exp(0.5j * ph2))[~right]

    K, J = slash_pairs(psi, gs)
    h, h_res, jmax = helicity_batch(K, J)
    eig = kernels.eigen_residuals(theta, phi, dphi)
    proj4 = kernels.projector_residuals(theta, phi, dphi)
    proj = np.where(right[:, None], proj4[:, :2], proj4[:, 2:])
    passed = (
        (jmax >= helicity_tol)
        & (h_res <= helicity_tol)
        & (np.abs(h - hand) <= helicity_tol)
        & (eig.max(axis=1) <= tol)
        & (proj.max(axis=1) <= tol)
    )
    return SweepResult(theta, phi, dphi, hand, h, h_res, eig, proj, passed)
