"""Momentum-space 2-spinors, Dirac spinors, charge conjugation and projectors."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import SIGMA2, GammaSet
from .numerics import TOL, outer

TwoSpinor = np.ndarray
DiracSpinor = np.ndarray

# -i sigma_2 = [[0, -1], [1, 0]]
_MINUS_I_SIGMA2 = -1j * SIGMA2


class NotNormalized(ValueError):
    """A projector was requested for a state with <phi|phi> != 1."""


@dataclass(frozen=True)
class UnitMomentum:
    """Direction of motion on the unit sphere.

    ``theta`` is the polar angle in [0, pi], ``phi`` the azimuth in [0, 2 pi).
    Pole directions keep whatever ``phi`` they were given.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("angles must be finite")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @property
    def vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


def _spinor(x, n: int) -> np.ndarray:
    a = np.asarray(x, dtype=complex)
    if a.shape != (n,):
        raise ValueError(f"expected a {n}-component spinor, got shape {a.shape}")
    return a


def phi_R(p: UnitMomentum) -> TwoSpinor:
    """Positive-helicity eigenvector of sigma . p_hat."""
    h = p.theta / 2
    return np.array(
        [math.cos(h) * np.exp(-0.5j * p.phi), math.sin(h) * np.exp(0.5j * p.phi)]
    )


def phi_L(p: UnitMomentum, delta_phi: float = 0.0) -> TwoSpinor:
    """Negative-helicity eigenvector, with azimuth shifted by ``delta_phi``."""
    h = p.theta / 2
    ph = p.phi + delta_phi
    return np.array(
        [math.sin(h) * np.exp(-0.5j * ph), -math.cos(h) * np.exp(0.5j * ph)]
    )


def assemble(r, l) -> DiracSpinor:
    """Stack right- and left-handed 2-spinors into (a, b, c, d)."""
    return np.concatenate([_spinor(r, 2), _spinor(l, 2)])


def split(psi) -> tuple[TwoSpinor, TwoSpinor]:
    psi = _spinor(psi, 4)
    return psi[:2].copy(), psi[2:].copy()


def dirac_adjoint(psi, gs: GammaSet) -> np.ndarray:
    """Row vector psi^dagger gamma^0."""
    return _spinor(psi, 4).conj() @ gs.gamma0


def charge_conj2(phi) -> TwoSpinor:
    """-i sigma_2 applied to the complex conjugate: (c0, c1) -> (-c1*, c0*)."""
    return _MINUS_I_SIGMA2 @ _spinor(phi, 2).conj()


def charge_conj4(psi, gs: GammaSet) -> DiracSpinor:
    """-i gamma^2 applied to the complex conjugate."""
    return -1j * gs.gamma2 @ _spinor(psi, 4).conj()


def charge_conj4_blocks(psi) -> DiracSpinor:
    """Block form of 4-spinor charge conjugation: (C phi_L, -C phi_R)."""
    r, l = split(psi)
    return assemble(charge_conj2(l), -charge_conj2(r))


def projector(phi, tol: float = TOL) -> np.ndarray:
    """|phi><phi| for a normalized 2-spinor."""
    phi = _spinor(phi, 2)
    norm2 = float(np.vdot(phi, phi).real)
    if abs(norm2 - 1.0) > tol:
        raise NotNormalized(f"<phi|phi> = {norm2!r}, expected 1")
    return outer(phi, phi)


def random_spinor(seed: int) -> DiracSpinor:
    """Deterministic normalized Dirac spinor drawn from a complex Gaussian."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return z / np.linalg.norm(z)


def random_spinors(n: int, seed: int) -> np.ndarray:
    """``n`` normalized Dirac spinors as rows of an (n, 4) array."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, 4)) + 1j * rng.standard_normal((n, 4))
    return z / np.linalg.norm(z, axis=1, keepdims=True)
