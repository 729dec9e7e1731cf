"""Monolayer graphene vertex Hamiltonian rebuilt from the restricted K.

The left-handed restriction of K (phi_R = 0) is sandwiched as
gamma^5 K gamma^0, which is block diagonal, 2 diag(P(L^C), -P(L)).  Its
block partial trace is 2 (sigma . k_hat), so

    H(k) = (hbar v_F |k| / 2) * ptr(gamma^5 K gamma^0).

The alternative prefactor hbar v_F / (2 |k|) is kept alongside as
:func:`trace_reconstruction_literal`; it gives hbar v_F (sigma . k_hat) / |k|,
short of the Hamiltonian by exactly |k|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bilinears import block_form_K
from .clifford import GammaSet, build_gamma_set
from .numerics import block_partial_trace, blocks
from .spinors import UnitMomentum, assemble, phi_L, phi_R


class ZeroWavevector(ValueError):
    """The wavevector is too short to define a direction of motion."""


@dataclass(frozen=True)
class GrapheneParams:
    hbar: float = 1.0
    v_F: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0 and self.v_F > 0):
            raise ValueError("hbar and v_F must be positive")

    @property
    def scale(self) -> float:
        return self.hbar * self.v_F


@dataclass(frozen=True)
class PlanarWavevector:
    kx: float
    ky: float

    def __post_init__(self):
        if not (math.isfinite(self.kx) and math.isfinite(self.ky)):
            raise ValueError("wavevector components must be finite")

    @property
    def norm(self) -> float:
        return math.hypot(self.kx, self.ky)


def hamiltonian(k: PlanarWavevector, p: GrapheneParams = GrapheneParams()) -> np.ndarray:
    """hbar v_F [[0, kx - i ky], [kx + i ky, 0]]."""
    return p.scale * np.array([[0, k.kx - 1j * k.ky], [k.kx + 1j * k.ky, 0]], dtype=complex)


def planar_to_unit_momentum(k: PlanarWavevector) -> UnitMomentum:
    """In-plane direction: theta = pi/2, phi = atan2(ky, kx) folded into [0, 2 pi)."""
    if k.norm < 1e-12 * max(1.0, abs(k.kx), abs(k.ky)):
        raise ZeroWavevector(f"|k| = {k.norm!r} is too small")
    phi = math.atan2(k.ky, k.kx)
    if phi < 0:
        phi += 2 * math.pi
    if phi >= 2 * math.pi:  # -0.0 and rounding can land exactly on 2 pi
        phi = 0.0
    return UnitMomentum(math.pi / 2, phi)


def restricted_K(p: UnitMomentum, delta_phi: float = 0.0) -> np.ndarray:
    """K for a purely left-handed spinor: 2 [[0, -P(L^C)], [-P(L), 0]]."""
    psi = assemble(np.zeros(2, dtype=complex), phi_L(p, delta_phi))
    K = block_form_K(psi)
    b = blocks(K)
    if np.max(np.abs(b.tl)) > 0 or np.max(np.abs(b.br)) > 0:
        raise AssertionError("restricted K must have zero diagonal blocks")
    return K


def restricted_K_right(p: UnitMomentum) -> np.ndarray:
    """K for a purely right-handed spinor: 2 [[0, P(R)], [P(R^C), 0]]."""
    return block_form_K(assemble(phi_R(p), np.zeros(2, dtype=complex)))


def sandwiched(K: np.ndarray, gs: GammaSet | None = None) -> np.ndarray:
    """gamma^5 K gamma^0."""
    if gs is None:
        gs = build_gamma_set()
    return gs.gamma5 @ K @ gs.gamma0


def trace_reconstruction(
    k: PlanarWavevector,
    delta_phi: float = 0.0,
    p: GrapheneParams = GrapheneParams(),
    gs: GammaSet | None = None,
) -> np.ndarray:
    """Rebuild the vertex Hamiltonian as (hbar v_F |k| / 2) ptr(gamma^5 K gamma^0)."""
    M = sandwiched(restricted_K(planar_to_unit_momentum(k), delta_phi), gs)
    return (p.scale * k.norm / 2) * block_partial_trace(M)


def trace_reconstruction_literal(
    k: PlanarWavevector,
    delta_phi: float = 0.0,
    p: GrapheneParams = GrapheneParams(),
    gs: GammaSet | None = None,
) -> np.ndarray:
    """Same block trace with prefactor hbar v_F / (2 |k|); equals H(k) / |k|^2."""
    M = sandwiched(restricted_K(planar_to_unit_momentum(k), delta_phi), gs)
    return (p.scale / (2 * k.norm)) * block_partial_trace(M)


def prefactor_ratio(k: PlanarWavevector) -> float:
    """Corrected over literal prefactor, (|k|/2) / (1/(2|k|))."""
    n = k.norm
    return (n / 2) / (1 / (2 * n))


def right_handed_sign(k: PlanarWavevector, p: GrapheneParams = GrapheneParams()) -> float:
    """Real s minimising ||s H - (hbar v_F |k|/2) ptr(g5 K_R g0)|| for the right-handed restriction.

    Informational: the right-handed restriction reproduces H up to this sign.
    """
    M = sandwiched(restricted_K_right(planar_to_unit_momentum(k)))
    rec = (p.scale * k.norm / 2) * block_partial_trace(M)
    H = hamiltonian(k, p)
    return float(np.vdot(H, rec).real / np.vdot(H, H).real)


def dirac_cone_eigenvalues(H: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a traceless Hermitian 2x2 matrix from its characteristic polynomial.

    lambda^2 - tr(H) lambda + det(H) = 0, returned in ascending order.
    """
    tr = H[0, 0] + H[1, 1]
    det = H[0, 0] * H[1, 1] - H[0, 1] * H[1, 0]
    disc = np.sqrt(complex(tr * tr - 4 * det))
    lo, hi = sorted([((tr - disc) / 2).real, ((tr + disc) / 2).real])
    return float(lo), float(hi)


def two_d_helicity(k: PlanarWavevector) -> np.ndarray:
    """sigma . k_hat with sigma = (sigma_1, sigma_2)."""
    n = k.norm
    return np.array([[0, (k.kx - 1j * k.ky) / n], [(k.kx + 1j * k.ky) / n, 0]], dtype=complex)

