"""Bilinear covariants, slash vectors K and J, and bilinear helicity.

Two independent routes produce the slash matrices: :func:`slash_pair` builds
them from the covariants and the gamma matrices, :func:`expanded_slash_pair`
writes down the closed-form entries in terms of the spinor components
(a, b, c, d).  :func:`block_form_K` / :func:`block_form_J` give a third view
in terms of 2x2 projectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .clifford import GammaSet, build_gamma_set, lower_index
from .numerics import O2, outer
from .spinors import charge_conj2, dirac_adjoint, split

#: Default acceptance tolerance for the K = hJ residual.
HELICITY_TOL = 1e-10


class ZeroCurrent(ValueError):
    """J vanishes, so K = hJ cannot fix h."""


class NotProportional(ValueError):
    """K is not a real multiple of J; the state has no bilinear helicity."""

    def __init__(self, msg: str, result: "HelicityResult"):
        super().__init__(msg)
        self.result = result


@dataclass(frozen=True)
class BilinearSet:
    omega1: complex
    J: np.ndarray  # contravariant J^a
    S: np.ndarray  # S^{ab}, antisymmetric
    K: np.ndarray  # covariant K_a
    omega2: complex


@dataclass(frozen=True)
class SlashPair:
    K_slash: np.ndarray
    J_slash: np.ndarray


@dataclass(frozen=True)
class HelicityResult:
    h: float
    residual: float
    accepted: bool = True


def _operators(gs: GammaSet | None = None):
    """(g^0 g^a, g^0 g^5 g_a, g^a, g_a) stacked as (4, 4, 4) arrays."""
    if gs is None:
        gs = build_gamma_set()
    g0 = gs.gamma0
    vec = np.stack([g0 @ gs.gamma[a] for a in range(4)])
    axial = np.stack([g0 @ gs.gamma5 @ lower_index(gs, a) for a in range(4)])
    return vec, axial, gs.stacked(), gs.stacked_lower()


def bilinear_set(psi, gs: GammaSet) -> BilinearSet:
    """The five covariants psi-bar A psi.

    S^{ab} is evaluated as psi-bar (i/2)[g^a, g^b] psi, which equals the
    literal psi-bar i g^a g^b psi off the diagonal and is zero on it.
    """
    psi = np.asarray(psi, dtype=complex)
    bar = dirac_adjoint(psi, gs)

    def sandwich(m):
        return complex(bar @ m @ psi)

    omega1 = sandwich(np.eye(4))
    J = np.array([sandwich(gs.gamma[a]) for a in range(4)])
    K = np.array([sandwich(gs.gamma5 @ lower_index(gs, a)) for a in range(4)])
    S = np.zeros((4, 4), dtype=complex)
    for a in range(4):
        for b in range(a + 1, 4):
            S[a, b] = sandwich(1j * gs.gamma[a] @ gs.gamma[b])
            S[b, a] = -S[a, b]
    omega2 = sandwich(gs.gamma5)
    return BilinearSet(omega1, J, S, K, omega2)


def slash_pair(psi, gs: GammaSet) -> SlashPair:
    """K_slash = K_a g^a and J_slash = J^a g_a from the covariants."""
    b = bilinear_set(psi, gs)
    K_slash = sum(b.K[a] * gs.gamma[a] for a in range(4))
    J_slash = sum(b.J[a] * lower_index(gs, a) for a in range(4))
    return SlashPair(np.asarray(K_slash, dtype=complex), np.asarray(J_slash, dtype=complex))


def slash_pairs(psis, gs: GammaSet | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Batch version of :func:`slash_pair` for an (n, 4) array of spinors."""
    vec, axial, upper, lower = _operators(gs)
    return kernels.slash_batch(np.atleast_2d(psis), vec, axial, upper, lower)


def expanded_slash_pair(psi) -> SlashPair:
    """K_slash and J_slash written out entry by entry in a, b, c, d."""
    a, b, c, d = np.asarray(psi, dtype=complex)
    ac, bc, cc, dc = a.conjugate(), b.conjugate(), c.conjugate(), d.conjugate()
    K = np.zeros((4, 4), dtype=complex)
    J = np.zeros((4, 4), dtype=complex)

    K[0, 2] = 2 * ac * a - 2 * dc * d
    K[0, 3] = 2 * bc * a + 2 * dc * c
    K[1, 2] = 2 * ac * b + 2 * cc * d
    K[1, 3] = 2 * bc * b - 2 * cc * c
    K[2, 0] = 2 * bc * b - 2 * cc * c
    K[2, 1] = -2 * bc * a - 2 * dc * c
    K[3, 0] = -2 * ac * b - 2 * cc * d
    K[3, 1] = 2 * ac * a - 2 * dc * d

    J[0, 2] = 2 * ac * a + 2 * dc * d
    J[0, 3] = 2 * bc * a - 2 * dc * c
    J[1, 2] = 2 * ac * b - 2 * cc * d
    J[1, 3] = 2 * bc * b + 2 * cc * c
    J[2, 0] = 2 * bc * b + 2 * cc * c
    J[2, 1] = -2 * bc * a + 2 * dc * c
    J[3, 0] = -2 * ac * b + 2 * cc * d
    J[3, 1] = 2 * ac * a + 2 * dc * d
    return SlashPair(K, J)


def _projector_blocks(psi):
    r, l = split(psi)
    rc, lc = charge_conj2(r), charge_conj2(l)
    return outer(r, r), outer(l, l), outer(rc, rc), outer(lc, lc)


def block_form_K(psi) -> np.ndarray:
    """2 [[0, P_R - P_Lc], [P_Rc - P_L, 0]] (outer products, unnormalized)."""
    pr, pl, prc, plc = _projector_blocks(psi)
    return 2 * np.block([[O2, pr - plc], [prc - pl, O2]])


def block_form_J(psi) -> np.ndarray:
    """2 [[0, P_R + P_Lc], [P_L + P_Rc, 0]]."""
    pr, pl, prc, plc = _projector_blocks(psi)
    return 2 * np.block([[O2, pr + plc], [pl + prc, O2]])


def extract_helicity(sp: SlashPair, tol: float = HELICITY_TOL) -> HelicityResult:
    """Real h minimising the least-squares distance ||K - hJ||.

    h = Re<J, K> / <J, J> over all sixteen entries; the reported residual is
    the max-norm of K - hJ.

    Raises:
        ZeroCurrent: if max|J| < tol.
        NotProportional: if the residual exceeds tol.  The rejected result is
            attached as ``exc.result``.
    """
    K = np.asarray(sp.K_slash, dtype=complex).ravel()
    J = np.asarray(sp.J_slash, dtype=complex).ravel()
    if np.max(np.abs(J)) < tol:
        raise ZeroCurrent("J vanishes; helicity undefined")
    h = float(np.vdot(J, K).real / np.vdot(J, J).real)
    residual = float(np.max(np.abs(K - h * J)))
    if residual > tol:
        raise NotProportional(
            f"K is not a real multiple of J (best h={h:.6g}, residual={residual:.3g})",
            HelicityResult(h, residual, accepted=False),
        )
    return HelicityResult(h, residual)


def helicity_batch(K_slash, J_slash):
    """Vectorised least-squares (h, residual, max|J|) for stacks of slash matrices."""
    return kernels.helicity_batch(K_slash, J_slash)
