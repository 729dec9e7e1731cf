"""Pure numpy implementations of the batch kernels.

Mirrors ``_kernels.pyx`` function for function; used when the compiled
extension is unavailable or ``HELICITY_CLIFFORD_PURE=1`` is set.
"""

import numpy as np


def slash_batch(psi, vec_ops, axial_ops, upper, lower):
    """Slash matrices K = K_a g^a and J = J^a g_a for each row of ``psi``.

    ``vec_ops[a]`` is g^0 g^a and ``axial_ops[a]`` is g^0 g^5 g_a, so that
    J^a = psi^dag vec_ops[a] psi and K_a = psi^dag axial_ops[a] psi.
    """
    psi = np.ascontiguousarray(psi, dtype=complex)
    cpsi = psi.conj()
    J = np.einsum("ni,aij,nj->na", cpsi, vec_ops, psi)
    K = np.einsum("ni,aij,nj->na", cpsi, axial_ops, psi)
    K_slash = np.einsum("na,aij->nij", K, upper)
    J_slash = np.einsum("na,aij->nij", J, lower)
    return K_slash, J_slash


def helicity_batch(K_slash, J_slash):
    """Least-squares h, max-norm residual and max|J| per matrix pair."""
    K = K_slash.reshape(len(K_slash), -1)
    J = J_slash.reshape(len(J_slash), -1)
    jj = np.sum(np.abs(J) ** 2, axis=1)
    jk = np.sum((J.conj() * K).real, axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        h = np.where(jj > 0, jk / np.where(jj > 0, jj, 1.0), 0.0)
    residual = np.max(np.abs(K - h[:, None] * J), axis=1)
    jmax = np.max(np.abs(J), axis=1)
    return h, residual, jmax


def _states(theta, phi, dphi):
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    dphi = np.asarray(dphi, dtype=float)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    er_m, er_p = np.exp(-0.5j * phi), np.exp(0.5j * phi)
    ph2 = phi + dphi
    el_m, el_p = np.exp(-0.5j * ph2), np.exp(0.5j * ph2)
    R = np.stack([c * er_m, s * er_p], axis=-1)
    L = np.stack([s * el_m, -c * el_p], axis=-1)
    RC = np.stack([-R[:, 1].conj(), R[:, 0].conj()], axis=-1)
    LC = np.stack([-L[:, 1].conj(), L[:, 0].conj()], axis=-1)
    st = np.sin(theta)
    ct = np.cos(theta)
    H = np.empty((len(theta), 2, 2), dtype=complex)
    H[:, 0, 0] = ct
    H[:, 0, 1] = st * np.exp(-1j * phi)
    H[:, 1, 0] = st * np.exp(1j * phi)
    H[:, 1, 1] = -ct
    return H, R, L, RC, LC


def eigen_residuals(theta, phi, dphi):
    """2-norm defects of (s.p) R = R, (s.p) L = -L, (s.p) RC = -RC, (s.p) LC = LC."""
    H, R, L, RC, LC = _states(theta, phi, dphi)
    out = np.empty((len(H), 4))
    for col, (v, sign) in enumerate(((R, 1.0), (L, -1.0), (RC, -1.0), (LC, 1.0))):
        out[:, col] = np.linalg.norm(np.einsum("nij,nj->ni", H, v) - sign * v, axis=1)
    return out


def projector_residuals(theta, phi, dphi):
    """Max-norm defects of P(R) = (1+H)/2, P(RC) = (1-H)/2, P(LC) = (1+H)/2, P(L) = (1-H)/2."""
    H, R, L, RC, LC = _states(theta, phi, dphi)
    eye = np.eye(2)
    plus = 0.5 * (eye + H)
    minus = 0.5 * (eye - H)
    out = np.empty((len(H), 4))
    for col, (v, target) in enumerate(((R, plus), (RC, minus), (LC, plus), (L, minus))):
        P = v[:, :, None] * v.conj()[:, None, :]
        out[:, col] = np.max(np.abs(P - target).reshape(len(H), -1), axis=1)
    return out
