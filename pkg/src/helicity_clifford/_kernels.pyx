# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels; see ``_fallback.py`` for the reference versions."""

import numpy as np

from libc.math cimport sin, cos, sqrt, fabs

cdef extern from "<complex.h>" nogil:
    double complex cexp(double complex z)
    double complex conj(double complex z)
    double creal(double complex z)
    double cimag(double complex z)
    double cabs(double complex z)


def slash_batch(psi, vec_ops, axial_ops, upper, lower):
    cdef double complex[:, ::1] p = np.ascontiguousarray(psi, dtype=np.complex128)
    cdef double complex[:, :, ::1] V = np.ascontiguousarray(vec_ops, dtype=np.complex128)
    cdef double complex[:, :, ::1] A = np.ascontiguousarray(axial_ops, dtype=np.complex128)
    cdef double complex[:, :, ::1] U = np.ascontiguousarray(upper, dtype=np.complex128)
    cdef double complex[:, :, ::1] D = np.ascontiguousarray(lower, dtype=np.complex128)
    cdef Py_ssize_t n = p.shape[0]
    K_out = np.zeros((n, 4, 4), dtype=np.complex128)
    J_out = np.zeros((n, 4, 4), dtype=np.complex128)
    cdef double complex[:, :, ::1] Ko = K_out
    cdef double complex[:, :, ::1] Jo = J_out
    cdef double complex jv[4]
    cdef double complex kv[4]
    cdef double complex sj, sk, cpi
    cdef Py_ssize_t s, a, i, j
    with nogil:
        for s in range(n):
            for a in range(4):
                sj = 0
                sk = 0
                for i in range(4):
                    cpi = conj(p[s, i])
                    for j in range(4):
                        sj = sj + cpi * V[a, i, j] * p[s, j]
                        sk = sk + cpi * A[a, i, j] * p[s, j]
                jv[a] = sj
                kv[a] = sk
            for i in range(4):
                for j in range(4):
                    sj = 0
                    sk = 0
                    for a in range(4):
                        sk = sk + kv[a] * U[a, i, j]
                        sj = sj + jv[a] * D[a, i, j]
                    Ko[s, i, j] = sk
                    Jo[s, i, j] = sj
    return K_out, J_out


def helicity_batch(K_slash, J_slash):
    cdef double complex[:, :, ::1] K = np.ascontiguousarray(K_slash, dtype=np.complex128)
    cdef double complex[:, :, ::1] J = np.ascontiguousarray(J_slash, dtype=np.complex128)
    cdef Py_ssize_t n = K.shape[0]
    h_out = np.zeros(n)
    r_out = np.zeros(n)
    m_out = np.zeros(n)
    cdef double[::1] ho = h_out
    cdef double[::1] ro = r_out
    cdef double[::1] mo = m_out
    cdef double jj, jk, h, r, m, t
    cdef Py_ssize_t s, i, j
    with nogil:
        for s in range(n):
            jj = 0
            jk = 0
            m = 0
            for i in range(4):
                for j in range(4):
                    jj = jj + creal(J[s, i, j]) * creal(J[s, i, j]) + cimag(J[s, i, j]) * cimag(J[s, i, j])
                    jk = jk + creal(conj(J[s, i, j]) * K[s, i, j])
                    t = cabs(J[s, i, j])
                    if t > m:
                        m = t
            h = jk / jj if jj > 0 else 0.0
            r = 0
            for i in range(4):
                for j in range(4):
                    t = cabs(K[s, i, j] - h * J[s, i, j])
                    if t > r:
                        r = t
            ho[s] = h
            ro[s] = r
            mo[s] = m
    return h_out, r_out, m_out


cdef inline void _states(double theta, double phi, double dphi,
                         double complex H[2][2], double complex R[2], double complex L[2],
                         double complex RC[2], double complex LC[2]) noexcept nogil:
    cdef double c = cos(0.5 * theta)
    cdef double s = sin(0.5 * theta)
    cdef double ph2 = phi + dphi
    R[0] = c * cexp(-0.5j * phi)
    R[1] = s * cexp(0.5j * phi)
    L[0] = s * cexp(-0.5j * ph2)
    L[1] = -c * cexp(0.5j * ph2)
    RC[0] = -conj(R[1])
    RC[1] = conj(R[0])
    LC[0] = -conj(L[1])
    LC[1] = conj(L[0])
    H[0][0] = cos(theta)
    H[0][1] = sin(theta) * cexp(-1j * phi)
    H[1][0] = sin(theta) * cexp(1j * phi)
    H[1][1] = -cos(theta)


cdef inline double _eig_defect(double complex H[2][2], double complex v[2], double sign) noexcept nogil:
    cdef double complex d0 = H[0][0] * v[0] + H[0][1] * v[1] - sign * v[0]
    cdef double complex d1 = H[1][0] * v[0] + H[1][1] * v[1] - sign * v[1]
    return sqrt(creal(d0) * creal(d0) + cimag(d0) * cimag(d0) + creal(d1) * creal(d1) + cimag(d1) * cimag(d1))


cdef inline double _proj_defect(double complex H[2][2], double complex v[2], double sign) noexcept nogil:
    cdef double m = 0, t
    cdef double complex target
    cdef int i, j
    for i in range(2):
        for j in range(2):
            target = 0.5 * sign * H[i][j]
            if i == j:
                target = target + 0.5
            t = cabs(v[i] * conj(v[j]) - target)
            if t > m:
                m = t
    return m


def eigen_residuals(theta, phi, dphi):
    cdef double[::1] th = np.ascontiguousarray(theta, dtype=np.float64)
    cdef double[::1] ph = np.ascontiguousarray(phi, dtype=np.float64)
    cdef double[::1] dp = np.ascontiguousarray(dphi, dtype=np.float64)
    cdef Py_ssize_t n = th.shape[0], s
    out = np.zeros((n, 4))
    cdef double[:, ::1] o = out
    cdef double complex H[2][2]
    cdef double complex R[2]
    cdef double complex L[2]
    cdef double complex RC[2]
    cdef double complex LC[2]
    with nogil:
        for s in range(n):
            _states(th[s], ph[s], dp[s], H, R, L, RC, LC)
            o[s, 0] = _eig_defect(H, R, 1.0)
            o[s, 1] = _eig_defect(H, L, -1.0)
            o[s, 2] = _eig_defect(H, RC, -1.0)
            o[s, 3] = _eig_defect(H, LC, 1.0)
    return out


def projector_residuals(theta, phi, dphi):
    cdef double[::1] th = np.ascontiguousarray(theta, dtype=np.float64)
    cdef double[::1] ph = np.ascontiguousarray(phi, dtype=np.float64)
    cdef double[::1] dp = np.ascontiguousarray(dphi, dtype=np.float64)
    cdef Py_ssize_t n = th.shape[0], s
    out = np.zeros((n, 4))
    cdef double[:, ::1] o = out
    cdef double complex H[2][2]
    cdef double complex R[2]
    cdef double complex L[2]
    cdef double complex RC[2]
    cdef double complex LC[2]
    with nogil:
        for s in range(n):
            _states(th[s], ph[s], dp[s], H, R, L, RC, LC)
            o[s, 0] = _proj_defect(H, R, 1.0)
            o[s, 1] = _proj_defect(H, RC, -1.0)
            o[s, 2] = _proj_defect(H, LC, 1.0)
            o[s, 3] = _proj_defect(H, L, -1.0)
    return out
