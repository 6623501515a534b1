# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: complex CSR matvec and fixed-step RK4 loops."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.complex128_t cplx
ctypedef cnp.int32_t idx_t


cdef void _matvec(const cplx[::1] data, const idx_t[::1] indices,
                  const idx_t[::1] indptr, const cplx[::1] x,
                  cplx[::1] y) noexcept nogil:
    cdef Py_ssize_t i, k, n = indptr.shape[0] - 1
    cdef cplx acc
    for i in range(n):
        acc = 0
        for k in range(indptr[i], indptr[i + 1]):
            acc = acc + data[k] * x[indices[k]]
        y[i] = acc


def csr_matvec(cplx[::1] data, idx_t[::1] indices, idx_t[::1] indptr,
               cplx[::1] x):
    """y = A @ x for a CSR matrix given by its raw arrays."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    y = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] yv = y
    _matvec(data, indices, indptr, x, yv)
    return y


def rk4_csr_steps(cplx[::1] data, idx_t[::1] indices, idx_t[::1] indptr,
                  v, double dt, Py_ssize_t n_steps):
    """Advance v' = A v by n_steps classical RK4 steps (CSR matrix)."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.array(v, dtype=np.complex128)
    cdef cplx[::1] vv = out
    cdef cplx[::1] k1 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k2 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k3 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k4 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] tmp = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t step, i
    cdef double half = 0.5 * dt, sixth = dt / 6.0
    with nogil:
        for step in range(n_steps):
            _matvec(data, indices, indptr, vv, k1)
            for i in range(n):
                tmp[i] = vv[i] + half * k1[i]
            _matvec(data, indices, indptr, tmp, k2)
            for i in range(n):
                tmp[i] = vv[i] + half * k2[i]
            _matvec(data, indices, indptr, tmp, k3)
            for i in range(n):
                tmp[i] = vv[i] + dt * k3[i]
            _matvec(data, indices, indptr, tmp, k4)
            for i in range(n):
                vv[i] = vv[i] + sixth * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i])
    return out


def rk4_dense_steps(cplx[:, ::1] A, v, double dt, Py_ssize_t n_steps):
    """Advance v' = A v by n_steps classical RK4 steps (dense matrix)."""
    cdef Py_ssize_t n = A.shape[0]
    out = np.array(v, dtype=np.complex128)
    cdef cplx[::1] vv = out
    cdef cplx[::1] k1 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k2 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k3 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] k4 = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] tmp = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t step, i, j
    cdef double half = 0.5 * dt, sixth = dt / 6.0
    cdef cplx acc
    with nogil:
        for step in range(n_steps):
            for i in range(n):
                acc = 0
                for j in range(n):
                    acc = acc + A[i, j] * vv[j]
                k1[i] = acc
            for i in range(n):
                tmp[i] = vv[i] + half * k1[i]
            for i in range(n):
                acc = 0
                for j in range(n):
                    acc = acc + A[i, j] * tmp[j]
                k2[i] = acc
            for i in range(n):
                tmp[i] = vv[i] + half * k2[i]
            for i in range(n):
                acc = 0
                for j in range(n):
                    acc = acc + A[i, j] * tmp[j]
                k3[i] = acc
            for i in range(n):
                tmp[i] = vv[i] + dt * k3[i]
            for i in range(n):
                acc = 0
                for j in range(n):
                    acc = acc + A[i, j] * tmp[j]
                k4[i] = acc
            for i in range(n):
                vv[i] = vv[i] + sixth * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i])
    return out
