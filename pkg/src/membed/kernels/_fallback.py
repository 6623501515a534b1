"""Pure-NumPy implementations of the hot kernels.

Same call signatures as the compiled module; used whenever the extension is
unavailable or disabled via MEMBED_NO_EXT=1.
"""

import numpy as np

BACKEND = "numpy"


def csr_matvec(data, indices, indptr, x):
    """y = A @ x for a CSR matrix given by its raw arrays."""
    n = len(indptr) - 1
    y = np.empty(n, dtype=np.complex128)
    for i in range(n):
        lo, hi = indptr[i], indptr[i + 1]
        y[i] = np.dot(data[lo:hi], x[indices[lo:hi]])
    return y


def rk4_csr_steps(data, indices, indptr, v, dt, n_steps):
    """Advance v' = A v by n_steps classical RK4 steps (CSR matrix)."""
    from scipy.sparse import csr_matrix

    n = len(indptr) - 1
    A = csr_matrix((data, indices, indptr), shape=(n, n))
    v = np.array(v, dtype=np.complex128)
    for _ in range(n_steps):
        k1 = A @ v
        k2 = A @ (v + 0.5 * dt * k1)
        k3 = A @ (v + 0.5 * dt * k2)
        k4 = A @ (v + dt * k3)
        v = v + (dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    return v


def rk4_dense_steps(A, v, dt, n_steps):
    """Advance v' = A v by n_steps classical RK4 steps (dense matrix)."""
    v = np.array(v, dtype=np.complex128)
    for _ in range(n_steps):
        k1 = A @ v
        k2 = A @ (v + 0.5 * dt * k1)
        k3 = A @ (v + 0.5 * dt * k2)
        k4 = A @ (v + dt * k3)
        v = v + (dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    return v
