# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel.

Twin of ``_jacobi_py.py``: same sweep order, same rotation formulas, same
convergence test, element-for-element identical arithmetic (built with
-ffp-contract=off so no FMA re-rounding creeps in).  Keep the two files in
sync.
"""

from libc.math cimport sqrt

import numpy as np


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] v, double fro_norm,
                  int max_sweeps, double tol_factor):
    """Diagonalize symmetric ``a`` in place, accumulating rotations into ``v``.

    Same contract as the pure-numpy twin; returns the sweep count.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef double tol = tol_factor * fro_norm
    cdef int sweeps = 0
    cdef Py_ssize_t p, q, k
    cdef double acc, x, apq, app, aqq, tau, t, c, s, akp, akq
    work = np.empty((2, n), dtype=np.float64)
    cdef double[:, ::1] w = work

    while sweeps < max_sweeps:
        acc = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = a[p, q]
                acc += x * x
        if sqrt(2.0 * acc) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    w[0, k] = c * akp - s * akq
                    w[1, k] = s * akp + c * akq
                w[0, p] = app - t * apq
                w[1, q] = aqq + t * apq
                w[0, q] = 0.0
                w[1, p] = 0.0
                for k in range(n):
                    a[k, p] = w[0, k]
                    a[p, k] = w[0, k]
                    a[k, q] = w[1, k]
                    a[q, k] = w[1, k]
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * akq
                    v[k, q] = s * akp + c * akq
        sweeps += 1
    return sweeps
