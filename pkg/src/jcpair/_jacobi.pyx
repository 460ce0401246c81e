# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi sweeps, compiled kernel.

Operation-for-operation twin of ``_jacobi_py.jacobi_cycle``; keep the two
in sync so both backends produce bit-identical output.
"""

from libc.math cimport sqrt


def jacobi_cycle(double[:, ::1] a, double[:, ::1] v, double rel_tol, int max_sweeps):
    """See ``_jacobi_py.jacobi_cycle``; same contract, same arithmetic."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, p, q, k
    cdef int sweeps_done = 0
    cdef double total = 0.0
    cdef double off, thresh, apq, tau, t, c, s, akp, akq, vkp, vkq

    for i in range(n):
        for j in range(n):
            total += a[i, j] * a[i, j]
    thresh = rel_tol * sqrt(total)

    while True:
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        if sqrt(off) <= thresh:
            return sweeps_done
        if sweeps_done == max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                        a[p, k] = a[k, p]
                        a[q, k] = a[k, q]
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        sweeps_done += 1
