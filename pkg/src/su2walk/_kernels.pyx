# cython: language_level=3
"""Compiled inner loops for coin-then-shift evolution.

Every function here has a numpy twin in :mod:`su2walk._kernels_py` with the
same signature and semantics; :mod:`su2walk._backend` picks one at import.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def line_evolve(double complex u00, double complex u01,
                double complex u10, double complex u11,
                a_in, b_in, Py_ssize_t steps):
    """Evolve dense line amplitudes ``steps`` times.

    The buffers must already be padded so the support never reaches the
    boundary: position index ``j`` receives the post-coin |0> amplitude of
    ``j + 1`` and the post-coin |1> amplitude of ``j - 1``.
    """
    cdef double complex[::1] a = np.array(a_in, dtype=np.complex128, copy=True)
    cdef double complex[::1] b = np.array(b_in, dtype=np.complex128, copy=True)
    cdef double complex[::1] na = np.zeros_like(a_in, dtype=np.complex128)
    cdef double complex[::1] nb = np.zeros_like(b_in, dtype=np.complex128)
    cdef double complex[::1] tmp
    cdef Py_ssize_t length = a.shape[0]
    cdef Py_ssize_t t, j, lo, hi
    if b.shape[0] != length:
        raise ValueError("amplitude buffers differ in length")
    # only sweep the occupied window, which widens by one site per step
    lo = 0
    while lo < length and a[lo] == 0 and b[lo] == 0:
        lo += 1
    hi = length - 1
    while hi > lo and a[hi] == 0 and b[hi] == 0:
        hi -= 1
    if lo == length:
        steps = 0
    with nogil:
        for t in range(steps):
            lo = lo - 1 if lo > 0 else 0
            hi = hi + 1 if hi < length - 1 else length - 1
            for j in range(lo, hi + 1):
                na[j] = u00 * a[j + 1] + u01 * b[j + 1] if j + 1 < length else 0
                nb[j] = u10 * a[j - 1] + u11 * b[j - 1] if j > 0 else 0
            tmp = a; a = na; na = tmp
            tmp = b; b = nb; nb = tmp
    return np.asarray(a), np.asarray(b)


def cycle_evolve(double complex u00, double complex u01,
                 double complex u10, double complex u11,
                 a_in, b_in, Py_ssize_t steps):
    """Evolve cycle amplitudes ``steps`` times.

    Returns ``(a, b, acc)`` where ``acc`` is the sum of the vertex
    distributions seen *before* each step, i.e. over t = 0..steps-1.
    """
    cdef double complex[::1] a = np.array(a_in, dtype=np.complex128, copy=True)
    cdef double complex[::1] b = np.array(b_in, dtype=np.complex128, copy=True)
    cdef Py_ssize_t n = a.shape[0]
    cdef double complex[::1] na = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] nb = np.zeros(n, dtype=np.complex128)
    cdef double[::1] acc = np.zeros(n, dtype=np.float64)
    cdef double complex[::1] tmp
    cdef Py_ssize_t t, v
    cdef double complex ca, cb
    if b.shape[0] != n:
        raise ValueError("amplitude buffers differ in length")
    with nogil:
        for t in range(steps):
            for v in range(n):
                acc[v] += (a[v].real * a[v].real + a[v].imag * a[v].imag
                           + b[v].real * b[v].real + b[v].imag * b[v].imag)
            for v in range(n):
                ca = u00 * a[v] + u01 * b[v]
                cb = u10 * a[v] + u11 * b[v]
                na[(v - 1 + n) % n] = ca
                nb[(v + 1) % n] = cb
            tmp = a; a = na; na = tmp
            tmp = b; b = nb; nb = tmp
    return np.asarray(a), np.asarray(b), np.asarray(acc)


def cycle_tv_trace(double complex u00, double complex u01,
                   double complex u10, double complex u11,
                   a_in, b_in, Py_ssize_t t_max):
    """Total-variation distance to uniform of the time average, T = 1..t_max.

    Entry ``T - 1`` of the result is ``0.5 * sum |mean_{t<T} p_t(v) - 1/n|``.
    """
    cdef double complex[::1] a = np.array(a_in, dtype=np.complex128, copy=True)
    cdef double complex[::1] b = np.array(b_in, dtype=np.complex128, copy=True)
    cdef Py_ssize_t n = a.shape[0]
    cdef double complex[::1] na = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] nb = np.zeros(n, dtype=np.complex128)
    cdef double[::1] acc = np.zeros(n, dtype=np.float64)
    cdef double[::1] trace = np.zeros(t_max, dtype=np.float64)
    cdef double complex[::1] tmp
    cdef Py_ssize_t t, v
    cdef double complex ca, cb
    cdef double inv_n = 1.0 / n
    cdef double total, d
    if b.shape[0] != n:
        raise ValueError("amplitude buffers differ in length")
    with nogil:
        for t in range(t_max):
            total = 0.0
            for v in range(n):
                acc[v] += (a[v].real * a[v].real + a[v].imag * a[v].imag
                           + b[v].real * b[v].real + b[v].imag * b[v].imag)
                d = acc[v] / (t + 1) - inv_n
                total += d if d >= 0 else -d
            trace[t] = 0.5 * total
            for v in range(n):
                ca = u00 * a[v] + u01 * b[v]
                cb = u10 * a[v] + u11 * b[v]
                na[(v - 1 + n) % n] = ca
                nb[(v + 1) % n] = cb
            tmp = a; a = na; na = tmp
            tmp = b; b = nb; nb = tmp
    return np.asarray(trace)
