"""Pure numpy fallback for :mod:`su2walk._kernels`."""
import numpy as np


def line_evolve(u00, u01, u10, u11, a_in, b_in, steps):
    a = np.array(a_in, dtype=np.complex128, copy=True)
    b = np.array(b_in, dtype=np.complex128, copy=True)
    if a.shape != b.shape:
        raise ValueError("amplitude buffers differ in length")
    for _ in range(steps):
        ca = u00 * a + u01 * b
        cb = u10 * a + u11 * b
        a = np.empty_like(ca)
        b = np.empty_like(cb)
        a[:-1] = ca[1:]
        a[-1] = 0
        b[1:] = cb[:-1]
        b[0] = 0
    return a, b


def cycle_evolve(u00, u01, u10, u11, a_in, b_in, steps):
    a = np.array(a_in, dtype=np.complex128, copy=True)
    b = np.array(b_in, dtype=np.complex128, copy=True)
    if a.shape != b.shape:
        raise ValueError("amplitude buffers differ in length")
    acc = np.zeros(a.shape[0])
    for _ in range(steps):
        acc += a.real**2 + a.imag**2 + b.real**2 + b.imag**2
        ca = u00 * a + u01 * b
        cb = u10 * a + u11 * b
        a = np.roll(ca, -1)
        b = np.roll(cb, 1)
    return a, b, acc


def cycle_tv_trace(u00, u01, u10, u11, a_in, b_in, t_max):
    a = np.array(a_in, dtype=np.complex128, copy=True)
    b = np.array(b_in, dtype=np.complex128, copy=True)
    if a.shape != b.shape:
        raise ValueError("amplitude buffers differ in length")
    n = a.shape[0]
    acc = np.zeros(n)
    trace = np.empty(t_max)
    for t in range(t_max):
        acc += a.real**2 + a.imag**2 + b.real**2 + b.imag**2
        trace[t] = 0.5 * np.abs(acc / (t + 1) - 1.0 / n).sum()
        ca = u00 * a + u01 * b
        cb = u10 * a + u11 * b
        a = np.roll(ca, -1)
        b = np.roll(cb, 1)
    return trace
