"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from su2walk import _kernels_py
from su2walk.coin import HADAMARD, coin_matrix

try:
    from su2walk import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

U = coin_matrix(HADAMARD).entries
R = np.sqrt(0.5)


def line_case(steps):
    a = np.zeros(2 * steps + 1, complex)
    b = np.zeros(2 * steps + 1, complex)
    a[steps], b[steps] = R, 1j * R
    return lambda k: k.line_evolve(*U, a, b, steps)


def cycle_case(n, horizon):
    a = np.zeros(n, complex)
    b = np.zeros(n, complex)
    a[0], b[0] = R, 1j * R
    return lambda k: k.cycle_tv_trace(*U, a, b, horizon)


CASES = {
    "line evolve, 200 steps": line_case(200),
    "line evolve, 2000 steps": line_case(2000),
    "cycle tv trace, n=101, T=505": cycle_case(101, 505),
    "cycle tv trace, n=101, T=20200": cycle_case(101, 20200),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("cython", _kernels_c))
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'case':<34}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for label, fn in CASES.items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        row = f"{label:<34}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
