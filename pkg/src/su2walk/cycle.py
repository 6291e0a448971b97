"""The walk on the n-cycle: modular shift, time averages and mixing time.

Vertex ``v`` sends its post-coin |0> amplitude to ``(v - 1) mod n`` and its
|1> amplitude to ``(v + 1) mod n``.  A unitary walk never settles, so
convergence is measured on the time average
``P(v, T) = (1/T) sum_{t=0}^{T-1} P(v, t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from su2walk._backend import kernels
from su2walk.coin import CoinMatrix, CoinParams, coin_matrix
from su2walk.errors import DomainError
from su2walk.walk import InitialCondition

SUM_TOL = 1e-9
DEFAULT_EPSILON = 0.05


@dataclass(frozen=True)
class CycleState:
    n_vertices: int
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)
    steps_taken: int = 0

    def __post_init__(self):
        if self.n_vertices < 1:
            raise DomainError(f"cycle needs at least one vertex, got {self.n_vertices}")
        if self.a.shape != (self.n_vertices,) or self.b.shape != (self.n_vertices,):
            raise DomainError(f"amplitude arrays must have length {self.n_vertices}")
        for arr in (self.a, self.b):
            arr.setflags(write=False)

    def probabilities(self) -> np.ndarray:
        return self.a.real**2 + self.a.imag**2 + self.b.real**2 + self.b.imag**2

    def norm(self) -> float:
        return float(self.probabilities().sum())


@dataclass(frozen=True)
class TimeAveragedDistribution:
    horizon: int
    probabilities: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.horizon < 1:
            raise DomainError(f"horizon must be at least 1, got {self.horizon}")
        total = float(np.sum(self.probabilities))
        if abs(total - 1.0) > SUM_TOL:
            raise DomainError(f"time average sums to {total!r}, expected 1")


@dataclass(frozen=True)
class MixingResult:
    """``time`` is ``None`` when the walk did not mix within ``t_max``."""

    time: int | None
    epsilon: float
    t_max: int
    warning: str | None = None

    @property
    def mixed(self) -> bool:
        return self.time is not None


def _as_matrix(coin):
    return coin_matrix(coin) if isinstance(coin, CoinParams) else coin


def _check_vertices(n):
    if n < 1:
        raise DomainError(f"cycle needs at least one vertex, got {n}")


def cycle_initial_state(init: InitialCondition, n: int, vertex: int = 0) -> CycleState:
    _check_vertices(n)
    a = np.zeros(n, dtype=np.complex128)
    b = np.zeros(n, dtype=np.complex128)
    a[vertex % n] = init.alpha
    b[vertex % n] = init.beta
    return CycleState(n, a, b)


def cycle_step(state: CycleState, coin: CoinMatrix | CoinParams) -> CycleState:
    u = _as_matrix(coin)
    ca = u.c00 * state.a + u.c01 * state.b
    cb = u.c10 * state.a + u.c11 * state.b
    return CycleState(state.n_vertices, np.roll(ca, -1), np.roll(cb, 1), state.steps_taken + 1)


def cycle_evolve(init: InitialCondition, coin: CoinParams | CoinMatrix, n: int,
                 steps: int) -> CycleState:
    if steps < 0:
        raise DomainError(f"step count must be non-negative, got {steps}")
    start = cycle_initial_state(init, n)
    u = _as_matrix(coin)
    a, b, _ = kernels.cycle_evolve(u.c00, u.c01, u.c10, u.c11, start.a, start.b, steps)
    return CycleState(n, a, b, steps)


def time_averaged(init: InitialCondition, coin: CoinParams | CoinMatrix, n: int,
                  horizon: int) -> TimeAveragedDistribution:
    """Mean of the vertex distributions at t = 0, ..., horizon - 1."""
    if horizon < 1:
        raise DomainError(f"horizon must be at least 1, got {horizon}")
    start = cycle_initial_state(init, n)
    u = _as_matrix(coin)
    _, _, acc = kernels.cycle_evolve(u.c00, u.c01, u.c10, u.c11, start.a, start.b, horizon)
    return TimeAveragedDistribution(horizon, acc / horizon)


def uniform(n: int) -> np.ndarray:
    _check_vertices(n)
    return np.full(n, 1.0 / n)


def _probs(x):
    return np.asarray(getattr(x, "probabilities", x), dtype=np.float64)


def tv_distance(a, b) -> float:
    """Total-variation distance ``0.5 * sum |a_v - b_v|``."""
    pa, pb = _probs(a), _probs(b)
    if pa.shape != pb.shape:
        raise DomainError(f"support sizes differ: {pa.shape} vs {pb.shape}")
    return float(0.5 * np.abs(pa - pb).sum())


def tv_trace(init: InitialCondition, coin: CoinParams | CoinMatrix, n: int,
             t_max: int) -> np.ndarray:
    """TV distance to uniform of the time average for T = 1, ..., t_max."""
    if t_max < 1:
        raise DomainError(f"t_max must be at least 1, got {t_max}")
    start = cycle_initial_state(init, n)
    u = _as_matrix(coin)
    return kernels.cycle_tv_trace(u.c00, u.c01, u.c10, u.c11, start.a, start.b, t_max)


def parity_warning(n: int) -> str | None:
    if n % 2 == 0:
        return (f"n={n} is even: the walk alternates between vertex parity classes "
                "and the limiting distribution may not be uniform")
    return None


def mixing_time(init: InitialCondition, coin: CoinParams | CoinMatrix, n: int,
                epsilon: float = DEFAULT_EPSILON, t_max: int | None = None) -> MixingResult:
    """Smallest horizon T <= t_max whose time average is epsilon-close to uniform.

    ``t_max`` defaults to ``200 n``.
    """
    if not (0.0 < epsilon <= 1.0):
        raise DomainError(f"epsilon must lie in (0, 1], got {epsilon!r}")
    if t_max is None:
        t_max = 200 * n
    trace = tv_trace(init, coin, n, t_max)
    hits = np.flatnonzero(trace <= epsilon)
    time = int(hits[0]) + 1 if hits.size else None
    return MixingResult(time, epsilon, t_max, parity_warning(n))


def n_log_n(n: int) -> int:
    """``n * ceil(ln n)``, the horizon used for mixing comparisons."""
    return n * math.ceil(math.log(n))
