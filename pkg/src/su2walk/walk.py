"""Coin-then-shift evolution on the integer line.

A state after ``n`` steps is stored densely over positions ``-n..n``.  The
shift sends the post-coin |0> component one site left and the |1> component
one site right, so one step of the amplitudes reads::

    A[m, n] = u00 * A[m+1, n-1] + u01 * B[m+1, n-1]
    B[m, n] = u10 * A[m-1, n-1] + u11 * B[m-1, n-1]
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from su2walk._backend import kernels
from su2walk.coin import CoinMatrix, CoinParams, coin_matrix
from su2walk.errors import DomainError, ResourceError

NORM_TOL = 1e-9
INIT_TOL = 1e-12

# evolve() holds four complex buffers of 2n+1 sites
BYTES_PER_STEP = 4 * 2 * 16
MEMORY_BUDGET = 2 * 1024**3


def max_steps(memory_budget: int = MEMORY_BUDGET) -> int:
    return memory_budget // BYTES_PER_STEP


@dataclass(frozen=True)
class InitialCondition:
    """Coin state ``alpha|0> + beta|1>`` placed at the origin."""

    tag: str
    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if not math.isfinite(norm) or abs(norm - 1.0) > INIT_TOL:
            raise DomainError(f"initial coin state has norm {norm!r}, expected 1")

    @classmethod
    def basis0(cls) -> "InitialCondition":
        return cls("basis0", 1.0 + 0j, 0j)

    @classmethod
    def basis1(cls) -> "InitialCondition":
        return cls("basis1", 0j, 1.0 + 0j)

    @classmethod
    def symmetric(cls) -> "InitialCondition":
        r = math.sqrt(0.5)
        return cls("symmetric", complex(r, 0), complex(0, r))

    @classmethod
    def custom(cls, alpha: complex, beta: complex) -> "InitialCondition":
        return cls("custom", complex(alpha), complex(beta))

    @classmethod
    def parse(cls, text: str) -> "InitialCondition":
        """Parse ``basis0``, ``basis1``, ``symmetric`` or ``custom:a_re,a_im,b_re,b_im``."""
        text = text.strip()
        if text in ("basis0", "basis1", "symmetric"):
            return getattr(cls, text)()
        if text.startswith("custom:"):
            parts = text[len("custom:"):].split(",")
            if len(parts) != 4:
                raise DomainError("custom init needs four numbers: a_re,a_im,b_re,b_im")
            try:
                a_re, a_im, b_re, b_im = (float(p) for p in parts)
            except ValueError as exc:
                raise DomainError(f"bad custom init {text!r}") from exc
            return cls.custom(complex(a_re, a_im), complex(b_re, b_im))
        raise DomainError(f"unknown initial condition {text!r}")


@dataclass(frozen=True)
class WalkState:
    """Amplitudes after ``steps_taken`` steps; index ``j`` is position ``j - steps_taken``."""

    steps_taken: int
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)

    def __post_init__(self):
        size = 2 * self.steps_taken + 1
        if self.a.shape != (size,) or self.b.shape != (size,):
            raise DomainError(f"amplitude arrays must have length {size}")
        for arr in (self.a, self.b):
            arr.setflags(write=False)

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.steps_taken, self.steps_taken + 1)

    def amplitude(self, m: int) -> tuple[complex, complex]:
        """``(A_m, B_m)``; zero outside the stored range."""
        j = m + self.steps_taken
        if 0 <= j < self.a.size:
            return complex(self.a[j]), complex(self.b[j])
        return 0j, 0j

    def probabilities(self) -> np.ndarray:
        return self.a.real**2 + self.a.imag**2 + self.b.real**2 + self.b.imag**2

    def norm(self) -> float:
        return float(self.probabilities().sum())


def _as_matrix(coin: CoinMatrix | CoinParams) -> CoinMatrix:
    return coin_matrix(coin) if isinstance(coin, CoinParams) else coin


def initial_state(init: InitialCondition) -> WalkState:
    return WalkState(
        0,
        np.array([init.alpha], dtype=np.complex128),
        np.array([init.beta], dtype=np.complex128),
    )


def step(state: WalkState, coin: CoinMatrix | CoinParams) -> WalkState:
    """Apply the coin at every site, then the conditional shift."""
    u = _as_matrix(coin)
    ca = u.c00 * state.a + u.c01 * state.b
    cb = u.c10 * state.a + u.c11 * state.b
    size = state.a.size + 2
    a = np.zeros(size, dtype=np.complex128)
    b = np.zeros(size, dtype=np.complex128)
    # old index j is new index j + 1; |0> lands one left, |1> one right
    a[: size - 2] = ca
    b[2:] = cb
    return WalkState(state.steps_taken + 1, a, b)


def _check_steps(n: int) -> None:
    if n < 0:
        raise DomainError(f"step count must be non-negative, got {n}")
    limit = max_steps()
    if n > limit:
        raise ResourceError(
            f"steps={n} exceeds the limit of {limit} steps "
            f"for a {MEMORY_BUDGET // 1024**2} MiB memory budget"
        )


def evolve_from(state: WalkState, coin: CoinMatrix | CoinParams, n: int) -> WalkState:
    """Apply ``n`` further steps to ``state``."""
    _check_steps(state.steps_taken + n)
    u = _as_matrix(coin)
    total = state.steps_taken + n
    a = np.zeros(2 * total + 1, dtype=np.complex128)
    b = np.zeros(2 * total + 1, dtype=np.complex128)
    a[n: n + state.a.size] = state.a
    b[n: n + state.b.size] = state.b
    a, b = kernels.line_evolve(u.c00, u.c01, u.c10, u.c11, a, b, n)
    return WalkState(total, a, b)


def evolve(init: InitialCondition, coin: CoinParams | CoinMatrix, n: int) -> WalkState:
    """State after ``n`` applications of the walk operator to ``init``."""
    _check_steps(n)
    return evolve_from(initial_state(init), coin, n)


def evolve_history(init: InitialCondition, coin: CoinParams | CoinMatrix,
                   n: int) -> list[WalkState]:
    """States after 0, 1, ..., n steps."""
    _check_steps(n)
    u = _as_matrix(coin)
    states = [initial_state(init)]
    for _ in range(n):
        states.append(step(states[-1], u))
    return states


def one_step_side_probabilities(coin: CoinParams) -> tuple[float, float]:
    """Closed-form ``(p_left, p_right)`` after one step from the symmetric state.

    Expanding the single-step amplitudes gives
    ``p_left = (1 + sin(2 theta) sin(xi - zeta)) / 2``.
    """
    bias = math.sin(2 * coin.theta) * math.sin(coin.xi - coin.zeta)
    return 0.5 * (1 + bias), 0.5 * (1 - bias)


def recurrence_evolve(init: InitialCondition, coin: CoinParams, n: int) -> WalkState:
    """Evolve by iterating the amplitude recurrences site by site.

    This deliberately avoids the array kernels so it can serve as a check
    on :func:`evolve`.
    """
    _check_steps(n)
    c, s = math.cos(coin.theta), math.sin(coin.theta)
    e_xi, e_zeta = cmath.exp(1j * coin.xi), cmath.exp(1j * coin.zeta)
    u00, u01 = e_xi * c, e_zeta * s
    u10, u11 = e_zeta.conjugate() * s, -e_xi.conjugate() * c

    amp_a = {0: complex(init.alpha)}
    amp_b = {0: complex(init.beta)}
    for k in range(1, n + 1):
        new_a, new_b = {}, {}
        for m in range(-k, k + 1):
            a_r, b_r = amp_a.get(m + 1, 0j), amp_b.get(m + 1, 0j)
            a_l, b_l = amp_a.get(m - 1, 0j), amp_b.get(m - 1, 0j)
            new_a[m] = u00 * a_r + u01 * b_r
            new_b[m] = u10 * a_l + u11 * b_l
        amp_a, amp_b = new_a, new_b

    a = np.array([amp_a[m] for m in range(-n, n + 1)], dtype=np.complex128)
    b = np.array([amp_b[m] for m in range(-n, n + 1)], dtype=np.complex128)
    return WalkState(n, a, b)


def check_decoupled_recurrence(history: Sequence[WalkState], coin: CoinParams,
                               variant: str = "reconciled") -> float:
    """Largest residual of the second-order recurrence over ``history``.

    Eliminating ``B`` between consecutive steps (and ``A`` likewise) gives,
    for both components ``X``::

        X[m, n+1] - X[m, n-1] = cos(theta) (e^{i xi} X[m+1, n] - e^{-i xi} X[m-1, n])

    which is ``variant="reconciled"``.  ``variant="printed"`` evaluates the
    form ``cos(theta) (e^{i zeta} A[m-1, n] - e^{i xi} A[m+1, n])`` and its
    ``B`` analogue with the phases exchanged; it does not hold in general and
    is kept so the mismatch can be measured.
    """
    if len(history) < 3:
        raise DomainError("need at least three consecutive states")
    steps = [h.steps_taken for h in history]
    if any(b - a != 1 for a, b in zip(steps, steps[1:])):
        raise DomainError(f"states are not consecutive: steps {steps}")
    if variant not in ("reconciled", "printed"):
        raise DomainError(f"unknown variant {variant!r}")

    top = steps[-1] + 1
    width = 2 * top + 1

    def padded(arr, k):
        out = np.zeros(width, dtype=np.complex128)
        out[top - k: top + k + 1] = arr
        return out

    A = [padded(h.a, h.steps_taken) for h in history]
    B = [padded(h.b, h.steps_taken) for h in history]
    c = math.cos(coin.theta)
    e_xi, e_zeta = cmath.exp(1j * coin.xi), cmath.exp(1j * coin.zeta)

    def shifted(x):
        # values at m+1 and m-1 for every m (zero past the padded edge)
        right = np.zeros_like(x)
        left = np.zeros_like(x)
        right[:-1] = x[1:]
        left[1:] = x[:-1]
        return right, left

    worst = 0.0
    for k in range(1, len(history) - 1):
        a_r, a_l = shifted(A[k])
        b_r, b_l = shifted(B[k])
        if variant == "reconciled":
            rhs_a = c * (e_xi * a_r - e_xi.conjugate() * a_l)
            rhs_b = c * (e_xi * b_r - e_xi.conjugate() * b_l)
        else:
            rhs_a = c * (e_zeta * a_l - e_xi * a_r)
            rhs_b = c * (e_xi * b_l - e_zeta * b_r)
        res_a = np.abs(A[k + 1] - A[k - 1] - rhs_a).max()
        res_b = np.abs(B[k + 1] - B[k - 1] - rhs_b).max()
        worst = max(worst, float(res_a), float(res_b))
    return worst
