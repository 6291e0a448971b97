"""Smooth envelope model of the walk distribution and the variance law.

For the coin ``U(0, theta, 0)`` after ``N`` steps the distribution is
approximated on ``|i| < N cos(theta)`` by::

    P(i) = [1 + cos^2(2 theta)] exp(K (i^2 / (N^2 cos^2 theta) - 1)) / sqrt(N)
    K    = (sqrt(N) / 2) cos(theta) [1 + cos^2(2 theta)] [1 + sin(theta)]

and the variance by ``N^2 (1 - sin(theta))``.  The envelope traces the
peaks of an oscillating distribution, so it is only an approximation.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.integrate import simpson

from su2walk.coin import CoinParams
from su2walk.errors import DomainError
from su2walk.statistics import distribution, variance
from su2walk.walk import InitialCondition, evolve

QUADRATURE_PANELS = 20_000


@dataclass(frozen=True)
class EnvelopeModel:
    theta: float
    steps: int

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise DomainError("theta must be finite")
        if self.steps < 1:
            raise DomainError(f"steps must be positive, got {self.steps}")

    @property
    def half_width(self) -> float:
        return self.steps * math.cos(self.theta)

    @property
    def amplitude(self) -> float:
        return 1 + math.cos(2 * self.theta) ** 2

    @property
    def k_constant(self) -> float:
        t = self.theta
        return 0.5 * math.sqrt(self.steps) * math.cos(t) * self.amplitude * (1 + math.sin(t))


def envelope_density(model: EnvelopeModel, i):
    """Envelope value at position(s) ``i``; zero for ``|i| >= N cos(theta)``."""
    i = np.asarray(i, dtype=np.float64)
    w = model.half_width
    inside = np.abs(i) < abs(w)
    out = np.zeros_like(i)
    if w != 0:
        u = i[inside] / w
        out[inside] = model.amplitude * np.exp(model.k_constant * (u * u - 1)) / math.sqrt(model.steps)
    return out if out.ndim else float(out)


def _simpson(f, lo, hi, panels=QUADRATURE_PANELS):
    panels += panels % 2
    x = np.linspace(lo, hi, panels + 1)
    return float(simpson(f(x), x=x))


def envelope_integral(model: EnvelopeModel, panels: int = QUADRATURE_PANELS) -> float:
    """Total mass of the envelope over ``(-N cos theta, N cos theta)``."""
    w = abs(model.half_width)
    if w == 0:
        return 0.0
    pref = model.amplitude / math.sqrt(model.steps)
    k = model.k_constant
    # integrate the interior expression so the edge limit enters the rule
    # instead of the zero the density takes at |i| = w
    return _simpson(lambda x: pref * np.exp(k * ((x / w) ** 2 - 1)), -w, w, panels)


def analytic_variance(theta: float, n: int, method: str = "closed",
                      panels: int = QUADRATURE_PANELS) -> float:
    """Variance predicted for ``U(0, theta, 0)`` after ``n`` steps.

    ``method="closed"`` returns ``n^2 (1 - sin theta)``.  ``method="quadrature"``
    integrates ``P(f(phi)) f(phi)^2 f'(phi)`` over ``phi`` in ``[-pi/2, pi/2]``
    with ``f(phi) = n cos(theta) sin(phi)``, exactly as written and without
    renormalizing the envelope.
    """
    if not (0.0 <= theta <= math.pi / 2):
        raise DomainError(f"theta must lie in [0, pi/2], got {theta!r}")
    if n < 0:
        raise DomainError(f"step count must be non-negative, got {n}")
    if method == "closed":
        return n * n * (1 - math.sin(theta))
    if method != "quadrature":
        raise DomainError(f"unknown method {method!r}")
    if n == 0:
        return 0.0
    model = EnvelopeModel(theta, n)
    w = model.half_width
    k = model.k_constant
    pref = model.amplitude / math.sqrt(n)

    def integrand(phi):
        s = np.sin(phi)
        return pref * np.exp(k * (s * s - 1)) * (w * s) ** 2 * (w * np.cos(phi))

    return _simpson(integrand, -math.pi / 2, math.pi / 2, panels)


def _measured_c(theta, n, eta):
    state = evolve(InitialCondition.symmetric(), CoinParams(eta, theta, 0.0), n)
    return variance(distribution(state)) / (n * n)


def fit_c_theta(theta_grid: Iterable[float], n: int, eta: float = 0.0,
                jobs: int | None = None) -> list[tuple[float, float]]:
    """Measured ``sigma^2 / n^2`` for each theta, with coin ``U(eta, theta, 0)``.

    Rows come back in grid order whatever the completion order.
    """
    grid = list(theta_grid)
    if not grid:
        raise DomainError("theta grid is empty")
    if n < 50:
        raise DomainError(f"n must be at least 50 for the asymptotic regime, got {n}")
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        values = list(pool.map(lambda t: _measured_c(t, n, eta), grid))
    return list(zip(grid, values))
