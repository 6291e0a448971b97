"""Moments, measurement entropy and symmetry diagnostics of position distributions."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from su2walk.errors import DomainError

SUM_TOL = 1e-9


@dataclass(frozen=True)
class PositionDistribution:
    """Probabilities ``p[k]`` for positions ``offset + k``."""

    offset: int
    probabilities: np.ndarray = field(repr=False)

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=np.float64)
        if p.ndim != 1 or p.size == 0:
            raise DomainError("probabilities must be a non-empty 1-d array")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise DomainError("probabilities must be finite and non-negative")
        if abs(p.sum() - 1.0) > SUM_TOL:
            raise DomainError(f"probabilities sum to {p.sum()!r}, expected 1")
        p.setflags(write=False)
        object.__setattr__(self, "probabilities", p)

    @classmethod
    def from_mapping(cls, mapping: dict[int, float]) -> "PositionDistribution":
        lo, hi = min(mapping), max(mapping)
        p = np.zeros(hi - lo + 1)
        for i, v in mapping.items():
            p[i - lo] = v
        return cls(lo, p)

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.probabilities.size)

    def as_dict(self, tol: float = 0.0) -> dict[int, float]:
        return {int(i): float(v) for i, v in zip(self.positions, self.probabilities) if v > tol}


@dataclass(frozen=True)
class DistributionSummary:
    mean: float
    variance: float
    entropy_bits: float


def distribution(state) -> PositionDistribution:
    """Trace out the coin: ``p_i = |A_i|^2 + |B_i|^2``.

    Works for any object exposing ``a`` and ``b`` amplitude arrays and a
    ``steps_taken`` count, i.e. a line :class:`~su2walk.walk.WalkState`.
    """
    return PositionDistribution(-state.steps_taken, state.probabilities())


def mean(dist: PositionDistribution) -> float:
    return float(np.dot(dist.positions, dist.probabilities))


def variance(dist: PositionDistribution) -> float:
    """Second central moment about the empirical mean."""
    x = dist.positions - mean(dist)
    return float(np.dot(dist.probabilities, x * x))


def entropy(dist: PositionDistribution) -> float:
    """Shannon entropy in bits; empty sites contribute nothing."""
    p = dist.probabilities[dist.probabilities > 0]
    return float(max(0.0, -np.dot(p, np.log2(p))))


def asymmetry(dist: PositionDistribution) -> float:
    """``0.5 * sum_i |p_i - p_{-i}|``, zero for a mirror-symmetric distribution."""
    reach = max(abs(dist.offset), abs(dist.offset + dist.probabilities.size - 1))
    full = np.zeros(2 * reach + 1)
    full[dist.offset + reach: dist.offset + reach + dist.probabilities.size] = dist.probabilities
    return float(0.5 * np.abs(full - full[::-1]).sum())


def mass_outside(dist: PositionDistribution, lo: float, hi: float) -> float:
    """Probability carried by positions strictly outside ``[lo, hi]``."""
    x = dist.positions
    return float(dist.probabilities[(x < lo) | (x > hi)].sum())


def summarize(dist: PositionDistribution) -> DistributionSummary:
    return DistributionSummary(mean(dist), variance(dist), entropy(dist))
