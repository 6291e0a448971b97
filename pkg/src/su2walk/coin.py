"""The three-angle SU(2) coin and its special cases."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from su2walk.errors import DomainError

TWO_PI = 2.0 * math.pi
UNITARY_TOL = 1e-12
PHASE_TOL = 1e-10


def wrap_angle(x: float) -> float:
    """Map ``x`` into [0, 2*pi)."""
    y = math.fmod(x, TWO_PI)
    if y < 0:
        y += TWO_PI
    # fmod of a tiny negative number can round up to exactly 2*pi
    return 0.0 if y >= TWO_PI else y


def wrap_signed(x: float) -> float:
    """Map ``x`` into (-pi, pi]."""
    y = wrap_angle(x)
    return y - TWO_PI if y > math.pi else y


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"coin angle must be finite, got {v!r}")


@dataclass(frozen=True)
class CoinParams:
    """Caley-Klein angles (xi, theta, zeta) in radians."""

    xi: float
    theta: float
    zeta: float

    def __post_init__(self):
        _check_finite(self.xi, self.theta, self.zeta)

    @classmethod
    def from_degrees(cls, xi: float, theta: float, zeta: float) -> "CoinParams":
        return cls(math.radians(xi), math.radians(theta), math.radians(zeta))

    def canonical(self) -> "CoinParams":
        return CoinParams(wrap_angle(self.xi), wrap_angle(self.theta), wrap_angle(self.zeta))

    @property
    def eta(self) -> float:
        """Bias angle ``|xi - zeta|`` with the difference taken in (-pi, pi]."""
        return abs(wrap_signed(self.xi - self.zeta))


HADAMARD = CoinParams(0.0, math.pi / 4, 0.0)
PAULI_Z = CoinParams(0.0, 0.0, 0.0)
PAULI_X = CoinParams(0.0, math.pi / 2, 0.0)


@dataclass(frozen=True)
class CoinMatrix:
    """A 2x2 coin ``[[c00, c01], [c10, c11]]``.

    Construction checks unitarity and ``det == -1`` to ``UNITARY_TOL``.
    """

    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def __post_init__(self):
        m = self.as_array()
        if not np.all(np.isfinite(m)):
            raise DomainError("coin entries must be finite")
        if np.max(np.abs(m @ m.conj().T - np.eye(2))) > UNITARY_TOL:
            raise DomainError("coin matrix is not unitary")
        if abs(self.det() + 1) > UNITARY_TOL:
            raise DomainError(f"coin determinant must be -1, got {self.det()}")

    def as_array(self) -> np.ndarray:
        return np.array([[self.c00, self.c01], [self.c10, self.c11]], dtype=np.complex128)

    def det(self) -> complex:
        return self.c00 * self.c11 - self.c01 * self.c10

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.c00, self.c01, self.c10, self.c11)


_R = math.sqrt(0.5)
_OCTANT_COS_SIN = [
    (1.0, 0.0), (_R, _R), (0.0, 1.0), (-_R, _R),
    (-1.0, 0.0), (-_R, -_R), (0.0, -1.0), (_R, -_R),
]


def _cos_sin(theta: float) -> tuple[float, float]:
    # snap multiples of pi/4 so H, X and Z come out exact
    k = theta / (math.pi / 4)
    if k == int(k):
        return _OCTANT_COS_SIN[int(k) % 8]
    return math.cos(theta), math.sin(theta)


def coin_matrix(params: CoinParams) -> CoinMatrix:
    c, s = _cos_sin(params.theta)
    e_xi = cmath.exp(1j * params.xi)
    e_zeta = cmath.exp(1j * params.zeta)
    return CoinMatrix(
        e_xi * c,
        e_zeta * s,
        e_zeta.conjugate() * s,
        -e_xi.conjugate() * c,
    )


def _row_phase_equal(ra, rb, tol):
    """True if row ``ra == exp(i*phi) * rb`` for some real phi."""
    phase = None
    for x, y in zip(ra, rb):
        if abs(abs(x) - abs(y)) > tol:
            return False, None
        if abs(y) > tol:
            r = x / y
            if phase is None:
                phase = r
            elif abs(r - phase) > tol:
                return False, None
    return True, phase


def phase_equivalent(a: CoinParams, b: CoinParams, gauge: bool = True,
                     tol: float = PHASE_TOL) -> bool:
    """Decide whether two coins drive the same walk up to phases.

    With ``gauge=False`` this is the strict test ``U_a == exp(i*phi) U_b``.

    With ``gauge=True`` (the default) each row may carry its own phase, i.e.
    ``U_a == exp(i*phi) diag(exp(-i*k), exp(i*k)) U_b``.  The extra diagonal
    factor is absorbed by the position gauge ``|m> -> exp(i*k*m)|m>``, which
    leaves every position distribution untouched.  This is the sense in which
    ``U(xi, theta, zeta)``, ``U(xi - zeta, theta, 0)`` and
    ``U(0, theta, zeta - xi)`` are interchangeable.
    """
    ma = coin_matrix(a).as_array()
    mb = coin_matrix(b).as_array()
    ok0, p0 = _row_phase_equal(ma[0], mb[0], tol)
    ok1, p1 = _row_phase_equal(ma[1], mb[1], tol)
    if not (ok0 and ok1):
        return False
    if gauge or p0 is None or p1 is None:
        return True
    return abs(p0 - p1) <= tol
