"""Model parameters and quantum-number labels.

All containers are frozen dataclasses validated on construction; functions
elsewhere in the package assume the invariants enforced here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OrderingViolation

HALF_INT_TOL = 1e-9


def is_half_integer(x: float, tol: float = HALF_INT_TOL) -> bool:
    return abs(2.0 * x - round(2.0 * x)) <= tol


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the deformed 5D Kepler-monopole Hamiltonian.

    c0 is the Coulomb strength (strictly positive), c1/c2 the non-central
    couplings (non-negative), hbar the Planck constant.
    """

    c0: float
    c1: float = 0.0
    c2: float = 0.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2", "hbar"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.c0 <= 0:
            raise ValueError(f"c0 must be strictly positive, got {self.c0}")
        if self.c1 < 0 or self.c2 < 0:
            raise ValueError("c1 and c2 must be non-negative")
        if self.hbar <= 0:
            raise ValueError(f"hbar must be strictly positive, got {self.hbar}")


@dataclass(frozen=True)
class QuantumNumbers:
    """Sector labels: l4 for so(4), T for su(2).

    The Casimir eigenvalues are hbar^2*l4*(l4+2) and hbar^2*T*(T+1);
    T must be a non-negative half-integer.
    """

    l4: float = 0.0
    T: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.l4) and self.l4 >= 0):
            raise ValueError(f"l4 must be a non-negative real, got {self.l4}")
        if self.T < 0 or not is_half_integer(self.T):
            raise ValueError(f"T must be a non-negative half-integer, got {self.T}")

    def lsq(self, hbar: float = 1.0) -> float:
        return hbar * hbar * self.l4 * (self.l4 + 2.0)

    def tsq(self, hbar: float = 1.0) -> float:
        return hbar * hbar * self.T * (self.T + 1.0)


@dataclass(frozen=True)
class AuxExponents:
    """Non-negative auxiliary exponents entering the factored structure
    function and the spectrum formula."""

    m1: float
    m2: float

    def __post_init__(self) -> None:
        if self.m1 < 0 or self.m2 < 0:
            raise ValueError("auxiliary exponents must be non-negative")


@dataclass(frozen=True)
class So6Labels:
    """so(6) unirrep labels, half-integers with mu1 >= mu2 >= mu3 >= 0."""

    mu1: float
    mu2: float
    mu3: float

    def __post_init__(self) -> None:
        for name in ("mu1", "mu2", "mu3"):
            v = getattr(self, name)
            if v < 0 or not is_half_integer(v):
                raise ValueError(f"{name} must be a non-negative half-integer, got {v}")
        if not (self.mu1 >= self.mu2 >= self.mu3):
            raise OrderingViolation(
                f"labels must satisfy mu1 >= mu2 >= mu3, got "
                f"({self.mu1}, {self.mu2}, {self.mu3})"
            )
