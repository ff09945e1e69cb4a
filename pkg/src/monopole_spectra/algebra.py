"""Closed-form layer: structure function, unirrep constraints, spectra.

The structure function is carried in two forms: the raw degree-6 polynomial
(whose sign is the physical positivity convention) and the monic product of
six linear factors.  They differ by the overall scale RAW_TO_FACTORED_SCALE*E,
see `structure_function_factored`.

The printed closed forms set hbar = 1 inside the structure function; the
master spectrum `energy_level` is hbar-explicit.  Substituting the rescaled
energy hbar^2*E for the energy scalar reproduces the hbar = 1 forms exactly,
which is what `solve_unirrep` does internally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeRadicand, NonNegativeEnergy, PositivityViolation
from .params import AuxExponents, ModelParams, QuantumNumbers, So6Labels

# ratio of the leading coefficients of the two structure-function forms:
# 98304 from the raw prefactor times 4*16 from the two bracket factors
RAW_TO_FACTORED_SCALE = 98304.0 * 64.0

# margin factor for strict-positivity checks of the interior values
POSITIVITY_MARGIN = 1e-12


def aux_exponents(params: ModelParams, qn: QuantumNumbers) -> AuxExponents:
    """Auxiliary exponents m1, m2 of the sector (params, qn).

    Raises NegativeRadicand when the second radicand turns negative
    (large T at small l4 and c2: no unitary sector of this kind).
    """
    lsq = qn.lsq(params.hbar)
    tsq = qn.tsq(params.hbar)
    r1 = 1.0 + 2.0 * params.c1 + lsq + 2.0 * tsq
    r2 = 1.0 + 2.0 * params.c2 + lsq - 2.0 * tsq
    if r1 < 0 or r2 < 0:
        raise NegativeRadicand(
            f"radicands (m1^2, m2^2) = ({r1}, {r2}) must both be non-negative"
        )
    return AuxExponents(math.sqrt(r1), math.sqrt(r2))


def structure_function_raw(
    x: float, u: float, E: float, params: ModelParams, qn: QuantumNumbers
) -> float:
    """Raw degree-6 structure polynomial at x, with shift u and energy scalar E.

    The central elements are substituted by their eigenvalues
    hbar^2*l4*(l4+2) and hbar^2*T*(T+1).
    """
    lsq = qn.lsq(params.hbar)
    tsq = qn.tsq(params.hbar)
    c1, c2 = params.c1, params.c2
    s = x + u
    br = (1.0 - 2.0 * s) ** 2
    first = 2.0 * params.c0 ** 2 + E * br
    second = (
        4.0 * c1 ** 2
        + 4.0 * c2 ** 2
        + br * (4.0 * s * (s - 1.0) - 4.0 * lsq - 3.0)
        - 4.0 * c1 * (2.0 * c2 + br - 4.0 * tsq)
        + 16.0 * tsq ** 2
        - 4.0 * c2 * (br + 4.0 * tsq)
    )
    return 98304.0 * first * second


def factored_roots(E: float, m: AuxExponents, params: ModelParams) -> np.ndarray:
    """The six roots of the factored structure function, in the x+u variable."""
    if E >= 0:
        raise NonNegativeEnergy(f"factored form requires E < 0, got {E}")
    r = params.c0 / math.sqrt(-2.0 * E)
    m1, m2 = m.m1, m.m2
    return np.array(
        [
            0.5 - r,
            0.5 + r,
            0.5 * (1.0 + m1 + m2),
            0.5 * (1.0 + m1 - m2),
            0.5 * (1.0 - m1 + m2),
            0.5 * (1.0 - m1 - m2),
        ]
    )


def structure_function_factored(
    x: float, u: float, E: float, m: AuxExponents, params: ModelParams
) -> float:
    """Monic product of the six linear factors; requires E < 0.

    Negative on the interior of a valid representation: the raw form equals
    RAW_TO_FACTORED_SCALE * E times this one.
    """
    s = x + u
    return float(np.prod(s - factored_roots(E, m, params)))


def energy_level(p: int, m: AuxExponents, params: ModelParams) -> float:
    """Bound-state energy of the (p+1)-dimensional representation."""
    if p < 0:
        raise ValueError(f"p must be a non-negative integer, got {p}")
    denom = p + 1.0 + 0.5 * (m.m1 + m.m2)
    return -params.c0 ** 2 / (2.0 * params.hbar ** 2 * denom ** 2)


@dataclass(frozen=True)
class UnirrepSolution:
    """Shift u, energy E and interior structure-function values of a
    (p+1)-dimensional unitary representation."""

    p: int
    u: float
    E: float
    phi_interior: tuple[float, ...]


# u-roots tried by solve_unirrep, canonical one first
_PAIRING_SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def solve_unirrep(
    p: int,
    params: ModelParams,
    qn: QuantumNumbers,
    root_pairing: int = 0,
) -> UnirrepSolution:
    """Solve the two boundary constraints for (u, E) and check positivity.

    The canonical pairing (root_pairing=0) places the root (1+m1+m2)/2 at
    x = 0 and the upper Coulomb root at x = p+1, which reproduces
    `energy_level`.  The other pairings (1..3) use the remaining roots for u;
    they are provided for exhaustive searches and fail the positivity check.
    """
    if p < 0:
        raise ValueError(f"p must be a non-negative integer, got {p}")
    m = aux_exponents(params, qn)
    s1, s2 = _PAIRING_SIGNS[root_pairing]
    u = 0.5 * (1.0 + s1 * m.m1 + s2 * m.m2)
    if p + 0.5 + u <= 0.0:
        raise PositivityViolation(
            f"pairing {root_pairing}: upper boundary root has no E < 0 branch"
        )
    if root_pairing == 0:
        E = energy_level(p, m, params)
    else:
        E = -params.c0 ** 2 / (2.0 * params.hbar ** 2 * (p + 0.5 + u) ** 2)

    # the printed structure function lives in hbar = 1 units
    e_alg = E * params.hbar ** 2

    xs = np.arange(1, p + 1, dtype=float)
    phi = np.array([structure_function_raw(x, u, e_alg, params, qn) for x in xs])
    # sign probe at half-integers catches pairings whose zeros sit between
    # the integer ladder points
    probes = np.arange(0.5, p + 1.0, 1.0)
    phi_probe = np.array(
        [structure_function_raw(x, u, e_alg, params, qn) for x in probes]
    )
    scale = max(np.max(np.abs(phi), initial=0.0), np.max(np.abs(phi_probe), initial=0.0), 1.0)
    margin = POSITIVITY_MARGIN * scale
    if np.any(phi <= margin) or np.any(phi_probe <= margin):
        raise PositivityViolation(
            f"structure function not strictly positive on (0, {p + 1}) for "
            f"u={u}, E={E} (pairing {root_pairing})"
        )
    return UnirrepSolution(p=p, u=u, E=E, phi_interior=tuple(phi))


def algebra_energy_scalar(sol: UnirrepSolution, params: ModelParams) -> float:
    """Energy scalar substituted into the hbar = 1 closed forms."""
    return sol.E * params.hbar ** 2


def so6_casimir_eigenvalues(labels: So6Labels) -> tuple[float, float, float]:
    """Eigenvalues (K1, K2, K3) of the three so(6) Casimir operators."""
    u1, u2, u3 = labels.mu1, labels.mu2, labels.mu3
    k1 = u1 * (u1 + 4.0) + u2 * (u2 + 2.0) + u3 ** 2
    k2 = 48.0 * (u1 + 2.0) * (u2 + 1.0) * u3
    k3 = (
        u1 ** 2 * (u1 + 4.0) ** 2
        + 6.0 * u1 * (u1 + 4.0)
        + u2 ** 2 * (u2 + 2.0) ** 2
        + u3 ** 4
        - 2.0 * u3 ** 2
    )
    return k1, k2, k3


def ycm_energy(n: int, params: ModelParams) -> float:
    """Energy of the undeformed monopole system at level n (c0 linear)."""
    if n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}")
    return -params.c0 / (2.0 * params.hbar ** 2 * (0.5 * n + 2.0) ** 2)


def degeneracy_count(p: int, J: float, L: float) -> int:
    """Number of (n, lambda) fillings of level p with lambda >= J+L."""
    if p < 1:
        raise ValueError(f"p must be a positive integer, got {p}")
    if J < 0 or L < 0:
        raise ValueError("J and L must be non-negative")
    return max(0, p - math.ceil(J + L - 1e-12))


def raw_polynomial_coefficients(
    u: float, E: float, params: ModelParams, qn: QuantumNumbers
) -> np.ndarray:
    """Coefficients (ascending) of the raw form as a polynomial in x,
    recovered by interpolation at seven nodes; exact for a degree-6
    polynomial up to rounding."""
    xs = np.linspace(-3.0, 3.0, 7)
    ys = [structure_function_raw(x, u, E, params, qn) for x in xs]
    return np.polynomial.polynomial.polyfit(xs, ys, 6)
