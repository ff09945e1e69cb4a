"""Finite-difference eigenvalue solvers for the separated ODEs.

Every equation is brought to symmetric Sturm-Liouville form by the
substitution recorded on the problem container (chi = w(x) * solution), so the
discretized operator is a real symmetric tridiagonal matrix; eigenvalues come
from the implicit-shift tridiagonal solver behind scipy's eigh_tridiagonal.
Each spectrum is computed on meshes (N, 2N) and Richardson-extrapolated.

The closed-form oracles live next to the solvers (`*_oracle`) so callers can
cross-check without going through the algebraic layer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceFailure, NoIntersection
from .params import ModelParams
from .specfun import delta_exponents

ENVELOPE_CUT = 1e-14


@dataclass(frozen=True)
class SturmLiouvilleProblem:
    """-chi'' + V(x) chi = lambda w(x) chi on (x_min, x_max), Dirichlet ends.

    V(x) = inv_x/x + inv_x2/x^2 + lin*x + quad*x^2 + const; w is 1 or 1/x.
    x_min = 0 places the wall exactly at the origin (exact for solutions
    vanishing there); grid nodes are interior, so V is never evaluated at 0.
    """

    inv_x: float = 0.0
    inv_x2: float = 0.0
    lin: float = 0.0
    quad: float = 0.0
    const: float = 0.0
    domain: tuple[float, float] = (0.0, 1.0)
    transform: str = ""
    mesh_size: int = 2000
    weight: str = "none"

    def __post_init__(self) -> None:
        if self.domain[0] < 0 or self.domain[1] <= self.domain[0]:
            raise ValueError(f"domain must satisfy 0 <= x_min < x_max, got {self.domain}")
        if self.mesh_size < 3:
            raise ValueError("mesh_size must be at least 3")
        if self.weight not in ("none", "inv_x"):
            raise ValueError(f"unknown weight {self.weight!r}")

    def potential(self, x: np.ndarray) -> np.ndarray:
        return (
            self.inv_x / x
            + self.inv_x2 / (x * x)
            + self.lin * x
            + self.quad * x * x
            + self.const
        )


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues on the fine mesh plus Richardson extrapolation metadata.

    conv_tol is the declared bound on |richardson - fine| (relative to the
    spectrum scale) below which a level counts as converged, i.e. the
    extrapolation pair sits in its asymptotic regime.
    """

    eigenvalues: np.ndarray
    richardson: np.ndarray
    converged: np.ndarray
    mesh_size: int
    conv_tol: float
    problem: SturmLiouvilleProblem | None = field(default=None, repr=False)


def solve_lowest(problem: SturmLiouvilleProblem, k: int, mesh: int | None = None) -> np.ndarray:
    """Lowest k eigenvalues of the discretized problem."""
    n = mesh if mesh is not None else problem.mesh_size
    x = np.linspace(problem.domain[0], problem.domain[1], n + 2)[1:-1]
    h = x[1] - x[0]
    diag = 2.0 / h ** 2 + problem.potential(x)
    off = np.full(n - 1, -1.0 / h ** 2)
    if problem.weight == "inv_x":
        # A chi = lam (1/x) chi  ->  congruence by diag(sqrt(x)) stays tridiagonal
        diag = diag * x
        off = off * np.sqrt(x[:-1] * x[1:])
    return eigh_tridiagonal(
        diag, off, select="i", select_range=(0, k - 1), eigvals_only=True
    )


def _extrapolate(coarse: np.ndarray, fine: np.ndarray, conv_tol: float):
    rich = (4.0 * fine - coarse) / 3.0
    spec_scale = float(np.max(np.abs(rich))) if rich.size else 1.0
    scale = np.maximum(np.abs(rich), 1e-3 * spec_scale + 1e-300)
    converged = np.abs(rich - fine) / scale <= conv_tol
    return rich, converged


def _richardson_solve(
    problem: SturmLiouvilleProblem, k: int, conv_tol: float, strict: bool
) -> EigenResult:
    coarse = solve_lowest(problem, k, problem.mesh_size)
    fine = solve_lowest(problem, k, 2 * problem.mesh_size)
    rich, converged = _extrapolate(coarse, fine, conv_tol)
    if strict and not np.all(converged):
        raise ConvergenceFailure(
            f"Richardson disagreement beyond conv_tol={conv_tol}"
        )
    return EigenResult(
        eigenvalues=fine,
        richardson=rich,
        converged=converged,
        mesh_size=problem.mesh_size,
        conv_tol=conv_tol,
        problem=problem,
    )


def _exp_cutoff(kappa: float, power: float, cut: float = ENVELOPE_CUT) -> float:
    """x beyond which exp(-kappa*x/2)*x^power < cut * peak."""
    x_peak = max(2.0 * power / kappa, 1e-12)
    target = math.log(1.0 / cut)
    x = x_peak + 2.0 * target / kappa
    for _ in range(80):
        x_new = (2.0 / kappa) * (target + power * max(0.0, math.log(x / x_peak))) + x_peak
        if abs(x_new - x) < 1e-10 * x:
            return x_new
        x = x_new
    return x


def exponent_from_separation(sep: float) -> float:
    """l with l(l+3) = sep, the non-negative branch."""
    return 0.5 * (-3.0 + math.sqrt(9.0 + 4.0 * sep))


# ----------------------------------------------------------------- 5D Kepler

def kepler_radial_spectrum(
    lam: float,
    params: ModelParams,
    k: int = 5,
    mesh: int = 2000,
    conv_tol: float = 1e-3,
    strict: bool = True,
) -> EigenResult:
    """Lowest k bound-state energies of the 5D radial equation at separation
    constant lam >= 0."""
    if lam < 0:
        raise ValueError(f"separation constant must be non-negative, got {lam}")
    hb2 = params.hbar ** 2
    ell = exponent_from_separation(lam)
    kappa_min = 2.0 * params.c0 / (hb2 * (k - 1 + ell + 2.0))
    r_max = _exp_cutoff(kappa_min, ell + 2.0 + (k - 1))
    problem = SturmLiouvilleProblem(
        inv_x=-2.0 * params.c0 / hb2,
        inv_x2=lam + 2.0,
        domain=(0.0, r_max),
        transform="chi = r^2 R(r)",
        mesh_size=mesh,
    )
    res = _richardson_solve(problem, k, conv_tol, strict)
    factor = hb2 / 2.0
    return EigenResult(
        eigenvalues=res.eigenvalues * factor,
        richardson=res.richardson * factor,
        converged=res.converged,
        mesh_size=res.mesh_size,
        conv_tol=res.conv_tol,
        problem=problem,
    )


def kepler_radial_oracle(lam: float, params: ModelParams, k: int = 5) -> np.ndarray:
    ell = exponent_from_separation(lam)
    n = np.arange(k)
    return -params.c0 ** 2 / (2.0 * params.hbar ** 2 * (n + ell + 2.0) ** 2)


def _angular_problem(q1: float, q2: float, mesh: int) -> SturmLiouvilleProblem:
    # -chi'' + [3/4 csc^2 + 2 q2/(1-cos) + 2 q1/(1+cos) - 9/4] chi = sep * chi
    return SturmLiouvilleProblem(
        domain=(0.0, math.pi),
        transform="chi = sin^(3/2)(theta) F(theta); potential assembled in-solver",
        mesh_size=mesh,
    )


def _angular_solve(
    q1: float, q2: float, k: int, mesh: int, conv_tol: float, strict: bool
) -> EigenResult:

    def lowest(n: int) -> np.ndarray:
        th = np.linspace(0.0, math.pi, n + 2)[1:-1]
        h = th[1] - th[0]
        cs = np.cos(th)
        v = (
            0.75 / np.sin(th) ** 2
            + 2.0 * q2 / (1.0 - cs)
            + 2.0 * q1 / (1.0 + cs)
            - 2.25
        )
        diag = 2.0 / h ** 2 + v
        off = np.full(n - 1, -1.0 / h ** 2)
        return eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1), eigvals_only=True)

    coarse = lowest(mesh)
    fine = lowest(2 * mesh)
    rich, converged = _extrapolate(coarse, fine, conv_tol)
    if strict and not np.all(converged):
        raise ConvergenceFailure("angular spectrum did not converge")
    problem = _angular_problem(q1, q2, mesh)
    return EigenResult(fine, rich, converged, mesh, conv_tol, problem)


def kepler_angular_spectrum(
    J: float,
    L: float,
    params: ModelParams,
    k: int = 5,
    mesh: int = 2000,
    conv_tol: float = 1e-3,
    strict: bool = True,
) -> EigenResult:
    """Lowest k separation constants of the polar equation at labels (J, L)."""
    if J < 0 or L < 0:
        raise ValueError("J and L must be non-negative")
    hb2 = params.hbar ** 2
    q1 = J * (J + 1.0) + params.c1 / hb2
    q2 = L * (L + 1.0) + params.c2 / hb2
    return _angular_solve(q1, q2, k, mesh, conv_tol, strict)


def kepler_angular_oracle(J: float, L: float, params: ModelParams, k: int = 5) -> np.ndarray:
    d = delta_exponents("kepler", (params.c1, params.c2), J, L, params.hbar)
    s = 0.5 * (J + L + d.delta1 + d.delta2)
    m = np.arange(k)
    return (m + s) * (m + s + 3.0)


# ------------------------------------------------------------ 8D oscillator

def oscillator_radial_spectrum(
    gamma: float,
    omega: float,
    hbar: float = 1.0,
    k: int = 5,
    mesh: int = 2000,
    conv_tol: float = 1e-3,
    strict: bool = True,
) -> EigenResult:
    """Lowest k energies of the 8D radial equation at separation constant
    gamma >= 0."""
    if gamma < 0 or omega <= 0:
        raise ValueError("gamma must be non-negative and omega positive")
    hb2 = hbar ** 2
    g = 0.5 * (-3.0 + math.sqrt(9.0 + gamma))
    # Gaussian envelope exp(-omega u^2 / (2 hbar)) ~ exp(-kappa x / 2) in x=u^2
    x_max = _exp_cutoff(omega / hbar, g + (k - 1) + 1.75)
    u_max = math.sqrt(x_max)
    problem = SturmLiouvilleProblem(
        inv_x2=gamma + 35.0 / 4.0,
        quad=omega ** 2 / hb2,
        domain=(0.0, u_max),
        transform="chi = u^(7/2) R(u)",
        mesh_size=mesh,
    )
    res = _richardson_solve(problem, k, conv_tol, strict)
    factor = hb2 / 2.0
    return EigenResult(
        res.eigenvalues * factor, res.richardson * factor, res.converged,
        res.mesh_size, res.conv_tol, problem,
    )


def oscillator_radial_oracle(gamma: float, omega: float, hbar: float = 1.0, k: int = 5) -> np.ndarray:
    g = 0.5 * (-3.0 + math.sqrt(9.0 + gamma))
    n = np.arange(k)
    return 2.0 * hbar * omega * (n + g + 2.0)


def oscillator_angular_spectrum(
    T: float,
    K: float,
    lam1: float,
    lam2: float,
    hbar: float = 1.0,
    k: int = 5,
    mesh: int = 2000,
    conv_tol: float = 1e-3,
    strict: bool = True,
) -> EigenResult:
    """Lowest k values of Gamma for the 8D polar equation at labels (T, K)."""
    if T < 0 or K < 0 or lam1 < 0 or lam2 < 0:
        raise ValueError("labels and couplings must be non-negative")
    hb2 = hbar ** 2
    q1 = T * (T + 1.0) + 0.5 * lam1 / hb2
    q2 = K * (K + 1.0) + 0.5 * lam2 / hb2
    res = _angular_solve(q1, q2, k, mesh, conv_tol, strict)
    return EigenResult(
        4.0 * res.eigenvalues, 4.0 * res.richardson, res.converged,
        res.mesh_size, res.conv_tol, res.problem,
    )


def oscillator_angular_oracle(
    T: float, K: float, lam1: float, lam2: float, hbar: float = 1.0, k: int = 5
) -> np.ndarray:
    d = delta_exponents("oscillator", (lam1, lam2), T, K, hbar)
    s = 0.5 * (T + K + d.delta1 + d.delta2)
    m = np.arange(k)
    return 4.0 * (m + s) * (m + s + 3.0)


def cylindrical_spectrum(
    z: float,
    lam_coupling: float,
    omega: float,
    hbar: float = 1.0,
    k: int = 5,
    mesh: int = 2000,
    conv_tol: float = 1e-3,
    strict: bool = True,
) -> EigenResult:
    """Lowest k single-factor energies of one 4D cylindrical sector."""
    if z < 0 or lam_coupling < 0 or omega <= 0:
        raise ValueError("z, lam_coupling must be non-negative and omega positive")
    hb2 = hbar ** 2
    d = -1.0 + math.sqrt(2.0 * lam_coupling / hb2 + (2.0 * z + 1.0) ** 2) - z
    x_max = _exp_cutoff(omega / hbar, 0.5 * (d + z) + (k - 1) + 0.75)
    rho_max = math.sqrt(x_max)
    q = z * (z + 1.0) + 0.5 * lam_coupling / hb2
    problem = SturmLiouvilleProblem(
        inv_x2=4.0 * q + 0.75,
        quad=omega ** 2 / hb2,
        domain=(0.0, rho_max),
        transform="chi = rho^(3/2) f(rho)",
        mesh_size=mesh,
    )
    res = _richardson_solve(problem, k, conv_tol, strict)
    factor = hb2 / 2.0
    return EigenResult(
        res.eigenvalues * factor, res.richardson * factor, res.converged,
        res.mesh_size, res.conv_tol, problem,
    )


def cylindrical_oracle(
    z: float, lam_coupling: float, omega: float, hbar: float = 1.0, k: int = 5
) -> np.ndarray:
    d = -1.0 + math.sqrt(2.0 * lam_coupling / hbar ** 2 + (2.0 * z + 1.0) ** 2) - z
    n = np.arange(k)
    return 2.0 * hbar * omega * (n + 0.5 * (d + z + 2.0))


# ------------------------------------------------------------ parabolic pair

@dataclass(frozen=True)
class ParabolicLevel:
    n1: int
    n2: int
    lam_tilde: float
    energy: float
    kappa: float
    converged: bool


def parabolic_sector_problem(
    kappa: float, q: float, params: ModelParams, k: int, mesh: int
) -> SturmLiouvilleProblem:
    """One parabolic sector as a weighted Sturm-Liouville problem:
    -chi'' + [q/x^2 - c0/(2 hb2 x) + kappa^2/4] chi = xi (1/x) chi;
    the separation constant is +-2 xi / hbar per sector."""
    hb2 = params.hbar ** 2
    x_max = _exp_cutoff(kappa, q + k + 2.0)
    return SturmLiouvilleProblem(
        inv_x=-params.c0 / (2.0 * hb2),
        inv_x2=q,
        const=kappa ** 2 / 4.0,
        domain=(0.0, x_max),
        transform="chi = mu f(mu); weight 1/mu",
        mesh_size=mesh,
        weight="inv_x",
    )


def _parabolic_sector_eigs(
    kappa: float, q: float, params: ModelParams, k: int, mesh: int
) -> np.ndarray:
    return solve_lowest(parabolic_sector_problem(kappa, q, params, k, mesh), k)


def _parabolic_kappa_of_pair(
    n1: int,
    n2: int,
    q1: float,
    q2: float,
    params: ModelParams,
    kappa_range: tuple[float, float],
    mesh: int,
    scan_points: int,
    root_rtol: float = 1e-11,
) -> tuple[float, float]:
    """kappa* and lam_tilde with xi1(n1; kappa) + xi2(n2; kappa) = 0."""
    k1, k2 = n1 + 1, n2 + 1

    def mismatch(kappa: float) -> tuple[float, float]:
        xi1 = _parabolic_sector_eigs(kappa, q1, params, k1, mesh)[n1]
        xi2 = _parabolic_sector_eigs(kappa, q2, params, k2, mesh)[n2]
        return xi1 + xi2, xi1

    kappas = np.linspace(kappa_range[0], kappa_range[1], scan_points)
    vals = np.array([mismatch(kp)[0] for kp in kappas])
    sign_change = np.nonzero(np.diff(np.sign(vals)) != 0)[0]
    if sign_change.size == 0:
        raise NoIntersection(
            f"no eigenvalue intersection for (n1, n2)=({n1}, {n2}) in kappa range {kappa_range}"
        )
    i = sign_change[0]
    lo, hi = kappas[i], kappas[i + 1]
    glo, ghi = vals[i], vals[i + 1]
    # Illinois (damped regula falsi): superlinear on the smooth monotone curve
    kappa_star = 0.5 * (lo + hi)
    for _ in range(100):
        kappa_star = (lo * ghi - hi * glo) / (ghi - glo)
        gm, _ = mismatch(kappa_star)
        if gm == 0.0:
            break
        if (gm > 0) == (glo > 0):
            lo, glo = kappa_star, gm
            ghi *= 0.5
        else:
            hi, ghi = kappa_star, gm
            glo *= 0.5
        if hi - lo <= root_rtol * kappa_star:
            break
    _, xi1 = mismatch(kappa_star)
    lam_tilde = 2.0 * xi1 / params.hbar
    return kappa_star, lam_tilde


def parabolic_quantization(
    J: float,
    L: float,
    params: ModelParams,
    kappa_range: tuple[float, float] | None = None,
    n_max: int = 2,
    mesh: int = 2000,
    scan_points: int = 17,
    conv_tol: float = 1e-3,
    strict: bool = True,
    pairs: list[tuple[int, int]] | None = None,
) -> list[ParabolicLevel]:
    """Quantized parabolic states: for each node pair (n1, n2), the kappa at
    which the two sector eigencurves share a separation constant.

    The scan range defaults to a bracket around the closed-form quantization;
    energies are E = -hbar^2 kappa^2 / 2, Richardson-extrapolated over
    (mesh, 2*mesh).
    """
    hb2 = params.hbar ** 2
    q1 = J * (J + 1.0) + params.c1 / hb2
    q2 = L * (L + 1.0) + params.c2 / hb2
    if pairs is None:
        pairs = [(i, s - i) for s in range(n_max + 1) for i in range(s + 1)]
    d = delta_exponents("kepler", (params.c1, params.c2), J, L, params.hbar)
    levels = []
    for n1, n2 in pairs:
        if kappa_range is None:
            total = n1 + n2 + 0.5 * (d.delta1 + d.delta2 + J + L) + 2.0
            k_oracle = params.c0 / (hb2 * total)
            rng = (0.6 * k_oracle, 1.6 * k_oracle)
        else:
            rng = kappa_range
        kap_c, lt_c = _parabolic_kappa_of_pair(
            n1, n2, q1, q2, params, rng, mesh, scan_points
        )
        kap_f, lt_f = _parabolic_kappa_of_pair(
            n1, n2, q1, q2, params, (0.98 * kap_c, 1.02 * kap_c), 2 * mesh, 5
        )
        kap_rich = (4.0 * kap_f - kap_c) / 3.0
        e_fine = -hb2 * kap_f ** 2 / 2.0
        e_rich = -hb2 * kap_rich ** 2 / 2.0
        converged = abs(e_rich - e_fine) <= conv_tol * abs(e_rich)
        if strict and not converged:
            raise ConvergenceFailure(
                f"parabolic pair ({n1}, {n2}) did not converge: {e_fine} vs {e_rich}"
            )
        levels.append(
            ParabolicLevel(
                n1=n1, n2=n2, lam_tilde=lt_f, energy=e_rich, kappa=kap_rich,
                converged=converged,
            )
        )
    return levels


def parabolic_oracle(n1: int, n2: int, J: float, L: float, params: ModelParams) -> float:
    d = delta_exponents("kepler", (params.c1, params.c2), J, L, params.hbar)
    total = n1 + n2 + 0.5 * (d.delta1 + d.delta2 + J + L) + 2.0
    return -params.c0 ** 2 / (2.0 * params.hbar ** 2 * total ** 2)
