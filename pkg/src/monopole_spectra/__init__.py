"""Spectrum of the 5D deformed Kepler system in a Yang-Coulomb monopole
field, computed three independent ways: algebraically through deformed
oscillator representations of the quadratic symmetry algebra, numerically
through the separated ODE eigenvalue problems, and through the duality map
to the 8D singular harmonic oscillator."""

__version__ = "0.1.0"

from .algebra import (
    RAW_TO_FACTORED_SCALE,
    UnirrepSolution,
    aux_exponents,
    degeneracy_count,
    energy_level,
    factored_roots,
    solve_unirrep,
    so6_casimir_eigenvalues,
    structure_function_factored,
    structure_function_raw,
    ycm_energy,
)
from .duality import (
    kepler_from_oscillator,
    oscillator_from_kepler,
    spectrum_identity_check,
)
from .fock import (
    AlgebraReport,
    DeformedOscillatorRep,
    GeneratorMatrices,
    build_generators,
    build_rep,
    casimir_check,
    verify_algebra,
)
from .params import AuxExponents, ModelParams, QuantumNumbers, So6Labels
from .specfun import DeltaExponents, delta_exponents, jacobi_p, kummer_poly
from .spectra import (
    EigenResult,
    SturmLiouvilleProblem,
    cylindrical_spectrum,
    kepler_angular_spectrum,
    kepler_radial_spectrum,
    oscillator_angular_spectrum,
    oscillator_radial_spectrum,
    parabolic_quantization,
)
