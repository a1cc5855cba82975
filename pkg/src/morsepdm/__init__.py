"""Bound states and radial wave functions of diatomic Morse oscillators with
a position-dependent effective mass under a general kinetic-ordering choice.

Closed-form spectra are produced for the built-in molecules (H2, LiH, HCl,
CO) or user-supplied parameter sets, validated against an independent
Numerov shooting eigensolver and against built-in published reference
energies.
"""

from .errors import (
    ComplexExponentError,
    ConfigError,
    ConstantMassError,
    DegenerateDenominatorError,
    InvalidParameterError,
    MorsePDMError,
    NoBoundStatesError,
    NoSpectrumError,
    NoSuchLevelError,
    SingularMassError,
    UnboundLevelError,
    UnknownMoleculeError,
    UnknownOrderingError,
)
from .numerov import OracleProblem, OracleResult, morse_potential, solve_level
from .ordering import (
    MassProfile,
    OrderingScheme,
    extra_potential_poly,
    lin_coeff,
    mass_at,
    ordering_potential_at,
    pct_term_at,
    preset,
    quad_coeff,
    reference_coupling_poly,
)
from .pekeris import PekerisCoeffs, pekeris_coeffs, rotational_potential_at
from .spectrum import (
    EnergyLevel,
    SpectrumInputs,
    energy,
    eps_nl,
    gamma1,
    gamma2,
    n_max,
    swave_energy,
)
from .units import (
    AMU_TO_EV,
    HBAR_C,
    MoleculeParams,
    REGISTRY,
    derive_scales,
    load_molecule_dir,
    parse_molecule_file,
    registry_lookup,
)
from .wavefn import (
    RadialSolution,
    WaveParams,
    default_grid,
    exponent_S,
    hyp2F1_terminating,
    jacobi_P,
    normalization_series_check,
    phi_pdm,
    psi_constmass,
    psi_pdm,
    wave_params,
)

__version__ = "0.1.0"

__all__ = [
    "AMU_TO_EV",
    "HBAR_C",
    "REGISTRY",
    "ComplexExponentError",
    "ConfigError",
    "ConstantMassError",
    "DegenerateDenominatorError",
    "EnergyLevel",
    "InvalidParameterError",
    "MassProfile",
    "MoleculeParams",
    "MorsePDMError",
    "NoBoundStatesError",
    "NoSpectrumError",
    "NoSuchLevelError",
    "OracleProblem",
    "OracleResult",
    "OrderingScheme",
    "PekerisCoeffs",
    "RadialSolution",
    "SingularMassError",
    "SpectrumInputs",
    "UnboundLevelError",
    "UnknownMoleculeError",
    "UnknownOrderingError",
    "WaveParams",
    "default_grid",
    "derive_scales",
    "energy",
    "eps_nl",
    "exponent_S",
    "extra_potential_poly",
    "gamma1",
    "gamma2",
    "hyp2F1_terminating",
    "jacobi_P",
    "lin_coeff",
    "load_molecule_dir",
    "mass_at",
    "morse_potential",
    "n_max",
    "normalization_series_check",
    "ordering_potential_at",
    "parse_molecule_file",
    "pct_term_at",
    "pekeris_coeffs",
    "phi_pdm",
    "preset",
    "psi_constmass",
    "psi_pdm",
    "quad_coeff",
    "reference_coupling_poly",
    "registry_lookup",
    "rotational_potential_at",
    "solve_level",
    "swave_energy",
    "wave_params",
]
