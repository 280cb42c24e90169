"""Resonance energy shift of two uniformly accelerated, correlated atoms.

The package computes the radiation-reaction resonance shift for a pair
of two-level atoms sharing one excitation in a symmetric or
antisymmetric state, riding parallel uniformly accelerated
trajectories.  Scalar and electromagnetic couplings are covered, with
closed forms, far-zone asymptotes, and independent numerical
cross-checks of every result.
"""

from .core import (
    CONSTANTS,
    BOLTZMANN,
    REDUCED_PLANCK,
    SPEED_OF_LIGHT,
    DomainError,
    EnergyShift,
    FieldKind,
    FieldKindError,
    Parity,
    PhysicalConstants,
    ReducedGeometry,
    Regime,
    Scenario,
    UsageError,
    asinh_ratio,
    atomic_correlation_factor,
    parity_sign,
    reduced_geometry,
    scenario_geometry,
    unruh_temperature,
)
from .em import (
    CommutatorSlice,
    EmSpectralTensors,
    PotentialTensors,
    SpectralCoefficients,
    Tensor3,
    em_commutator_timedomain,
    em_farzone_asymptote,
    em_inertial_potential,
    em_potential_tensors,
    em_resonance_energy,
    em_spectral_coefficients,
    em_spectral_tensors,
    em_wightman_tensor,
)
from .oracle import (
    CalibrationError,
    CheckResult,
    VerificationReport,
    asymptote_convergence_report,
    commutator_agreeing_components,
    em_commutator_consistency,
    em_energy_pv_oracle,
    em_pv_suite,
    scalar_energy_pv_oracle,
    scalar_pv_suite,
)
from .quad import (
    QuadratureError,
    QuadratureSpec,
    SingularityError,
    TrigPolyDensity,
    adaptive_integral,
    damped_trig_moment,
    damped_trig_moment_limit,
    neville_extrapolate,
    pv_resonance_kernel,
)
from .scalar import (
    scalar_chi_density,
    scalar_farzone_asymptote,
    scalar_inertial_limit,
    scalar_resonance_energy,
)

__version__ = "0.1.0"

__all__ = [
    "BOLTZMANN",
    "CONSTANTS",
    "REDUCED_PLANCK",
    "SPEED_OF_LIGHT",
    "CalibrationError",
    "CheckResult",
    "CommutatorSlice",
    "DomainError",
    "EmSpectralTensors",
    "EnergyShift",
    "FieldKind",
    "FieldKindError",
    "Parity",
    "PhysicalConstants",
    "PotentialTensors",
    "QuadratureError",
    "QuadratureSpec",
    "ReducedGeometry",
    "Regime",
    "Scenario",
    "SingularityError",
    "SpectralCoefficients",
    "Tensor3",
    "TrigPolyDensity",
    "UsageError",
    "VerificationReport",
    "adaptive_integral",
    "asinh_ratio",
    "asymptote_convergence_report",
    "atomic_correlation_factor",
    "commutator_agreeing_components",
    "damped_trig_moment",
    "damped_trig_moment_limit",
    "em_commutator_consistency",
    "em_commutator_timedomain",
    "em_energy_pv_oracle",
    "em_farzone_asymptote",
    "em_inertial_potential",
    "em_potential_tensors",
    "em_pv_suite",
    "em_resonance_energy",
    "em_spectral_coefficients",
    "em_spectral_tensors",
    "em_wightman_tensor",
    "neville_extrapolate",
    "parity_sign",
    "pv_resonance_kernel",
    "reduced_geometry",
    "scalar_chi_density",
    "scalar_energy_pv_oracle",
    "scalar_farzone_asymptote",
    "scalar_inertial_limit",
    "scalar_pv_suite",
    "scalar_resonance_energy",
    "scenario_geometry",
    "unruh_temperature",
    "__version__",
]
