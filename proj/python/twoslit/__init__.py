"""Two-particle two-slit coincidence simulator (C++ core)."""

from ._core import (
    BeamCoefficients,
    ConvergenceError,
    DegenerateFermionError,
    DetectionPattern,
    DiffractedState,
    FreeEvolutionCoefficients,
    InternalConsistencyError,
    InvalidParameterError,
    NonNormalizableError,
    PacketParams,
    QuadratureResult,
    QuadratureSpec,
    Slit,
    SlitGeometry,
    Statistics,
    TwoParticleSystem,
    TwoSlitError,
    __version__,
    diffracted_state,
    distinguishable_slice,
    exchange_slice,
    fixed_detector_pattern,
    free_evolution_coefficients,
    free_packet,
    initial_overlap,
    integrate_1d,
    joint_density,
    joint_norm,
    make_two_particle_system,
    mode_amplitude,
    oracle,
    pair_overlap,
    pair_overlap_terms,
    propagator_kernel,
    single_particle_norm,
    slit_amplitude,
    slit_beam_coefficients,
    statistics_name,
)

__all__ = [
    "BeamCoefficients",
    "ConvergenceError",
    "DegenerateFermionError",
    "DetectionPattern",
    "DiffractedState",
    "FreeEvolutionCoefficients",
    "InternalConsistencyError",
    "InvalidParameterError",
    "NonNormalizableError",
    "PacketParams",
    "QuadratureResult",
    "QuadratureSpec",
    "Slit",
    "SlitGeometry",
    "Statistics",
    "TwoParticleSystem",
    "TwoSlitError",
    "__version__",
    "diffracted_state",
    "distinguishable_slice",
    "exchange_slice",
    "fixed_detector_pattern",
    "free_evolution_coefficients",
    "free_packet",
    "initial_overlap",
    "integrate_1d",
    "joint_density",
    "joint_norm",
    "make_two_particle_system",
    "mode_amplitude",
    "oracle",
    "pair_overlap",
    "pair_overlap_terms",
    "propagator_kernel",
    "single_particle_norm",
    "slit_amplitude",
    "slit_beam_coefficients",
    "statistics_name",
]
