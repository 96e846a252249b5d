"""latticedec: local vs collective dephasing of lattice-trapped atoms.

Simulates N atoms held in a state-dependent optical lattice whose two
internal states are pulled apart by a distance d(t), and compares two ways
their coherence can die: local dephasing from lattice-photon scattering and
collective dephasing from a gravitationally induced collapse of the spatial
superposition. Includes the transport constraints (acceleration, trap
temperature), feasibility sweeps over laser parameters, and trajectory
optimization, plus a CLI front-end.
"""

from latticedec._kernels import BACKEND as KERNEL_BACKEND
from latticedec.constants import (
    CONSTANTS,
    AtomSpecies,
    PhysicalConstants,
    species_by_name,
    species_rb87,
)
from latticedec.decoherence import (
    CollectiveNoiseStrength,
    DensityMatrix,
    ScatteringRates,
    apply_collective_dephasing,
    apply_local_dephasing,
    gamma_of_t,
    lindblad_evolve,
    overlap_ghz,
    overlap_qg_asymptotic,
    overlap_qg_exact_sum,
    overlap_qg_quadrature,
    overlap_sc,
    scattering_rates,
)
from latticedec.feasibility import (
    SWEEP_CSV_HEADER,
    FeasibilityPoint,
    LocalizationModel,
    SweepResult,
    crossing_omega_minus,
    optimize_profile,
    profile_for_effective_distance,
    qg_rate,
    ratio_r,
    sweep,
)
from latticedec.transport import (
    ALPHA,
    EomResult,
    LatticeConfig,
    TrajectoryProfile,
    effective_distance,
    max_acceleration,
    omega_trap,
    potential_g,
    potential_s,
    required_peak_acceleration,
    separation,
    simulate_eom,
    trap_temperature,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "AtomSpecies",
    "CONSTANTS",
    "CollectiveNoiseStrength",
    "DensityMatrix",
    "EomResult",
    "FeasibilityPoint",
    "KERNEL_BACKEND",
    "LatticeConfig",
    "LocalizationModel",
    "PhysicalConstants",
    "SWEEP_CSV_HEADER",
    "ScatteringRates",
    "SweepResult",
    "TrajectoryProfile",
    "apply_collective_dephasing",
    "apply_local_dephasing",
    "crossing_omega_minus",
    "effective_distance",
    "gamma_of_t",
    "lindblad_evolve",
    "max_acceleration",
    "omega_trap",
    "optimize_profile",
    "overlap_ghz",
    "overlap_qg_asymptotic",
    "overlap_qg_exact_sum",
    "overlap_qg_quadrature",
    "overlap_sc",
    "potential_g",
    "potential_s",
    "profile_for_effective_distance",
    "qg_rate",
    "ratio_r",
    "required_peak_acceleration",
    "scattering_rates",
    "separation",
    "simulate_eom",
    "species_by_name",
    "species_rb87",
    "sweep",
    "trap_temperature",
    "__version__",
]
