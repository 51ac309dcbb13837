"""Collective-instability simulator for ion-solvated water rotors.

Derives the two-level water-rotor constants and gain coefficients from
CODATA values, integrates the N-particle phase/field equations of
motion, and packages scenario execution (including the myelinated-axon
preset) behind a config-file driven CLI.
"""

from .config import AXON, AxonPreset, ConfigError, ScenarioConfig, load_config
from .constants import CODATA2018, PhysicalConstants
from .dynamics import (
    Diagnostics,
    EnsembleState,
    NumericalBlowupError,
    PolarSingularityError,
    SimConfig,
    Trajectory,
    init_ensemble,
    physical_readout,
    polar_equivalence,
    run,
    step,
)
from .mixing import (
    C_P,
    DELTA_W_LIMIT_CYCLE,
    MixedStates,
    PolarizationResult,
    linearized_polarization,
    mixed_states,
    permanent_polarization,
    polarization_result,
    solvation_inversion,
)
from .quadrature import dipole_matrix_element
from .rotor import (
    RigidRotor,
    ThermalInversion,
    ThermalPopulation,
    build_rotor,
    population_ratio,
    rotational_level_energy,
    thermal_inversion,
    thermal_population,
)
from .scaling import (
    GainCoefficients,
    SystemParams,
    alpha_beta,
    from_dimensionless,
    gain_coefficients,
    saturation_scales,
    to_dimensionless,
)
from .scenario import (
    ScenarioResult,
    SlippageDiagnostic,
    run_scenario,
    slippage_check,
    sweep,
)
from .spinstates import (
    Frame,
    SpinOperators,
    SuperradiantPair,
    energy_spins,
    make_frame,
    per_ion_ponderomotive,
    ponderomotive_term,
    spin_expectation,
    superradiant_pair,
)

__version__ = "0.1.0"
