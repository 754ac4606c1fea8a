"""Exact entanglement dynamics of two qubits in finite dephasing qubit baths."""

from .model import (
    EnvironmentSpec,
    EnvQubit,
    ProductState,
    SystemParams,
    WernerLikeState,
    distinct_case1,
    distinct_homogeneous,
    homogeneous_mutual,
    initial_coefficients,
    make_environment,
    make_unbiased_ps,
    mixed,
    white_noise_mutual,
)
from .dynamics import (
    decoherence_factor,
    decoherence_factor_binomial,
    decoherence_factors,
    reduced_density,
    reduced_density_series,
    s_factor,
)
from .entanglement import concurrence, concurrence_x_state, spin_flip
from .oracle import brute_force_reduced_density, diagonal_energies
from .sweep import (
    ConcurrenceGrid,
    EnvironmentRecipe,
    SweepSpec,
    TimeGrid,
    dissipation_time,
    max_concurrence,
    revival_period,
    run_sweep,
    sample_white_noise,
)

__version__ = "0.1.0"
