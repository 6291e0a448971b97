"""Discrete-time quantum walks driven by a three-angle SU(2) coin.

The inner evolution loops live in a compiled extension (``_kernels``) with a
numpy fallback (``_kernels_py``); ``BACKEND`` names the one in use.
"""
from su2walk._backend import BACKEND
from su2walk.coin import (
    HADAMARD,
    PAULI_X,
    PAULI_Z,
    CoinMatrix,
    CoinParams,
    coin_matrix,
    phase_equivalent,
)
from su2walk.cycle import (
    CycleState,
    MixingResult,
    TimeAveragedDistribution,
    cycle_evolve,
    cycle_initial_state,
    cycle_step,
    mixing_time,
    time_averaged,
    tv_distance,
    tv_trace,
    uniform,
)
from su2walk.envelope import (
    EnvelopeModel,
    analytic_variance,
    envelope_density,
    envelope_integral,
    fit_c_theta,
)
from su2walk.errors import DomainError, ResourceError
from su2walk.statistics import (
    DistributionSummary,
    PositionDistribution,
    asymmetry,
    distribution,
    entropy,
    mean,
    summarize,
    variance,
)
from su2walk.walk import (
    InitialCondition,
    WalkState,
    check_decoupled_recurrence,
    evolve,
    evolve_history,
    initial_state,
    one_step_side_probabilities,
    recurrence_evolve,
    step,
)

__version__ = "0.1.0"
