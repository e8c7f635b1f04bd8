"""Principal eigenvalues and optimal bang-bang weights for Robin problems."""

from ._core import (
    AdmissibilityParams,
    BangBangWeight,
    EigenResult,
    Error,
    Interval,
    OptimalSetPrediction,
    ReducedProblem,
    Regime,
    RobinProblem1D,
    ShellProblem,
    SweepLength,
    SweepResult,
    ThresholdReport,
    Variable,
    beta_star,
    check_admissible,
    classify_1d,
    classify_shell,
    fd_eigenvalue,
    find_threshold,
    map_r_to_t,
    map_t_to_r,
    predict_1d,
    predict_shell,
    principal_eigenvalue,
    pullback_to_t,
    radial_principal_eigenvalue,
    reduce,
    solid_angle_constant,
    sweep_placements_1d,
    sweep_placements_radial,
    weight_from_json,
    weight_to_json,
)

__version__ = "0.3.0"
__all__ = [name for name in dir() if not name.startswith("_")]
