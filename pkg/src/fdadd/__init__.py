"""Functional data regression with excess basis functions.

Longitudinal samples are functionalized by minimum-norm interpolation onto
a basis, scalar-on-function and function-on-function regressions are fitted
with pseudo-inverse estimators, and a sweep runner reproduces the
double-descent behavior of the test error as the basis count crosses the
interpolation threshold.
"""

from .basis import BasisSpec, GramMatrix, design_matrix, eval_basis, gram_matrix, spline_knots
from .datagen import (
    Dataset,
    GpParams,
    ScenarioConfig,
    default_config,
    gen_fig1_demo,
    gen_scenario,
    rbf_kernel,
    sample_gp,
)
from .errors import (
    ConfigError,
    DataError,
    InvalidInputError,
    NoViableCandidateError,
    NumericalError,
)
from .experiment import (
    RealDataConfig,
    SweepConfig,
    SweepResult,
    emit_outputs,
    run_sweep,
    summarize,
    sweep_config_from_json,
    test_mse_fonf,
    test_mse_sonf,
)
from .functionalize import FunctionalDatum, LongitudinalSample, evaluate, fit_coefficients
from .linalg import kron_min_norm_solve, min_norm_lsq, svd_pinv
from .regression import (
    FonFFit,
    SonFFit,
    fit_fonf,
    fit_sonf,
    fonf_fit,
    fonf_predict,
    predict_curve,
    sonf_design,
    sonf_fit,
    sonf_predict,
)
from .selection import SelectionResult, caic_score, caic_select, cv_select, kfold_split

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "GramMatrix",
    "design_matrix",
    "eval_basis",
    "gram_matrix",
    "spline_knots",
    "Dataset",
    "GpParams",
    "ScenarioConfig",
    "default_config",
    "gen_fig1_demo",
    "gen_scenario",
    "rbf_kernel",
    "sample_gp",
    "ConfigError",
    "DataError",
    "InvalidInputError",
    "NoViableCandidateError",
    "NumericalError",
    "RealDataConfig",
    "SweepConfig",
    "SweepResult",
    "emit_outputs",
    "run_sweep",
    "summarize",
    "sweep_config_from_json",
    "test_mse_fonf",
    "test_mse_sonf",
    "FunctionalDatum",
    "LongitudinalSample",
    "evaluate",
    "fit_coefficients",
    "kron_min_norm_solve",
    "min_norm_lsq",
    "svd_pinv",
    "FonFFit",
    "SonFFit",
    "fit_fonf",
    "fit_sonf",
    "fonf_fit",
    "fonf_predict",
    "predict_curve",
    "sonf_design",
    "sonf_fit",
    "sonf_predict",
    "SelectionResult",
    "caic_score",
    "caic_select",
    "cv_select",
    "kfold_split",
    "__version__",
]
