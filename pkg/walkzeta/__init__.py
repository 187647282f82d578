"""walk-zeta - walk-type zeta functions on tori and regular graphs.

This package evaluates the inverse zeta function of quantum walks,
correlated random walks and random walks on the d-dimensional torus, both
through the Fourier block factorization and through the dense walk operator,
tabulates its series coefficients, and checks the closed-form factorizations
and the Konno-Sato identity numerically.
"""

__version__ = "0.1.0"

from .schemas import (
    CheckResult,
    Classification,
    ClosedFormFamily,
    ClosedFormId,
    ModelFamily,
    RegularGraph,
    RunConfig,
    ShiftType,
    StateField,
    SuiteResult,
    TorusSpec,
    VerificationResult,
    WalkModel,
    ZetaReport,
)
from .exceptions import (
    ClosedFormError,
    ConfigError,
    ConvergenceDiskError,
    DimensionError,
    GraphError,
    ModelError,
    NumericsError,
    SizeCapError,
    WalkZetaError,
)
from .coin_models import (
    GROVER_ETA,
    classify,
    crw_from_qw,
    custom_model,
    four_state_qw_1d,
    four_state_qw_2d,
    generalized_grover_coin,
    model_from_config,
    multistate_rw,
    simple_rw,
    three_state_qw,
    uniform_rw,
    window_rw,
)
from .walk_operator import (
    block_spectrum,
    delta_state,
    evolve_step,
    fourier_block,
    full_operator,
    measure,
    origin_weights,
    trajectory,
)
from .zeta_engine import (
    c_r_finite,
    c_r_limit,
    c_r_weight_series,
    coefficient_table,
    zeta_inv_finite,
    zeta_inv_full_operator,
    zeta_inv_limit,
    zeta_report,
)
from .closed_forms import (
    F_value,
    closed_eigenvalues,
    closed_form_for,
    closed_zeta_inv,
    prefactor,
    verify_closed_form,
)
from .graph_zeta import (
    arc_operator,
    build_graph,
    konno_sato_lhs,
    konno_sato_rhs,
    verify_konno_sato,
)
from .verification import run_suites


__all__ = [
    "__version__",
    # Schemas
    "CheckResult",
    "Classification",
    "ClosedFormFamily",
    "ClosedFormId",
    "ModelFamily",
    "RegularGraph",
    "RunConfig",
    "ShiftType",
    "StateField",
    "SuiteResult",
    "TorusSpec",
    "VerificationResult",
    "WalkModel",
    "ZetaReport",
    # Errors
    "ClosedFormError",
    "ConfigError",
    "ConvergenceDiskError",
    "DimensionError",
    "GraphError",
    "ModelError",
    "NumericsError",
    "SizeCapError",
    "WalkZetaError",
    # Coin models
    "GROVER_ETA",
    "classify",
    "crw_from_qw",
    "custom_model",
    "four_state_qw_1d",
    "four_state_qw_2d",
    "generalized_grover_coin",
    "model_from_config",
    "multistate_rw",
    "simple_rw",
    "three_state_qw",
    "uniform_rw",
    "window_rw",
    # Walk operator
    "block_spectrum",
    "delta_state",
    "evolve_step",
    "fourier_block",
    "full_operator",
    "measure",
    "origin_weights",
    "trajectory",
    # Zeta engine
    "c_r_finite",
    "c_r_limit",
    "c_r_weight_series",
    "coefficient_table",
    "zeta_inv_finite",
    "zeta_inv_full_operator",
    "zeta_inv_limit",
    "zeta_report",
    # Closed forms
    "F_value",
    "closed_eigenvalues",
    "closed_form_for",
    "closed_zeta_inv",
    "prefactor",
    "verify_closed_form",
    # Graph zeta
    "arc_operator",
    "build_graph",
    "konno_sato_lhs",
    "konno_sato_rhs",
    "verify_konno_sato",
    # Verification
    "run_suites",
]
