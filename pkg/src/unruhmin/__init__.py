"""Measurement-induced nonlocality, geometric discord, and CHSH for
two-qubit X-states shared with a uniformly accelerated observer."""

from .correlations import (
    CorrelationReport,
    chsh_bmax,
    correlation_report,
    geometric_discord,
    min_AI,
    min_AII,
    min_closed,
    min_variational,
)
from .dynamics import (
    RegimeError,
    RegimeLabel,
    SumRegime,
    asymptote,
    classify,
    sum_min,
    sum_regime,
    t_sc_AI,
    t_sc_AII,
    t_sc_oracle,
)
from .qmat import eig_sym3, hs_norm_sq, partial_trace, tensor
from .states import (
    BlochForm,
    UnphysicalStateError,
    XStateParams,
    bloch_decompose,
    bloch_reconstruct,
    build_x_state,
    named_state,
)
from .unruh import (
    ThermalAmps,
    UnruhPoint,
    build_tripartite,
    closed_form_AI,
    closed_form_AII,
    reduce_AI,
    reduce_AII,
    thermal_amps,
)

__all__ = [
    "BlochForm", "CorrelationReport", "RegimeError", "RegimeLabel", "SumRegime",
    "ThermalAmps", "UnphysicalStateError", "UnruhPoint", "XStateParams",
    "asymptote", "bloch_decompose", "bloch_reconstruct", "build_tripartite",
    "build_x_state", "chsh_bmax", "classify", "closed_form_AI", "closed_form_AII",
    "correlation_report", "eig_sym3", "geometric_discord", "hs_norm_sq",
    "min_AI", "min_AII", "min_closed", "min_variational", "named_state",
    "partial_trace", "reduce_AI", "reduce_AII", "sum_min", "sum_regime",
    "t_sc_AI", "t_sc_AII", "t_sc_oracle", "tensor", "thermal_amps",
]
