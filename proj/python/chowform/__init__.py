"""Exact Chow forms, graph pushforwards and effective finiteness bounds."""

from ._core import (
    ChowError,
    ChowForm,
    DEFAULT_SEED,
    Delta,
    Poly,
    PushforwardResult,
    VariableSpace,
    chow_form,
    chow_membership_equations,
    compose,
    delta,
    delta_iter,
    delta_prime,
    dth_root,
    eliminate,
    embedding_bounds,
    graph_degree_bound,
    groebner_basis,
    meets,
    parse_poly,
    phi,
    pushforward,
    second_degree,
    total_bound,
)

__all__ = [
    "ChowError",
    "ChowForm",
    "DEFAULT_SEED",
    "Delta",
    "Poly",
    "PushforwardResult",
    "VariableSpace",
    "chow_form",
    "chow_membership_equations",
    "compose",
    "delta",
    "delta_iter",
    "delta_prime",
    "dth_root",
    "eliminate",
    "embedding_bounds",
    "graph_degree_bound",
    "groebner_basis",
    "meets",
    "parse_poly",
    "phi",
    "pushforward",
    "second_degree",
    "total_bound",
]
