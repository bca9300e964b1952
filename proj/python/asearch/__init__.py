"""Adaptive Search for permutation CSPs (C++ core)."""

from ._asearch import (
    Model,
    SolveOutcome,
    SolverParams,
    __version__,
    default_params,
    derive_seed,
    make_model,
    model_names,
    multi_walk_solve,
    random_permutation,
    run_benchmark,
    solve,
)

__all__ = [
    "Model",
    "SolveOutcome",
    "SolverParams",
    "__version__",
    "default_params",
    "derive_seed",
    "make_model",
    "model_names",
    "multi_walk_solve",
    "random_permutation",
    "run_benchmark",
    "solve",
]
