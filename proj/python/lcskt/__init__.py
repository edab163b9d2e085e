"""Exact Hermitian geometry on low-dimensional Lie algebras.

Thin wrapper over the compiled extension: structure-equation parsing, torsion
and Lee-form computation, the closed-1-form solver, the almost abelian
decision procedures, and the reproduction/sweep registries.
"""

from ._core import (
    DslParseError,
    EngineError,
    UnboundParamError,
    UnknownNameError,
    UnknownScenarioError,
    almost_abelian,
    almost_abelian_catalog,
    canonical,
    catalog_names,
    check,
    hermitian,
    lattice_screen,
    run_all_scenarios,
    run_scenario,
    scenario_ids,
    solve,
    sweep,
    sweep_families,
)

__all__ = [
    "DslParseError",
    "EngineError",
    "UnboundParamError",
    "UnknownNameError",
    "UnknownScenarioError",
    "almost_abelian",
    "almost_abelian_catalog",
    "canonical",
    "catalog_names",
    "check",
    "hermitian",
    "lattice_screen",
    "run_all_scenarios",
    "run_scenario",
    "scenario_ids",
    "solve",
    "sweep",
    "sweep_families",
]
