"""Global weighted-throughput power control by polyblock outer approximation."""

from ._core import (
    FeasibilityReport,
    GridResult,
    InvalidInput,
    MapelResult,
    MaxMinSinrResult,
    Network,
    NumericalError,
    ProjectionResult,
    SolverConfig,
    TraceRow,
    check_feasibility,
    dump_instance,
    epsilon_bound,
    fraction_fg,
    grid_search,
    initial_vertex,
    load_instance,
    maxmin_sinr,
    paper_fixture,
    phi,
    project,
    random_network,
    recover_power,
    sinr,
    solve,
    weighted_throughput,
)

__all__ = [name for name in dir() if not name.startswith("_")]
