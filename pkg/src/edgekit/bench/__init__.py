"""Benchmark harness and the ``bench`` command line."""

from .harness import (
    ExperimentPlan,
    Measurement,
    memory_experiment,
    run_experiment,
    write_memory_csv,
    write_time_csv,
)

__all__ = [
    "ExperimentPlan",
    "Measurement",
    "memory_experiment",
    "run_experiment",
    "write_memory_csv",
    "write_time_csv",
]
