"""Python bindings for the hybrid real-coded quantum evolutionary algorithm."""

from ._core import (
    ConfigError,
    IoError,
    KnapsackInstance,
    Sense,
    ackley,
    amplitude_escape,
    clip_to_bounds,
    gene_count_schedule,
    generate_instance,
    griewank,
    is_feasible,
    load_instance,
    qrg_rotate,
    rastrigin,
    repair,
    rotation_angle,
    run_experiment,
    run_hrcqea,
    run_qea_knapsack,
    save_instance,
    schwefel,
    sphere,
    summarize_directory,
    total_profit,
)

__all__ = [
    "ConfigError",
    "IoError",
    "KnapsackInstance",
    "Sense",
    "ackley",
    "amplitude_escape",
    "clip_to_bounds",
    "gene_count_schedule",
    "generate_instance",
    "griewank",
    "is_feasible",
    "load_instance",
    "qrg_rotate",
    "rastrigin",
    "repair",
    "rotation_angle",
    "run_experiment",
    "run_hrcqea",
    "run_qea_knapsack",
    "save_instance",
    "schwefel",
    "sphere",
    "summarize_directory",
    "total_profit",
]
