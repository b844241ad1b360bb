"""Reversible one-way and sweeping finite automata: models, simulators,
transformations between them and tools for checking their languages."""

from .core import (AcceptanceMode, MachineClass, OneWayMachine, StructuralError,
                   SweepingMachine, ValidationReport, infer_class, validate)
from .funcmath import PartialInjection
from .sim import Trace, Verdict, accepts, count_passes, run, run_mrfa, run_one_way, run_sweeping

__version__ = "0.1.0"

__all__ = [
    "AcceptanceMode", "MachineClass", "OneWayMachine", "PartialInjection", "StructuralError",
    "SweepingMachine", "Trace", "ValidationReport", "Verdict", "accepts", "count_passes",
    "infer_class", "run", "run_mrfa", "run_one_way", "run_sweeping", "validate",
]
