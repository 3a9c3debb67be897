"""Randomized phase folding for Clifford+T circuits."""

from ._core import (
    Circuit,
    cancel_adjacent,
    emit_qasm,
    equivalent,
    fold,
    optimize,
    parse_qasm,
    random_circuit,
    required_width,
    simulate,
    tchain_cx_circuit,
)

__all__ = [
    "Circuit",
    "cancel_adjacent",
    "emit_qasm",
    "equivalent",
    "fold",
    "optimize",
    "parse_qasm",
    "random_circuit",
    "required_width",
    "simulate",
    "tchain_cx_circuit",
]
