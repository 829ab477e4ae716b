"""Qubit homogenization simulator (partial swap and controlled swap)."""

from ._qhomog import (
    QhomogError,
    bloch_to_density,
    cswap,
    density_to_bloch,
    fidelity,
    fidelity_gap_bound,
    joint_entropy_series,
    max_reuse_count,
    min_reservoir_reuse,
    min_reservoir_single,
    oracle_step,
    partial_trace,
    pswap,
    scan_fidelity_gap_bound,
    simulate,
    step,
    verify,
    von_neumann_entropy,
)

__all__ = [
    "QhomogError",
    "bloch_to_density",
    "cswap",
    "density_to_bloch",
    "fidelity",
    "fidelity_gap_bound",
    "joint_entropy_series",
    "max_reuse_count",
    "min_reservoir_reuse",
    "min_reservoir_single",
    "oracle_step",
    "partial_trace",
    "pswap",
    "scan_fidelity_gap_bound",
    "simulate",
    "step",
    "verify",
    "von_neumann_entropy",
]
