"""Cost oracles, sweep runner, and scaling-trend fits.

Depth is greedy earliest-slot layering over disjoint qubits; size is the
gate count. Both are reported at two granularities: the logical gate set
as built, and the {single-qubit, CNOT} basis after exact lowering.

Sweeps need no simulation, so level counts in the hundreds are cheap at
logical granularity. Basis granularity of the recursion method grows
exponentially in log2(N) through its ancilla-free multi-controlled X, so
keep basis sweeps of that method to moderate N.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .circuit import Circuit, Granularity, cost
from .converters import (
    EvenMethod,
    binary_width,
    build_cnot_stair,
    build_edick_to_binary,
    build_edick_to_onehot,
)

SWEEP_CSV_HEADER = (
    "N,method,depth_logical,depth_basis,size_logical,size_basis,ancilla,build_time_ms"
)

# Buildable subjects of a sweep: the three staircase-to-binary methods,
# the staircase-to-one-hot converter, and its quadratic baseline.
SWEEP_SUBJECTS = (
    "recursion",
    "expand-n-plus-1",
    "expand-pow2",
    "onehot",
    "cnot-stair",
)


@dataclass(frozen=True)
class SweepRow:
    num_levels: int
    method: str
    depth_logical: int
    depth_basis: int
    size_logical: int
    size_basis: int
    ancilla: int
    build_time_ms: float

    def __post_init__(self) -> None:
        for field in (
            self.num_levels,
            self.depth_logical,
            self.depth_basis,
            self.size_logical,
            self.size_basis,
            self.ancilla,
            self.build_time_ms,
        ):
            if field < 0:
                raise ValueError("sweep metrics are non-negative")
        if self.depth_logical > self.size_logical or self.depth_basis > self.size_basis:
            raise ValueError("depth cannot exceed size")

    def to_csv(self) -> str:
        return (
            f"{self.num_levels},{self.method},{self.depth_logical},"
            f"{self.depth_basis},{self.size_logical},{self.size_basis},"
            f"{self.ancilla},{self.build_time_ms!r}"
        )


def predicted_edick_to_onehot_depth(num_levels: int) -> int:
    """Analytic depth claim for the one-hot unfolding: 2*ceil(log2 N) - 1.

    The built circuit attains this exactly at powers of two; see
    measured_edick_to_onehot_depth for the value the construction
    actually realizes at every N.
    """
    return 2 * binary_width(num_levels) - 1


def measured_edick_to_onehot_depth(num_levels: int) -> int:
    """Closed form of the greedy depth the built unfolding realizes.

    With b = bit_length(N): depth = 2b - 3, plus 1 when the second
    highest bit of N is set. Agrees with the 2*ceil(log2 N) - 1 claim
    exactly when N is a power of two.
    """
    if num_levels < 2:
        raise ValueError("need at least two levels")
    if num_levels == 2:
        return 1
    bits = num_levels.bit_length()
    second_bit = (num_levels >> (bits - 2)) & 1
    return 2 * bits - 3 + second_bit


def edick_to_onehot_size_bound(num_levels: int) -> float:
    """Analytic size bound claim for the one-hot unfolding: 1 + N + log2 N."""
    return 1.0 + num_levels + math.log2(num_levels)


def edick_to_onehot_size(num_levels: int) -> int:
    """Gate-count recurrence of the unfolding: s(2N)=s(N)+2N-1, s(N+1)=s(N)+1."""
    if num_levels < 2:
        raise ValueError("need at least two levels")
    if num_levels == 2:
        return 1
    if num_levels % 2 == 0:
        return edick_to_onehot_size(num_levels // 2) + num_levels - 1
    return edick_to_onehot_size(num_levels - 1) + 1


def _build_subject(subject: str, num_levels: int) -> tuple[Circuit, int]:
    if subject == "onehot":
        return build_edick_to_onehot(num_levels), 0
    if subject == "cnot-stair":
        return build_cnot_stair(num_levels), 0
    circuit, plan = build_edick_to_binary(num_levels, EvenMethod(subject))
    return circuit, plan.ancilla


def run_sweep(
    level_counts: Iterable[int],
    subjects: Sequence[str] = ("recursion", "expand-n-plus-1", "expand-pow2"),
    granularity: Granularity = Granularity.TWO_QUBIT_BASIS,
    measure_time: bool = False,
) -> list[SweepRow]:
    """Build every (N, subject) pair and report costs, in the given order.

    With granularity LOGICAL the basis columns are left at 0. Build times
    default to 0.0 so repeated runs are byte-identical; pass measure_time
    to record wall-clock milliseconds instead.
    """
    for subject in subjects:
        if subject not in SWEEP_SUBJECTS:
            raise ValueError(f"unknown sweep subject {subject!r}")
    rows = []
    for num_levels in level_counts:
        for subject in subjects:
            start = time.perf_counter()
            circuit, ancilla = _build_subject(subject, num_levels)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            logical = cost(circuit, Granularity.LOGICAL, ancilla)
            if granularity is Granularity.TWO_QUBIT_BASIS:
                basis = cost(circuit, Granularity.TWO_QUBIT_BASIS, ancilla)
                depth_basis, size_basis = basis.depth, basis.size
            else:
                depth_basis, size_basis = 0, 0
            rows.append(
                SweepRow(
                    num_levels=num_levels,
                    method=subject,
                    depth_logical=logical.depth,
                    depth_basis=depth_basis,
                    size_logical=logical.size,
                    size_basis=size_basis,
                    ancilla=ancilla,
                    build_time_ms=elapsed_ms if measure_time else 0.0,
                )
            )
    return rows


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    return "\n".join([SWEEP_CSV_HEADER] + [row.to_csv() for row in rows]) + "\n"


class ScalingModel(Enum):
    LINEAR = "A*N"
    LOG_SQUARED = "A*log2(N)^2"


def fit_scaling(
    points: Sequence[tuple[int, float]],
    model: ScalingModel,
) -> tuple[float, float]:
    """Least-squares one-coefficient fit and its worst relative residual.

    Returns (A, max over points of |y - A*g(N)| / y) where g is N or
    log2(N)^2 per the model.
    """
    if len(points) < 5:
        raise ValueError("need at least five points to fit a trend")
    if model is ScalingModel.LINEAR:
        basis = [float(n) for n, _ in points]
    else:
        basis = [math.log2(n) ** 2 for n, _ in points]
    values = [float(y) for _, y in points]
    if any(y <= 0 for y in values):
        raise ValueError("scaling fits need positive values")
    coefficient = sum(g * y for g, y in zip(basis, values)) / sum(g * g for g in basis)
    worst = max(abs(y - coefficient * g) / y for g, y in zip(basis, values))
    return coefficient, worst
