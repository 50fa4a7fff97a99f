"""Gate-level circuit intermediate representation.

Qubits are indexed 0..n-1 left to right in ket notation, so qubit 0 is the
most significant bit of a basis index: |b_0 b_1 ... b_{n-1}> has index
sum(b_q * 2**(n-1-q)).  Gates and circuits are immutable after construction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace


class GateKind(enum.Enum):
    X = "x"
    H = "h"
    RY = "ry"
    PHASE = "phase"
    CNOT = "cnot"
    CPHASE = "cphase"
    CRY = "cry"
    CCRY = "ccry"
    TOFFOLI = "toffoli"
    MCX = "mcx"


# Control arity per kind; MCX is variable (>= 3, smaller counts have their own kind).
_FIXED_CONTROLS = {
    GateKind.X: 0,
    GateKind.H: 0,
    GateKind.RY: 0,
    GateKind.PHASE: 0,
    GateKind.CNOT: 1,
    GateKind.CPHASE: 1,
    GateKind.CRY: 1,
    GateKind.CCRY: 2,
    GateKind.TOFFOLI: 2,
}

_ANGLED = {GateKind.RY, GateKind.PHASE, GateKind.CPHASE, GateKind.CRY, GateKind.CCRY}

# Self-inverse kinds; the angled ones invert by negating the angle.
_SELF_INVERSE = {GateKind.X, GateKind.H, GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX}


@dataclass(frozen=True, slots=True)
class Gate:
    """One gate application: a kind, optional controls, one target, optional angle."""

    kind: GateKind
    target: int
    controls: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.kind is GateKind.MCX:
            if len(self.controls) < 3:
                raise ValueError("MCX needs at least 3 controls; use CNOT or TOFFOLI below that")
        elif len(self.controls) != _FIXED_CONTROLS[self.kind]:
            raise ValueError(
                f"{self.kind.value} takes {_FIXED_CONTROLS[self.kind]} control(s), "
                f"got {len(self.controls)}"
            )
        if self.kind in _ANGLED:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{self.kind.value} needs a finite angle")
        elif self.angle is not None:
            raise ValueError(f"{self.kind.value} takes no angle")
        qubits = self.qubits
        if any(q < 0 for q in qubits):
            raise ValueError("qubit indices must be non-negative")
        if len(set(qubits)) != len(qubits):
            raise ValueError("control and target qubits must be distinct")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def inverse(self) -> Gate:
        if self.kind in _SELF_INVERSE:
            return self
        return replace(self, angle=-self.angle)

    def remapped(self, mapping: dict[int, int]) -> Gate:
        return replace(
            self,
            target=mapping[self.target],
            controls=tuple(mapping[c] for c in self.controls),
        )


def x(q: int) -> Gate:
    return Gate(GateKind.X, q)


def h(q: int) -> Gate:
    return Gate(GateKind.H, q)


def ry(theta: float, q: int) -> Gate:
    return Gate(GateKind.RY, q, angle=theta)


def phase(lam: float, q: int) -> Gate:
    return Gate(GateKind.PHASE, q, angle=lam)


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, target, (control,))


def cphase(lam: float, control: int, target: int) -> Gate:
    return Gate(GateKind.CPHASE, target, (control,), lam)


def cry(theta: float, control: int, target: int) -> Gate:
    return Gate(GateKind.CRY, target, (control,), theta)


def ccry(theta: float, c0: int, c1: int, target: int) -> Gate:
    return Gate(GateKind.CCRY, target, (c0, c1), theta)


def toffoli(c0: int, c1: int, target: int) -> Gate:
    return Gate(GateKind.TOFFOLI, target, (c0, c1))


def mcx(controls: tuple[int, ...] | list[int], target: int) -> Gate:
    """Multi-controlled X; collapses to CNOT/TOFFOLI for 1 or 2 controls."""
    controls = tuple(controls)
    if len(controls) == 0:
        return x(target)
    if len(controls) == 1:
        return cnot(controls[0], target)
    if len(controls) == 2:
        return toffoli(controls[0], controls[1], target)
    return Gate(GateKind.MCX, target, controls)


@dataclass(frozen=True, slots=True)
class Circuit:
    """An ordered gate list over a fixed-width qubit register."""

    num_qubits: int
    gates: tuple[Gate, ...] = ()
    label: str = ""

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.num_qubits:
                raise ValueError(f"gate {g} exceeds register width {self.num_qubits}")

    def __len__(self) -> int:
        return len(self.gates)


def compose(first: Circuit, second: Circuit, label: str = "") -> Circuit:
    """Circuit that applies `first`, then `second`; widths must agree."""
    if first.num_qubits != second.num_qubits:
        raise ValueError(
            f"cannot compose circuits of widths {first.num_qubits} and {second.num_qubits}"
        )
    return Circuit(first.num_qubits, first.gates + second.gates, label or first.label)


def inverse(circuit: Circuit) -> Circuit:
    """Exact inverse: reversed gate order, each gate inverted."""
    label = f"inverse({circuit.label})" if circuit.label else ""
    return Circuit(
        circuit.num_qubits,
        tuple(g.inverse() for g in reversed(circuit.gates)),
        label,
    )


def remap(
    circuit: Circuit,
    mapping: dict[int, int] | list[int] | tuple[int, ...],
    num_qubits: int,
) -> Circuit:
    """Embed a circuit into a wider register.

    `mapping` sends old indices to new ones, as a dict or as a sequence
    indexed by old qubit. It must cover every qubit of the circuit
    injectively.
    """
    if isinstance(mapping, dict):
        table = dict(mapping)
    else:
        table = {i: m for i, m in enumerate(mapping)}
    if len(table) < circuit.num_qubits or set(table) != set(range(circuit.num_qubits)):
        raise ValueError("mapping must cover qubits 0..num_qubits-1 of the circuit")
    if len(set(table.values())) != len(table):
        raise ValueError("mapping must be injective")
    return Circuit(num_qubits, tuple(g.remapped(table) for g in circuit.gates), circuit.label)


class Granularity(enum.Enum):
    LOGICAL = "logical"
    TWO_QUBIT_BASIS = "two-qubit-basis"


@dataclass(frozen=True, slots=True)
class CostReport:
    depth: int
    size: int
    ancilla: int
    granularity: Granularity

    def __post_init__(self) -> None:
        if self.depth > self.size:
            raise ValueError("depth cannot exceed size")
        if (self.depth == 0) != (self.size == 0):
            raise ValueError("depth and size are zero together or not at all")


def depth_of(gates: tuple[Gate, ...]) -> int:
    # Greedy left-to-right layering: each gate lands on the earliest layer where
    # all its qubits are free, i.e. one past the last layer touching any of them.
    free: dict[int, int] = {}
    top = 0
    for g in gates:
        layer = max((free.get(q, 0) for q in g.qubits), default=0) + 1
        for q in g.qubits:
            free[q] = layer
        if layer > top:
            top = layer
    return top


def cost(circuit: Circuit, granularity: Granularity = Granularity.LOGICAL, ancilla: int = 0) -> CostReport:
    """Depth (greedy layering) and gate count, at logical or two-qubit-basis granularity.

    `ancilla` is pass-through bookkeeping supplied by the caller; nothing is inferred.
    """
    if granularity is Granularity.TWO_QUBIT_BASIS:
        from .decompose import decompose_to_basis

        circuit = decompose_to_basis(circuit)
    return CostReport(depth_of(circuit.gates), len(circuit.gates), ancilla, granularity)
