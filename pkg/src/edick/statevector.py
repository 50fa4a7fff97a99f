"""Dense statevector simulation of the gate set.

Amplitudes are complex128 over basis index sum(b_q * 2**(n-1-q)), matching the
circuit convention (qubit 0 is the leftmost ket position).  Purely classical
permutation gates (X, CNOT, Toffoli, MCX) are applied as index moves, never as
matrix arithmetic, so they are float-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind

_NORM_TOL = 1e-10
_MAX_QUBITS = 24  # dense float64 memory wall; acceptance needs no more than 17


@dataclass(frozen=True)
class Statevector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.num_qubits <= _MAX_QUBITS:
            raise ValueError(f"register width must be in 1..{_MAX_QUBITS}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape != (2**self.num_qubits,):
            raise ValueError("amplitude count must be 2**num_qubits")
        if abs(np.linalg.norm(amps) - 1.0) > _NORM_TOL:
            raise ValueError("statevector must be normalized to 1 within 1e-10")
        object.__setattr__(self, "amplitudes", amps)


def zero_state(num_qubits: int) -> Statevector:
    return basis_state(num_qubits, 0)


def basis_state(num_qubits: int, index: int) -> Statevector:
    if not 0 <= index < 2**num_qubits:
        raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return Statevector(num_qubits, amps)


def from_amplitudes(amplitudes: np.ndarray | list[complex]) -> Statevector:
    amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    n = int(amps.shape[0]).bit_length() - 1
    return Statevector(n, amps)


def _apply_inplace(tensor: np.ndarray, gate: Gate, num_qubits: int) -> None:
    # Pin every control axis to 1; the remaining view is the active subspace.
    idx: list[object] = [slice(None)] * num_qubits
    for c in gate.controls:
        idx[c] = 1
    view = tensor[tuple(idx)]
    axis = gate.target - sum(c < gate.target for c in gate.controls)
    lo: list[object] = [slice(None)] * view.ndim
    hi: list[object] = [slice(None)] * view.ndim
    lo[axis] = 0
    hi[axis] = 1
    sl0, sl1 = tuple(lo), tuple(hi)

    kind = gate.kind
    if kind in (GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX):
        swap = view[sl0].copy()
        view[sl0] = view[sl1]
        view[sl1] = swap
    elif kind is GateKind.H:
        a = view[sl0].copy()
        b = view[sl1].copy()
        r = 1.0 / math.sqrt(2.0)
        view[sl0] = (a + b) * r
        view[sl1] = (a - b) * r
    elif kind in (GateKind.RY, GateKind.CRY, GateKind.CCRY):
        c = math.cos(gate.angle / 2.0)
        s = math.sin(gate.angle / 2.0)
        a = view[sl0].copy()
        b = view[sl1].copy()
        view[sl0] = c * a - s * b
        view[sl1] = s * a + c * b
    elif kind in (GateKind.PHASE, GateKind.CPHASE):
        view[sl1] = view[sl1] * complex(math.cos(gate.angle), math.sin(gate.angle))
    else:  # pragma: no cover - the enum is closed
        raise ValueError(f"unsupported gate kind {kind}")


def apply(state: Statevector, gate: Gate) -> Statevector:
    """Apply one gate, returning a fresh statevector."""
    if max(gate.qubits) >= state.num_qubits:
        raise ValueError("gate acts outside the register")
    amps = state.amplitudes.copy()
    _apply_inplace(amps.reshape([2] * state.num_qubits), gate, state.num_qubits)
    return Statevector(state.num_qubits, amps)


def run(state: Statevector, circuit: Circuit) -> Statevector:
    """Apply a whole circuit, checking norm preservation after every gate."""
    if circuit.num_qubits != state.num_qubits:
        raise ValueError(
            f"circuit width {circuit.num_qubits} does not match state width {state.num_qubits}"
        )
    amps = state.amplitudes.copy()
    tensor = amps.reshape([2] * state.num_qubits)
    for gate in circuit.gates:
        _apply_inplace(tensor, gate, state.num_qubits)
        if abs(np.linalg.norm(amps) - 1.0) > _NORM_TOL:
            raise AssertionError(f"norm drifted past 1e-10 after {gate}")
    return Statevector(state.num_qubits, amps)


def fidelity(a: Statevector, b: Statevector) -> float:
    """|<a|b>|, i.e. overlap magnitude, insensitive to global phase."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("fidelity needs equal register widths")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))


def to_csv(state: Statevector) -> str:
    """Amplitude dump with columns index,real,imag (one row per basis index)."""
    lines = ["index,real,imag"]
    for i, amp in enumerate(state.amplitudes):
        lines.append(f"{i},{float(amp.real)!r},{float(amp.imag)!r}")
    return "\n".join(lines) + "\n"
