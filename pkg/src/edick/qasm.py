"""OPENQASM 2.0 text for the subset of gates this library emits.

Supported statements: the version header, one qelib1 include, a single
``qreg q[n];`` declaration, and the gates x, h, ry, u1, cx, cu1, ccx.
Controlled rotations and multi-controlled X have no line form here; lower
them with :func:`edick.decompose.decompose_to_basis` before emitting.

Angles are printed with ``repr``, so parse_text(emit_text(c)) reproduces
the text byte for byte.
"""

from __future__ import annotations

import re

from .circuit import Circuit, Gate, GateKind, cnot, cphase, h, phase, ry, toffoli, x

_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_QREG_RE = re.compile(r"^qreg q\[(\d+)\];$")
_GATE_RE = re.compile(r"^(x|h|cx|ccx|ry|u1|cu1)(?:\(([^)]+)\))? ([^;]+);$")
_QUBIT_RE = re.compile(r"^q\[(\d+)\]$")


def _gate_line(gate: Gate) -> str:
    kind = gate.kind
    operands = ",".join(f"q[{q}]" for q in (*gate.controls, gate.target))
    if kind is GateKind.X:
        return f"x {operands};"
    if kind is GateKind.H:
        return f"h {operands};"
    if kind is GateKind.CNOT:
        return f"cx {operands};"
    if kind is GateKind.TOFFOLI:
        return f"ccx {operands};"
    if kind is GateKind.RY:
        return f"ry({gate.angle!r}) {operands};"
    if kind is GateKind.PHASE:
        return f"u1({gate.angle!r}) {operands};"
    if kind is GateKind.CPHASE:
        return f"cu1({gate.angle!r}) {operands};"
    raise ValueError(
        f"gate kind {kind.value} has no OPENQASM 2.0 line in this subset; "
        "decompose the circuit first"
    )


def emit_text(circuit: Circuit) -> str:
    """Render a circuit as OPENQASM 2.0 source."""
    lines = [_HEADER + f"qreg q[{circuit.num_qubits}];"]
    lines.extend(_gate_line(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def _parse_operands(text: str, line_no: int) -> tuple[int, ...]:
    qubits = []
    for token in text.split(","):
        match = _QUBIT_RE.match(token.strip())
        if match is None:
            raise ValueError(f"line {line_no}: bad operand {token.strip()!r}")
        qubits.append(int(match.group(1)))
    return tuple(qubits)


_ARITY = {"x": 1, "h": 1, "ry": 1, "u1": 1, "cx": 2, "cu1": 2, "ccx": 3}
_TAKES_ANGLE = {"ry", "u1", "cu1"}


def _build_gate(name: str, angle: float | None, qubits: tuple[int, ...]) -> Gate:
    if name == "x":
        return x(qubits[0])
    if name == "h":
        return h(qubits[0])
    if name == "ry":
        return ry(angle, qubits[0])
    if name == "u1":
        return phase(angle, qubits[0])
    if name == "cx":
        return cnot(qubits[0], qubits[1])
    if name == "cu1":
        return cphase(angle, qubits[0], qubits[1])
    return toffoli(qubits[0], qubits[1], qubits[2])


def parse_text(text: str) -> Circuit:
    """Parse OPENQASM 2.0 source restricted to the emitted subset."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("//")]
    if not lines or lines[0] != "OPENQASM 2.0;":
        raise ValueError("missing OPENQASM 2.0 header")
    pos = 1
    if pos < len(lines) and lines[pos] == 'include "qelib1.inc";':
        pos += 1
    if pos >= len(lines):
        raise ValueError("missing qreg declaration")
    qreg = _QREG_RE.match(lines[pos])
    if qreg is None:
        raise ValueError(f"expected qreg declaration, got {lines[pos]!r}")
    num_qubits = int(qreg.group(1))
    pos += 1

    gates: list[Gate] = []
    for line_no, line in enumerate(lines[pos:], start=pos + 1):
        match = _GATE_RE.match(line)
        if match is None:
            raise ValueError(f"line {line_no}: unsupported statement {line!r}")
        name, angle_text, operand_text = match.groups()
        if (angle_text is not None) != (name in _TAKES_ANGLE):
            raise ValueError(f"line {line_no}: bad parameter list for {name}")
        qubits = _parse_operands(operand_text, line_no)
        if len(qubits) != _ARITY[name]:
            raise ValueError(f"line {line_no}: {name} expects {_ARITY[name]} operands")
        angle = float(angle_text) if angle_text is not None else None
        gates.append(_build_gate(name, angle, qubits))
    return Circuit(num_qubits, tuple(gates))
