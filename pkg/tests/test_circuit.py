"""Gate and circuit IR: validation, inversion, remapping, cost model."""

from __future__ import annotations

import math

import pytest

from edick import (
    Circuit,
    CostReport,
    Gate,
    GateKind,
    Granularity,
    ccry,
    cnot,
    compose,
    cost,
    cphase,
    cry,
    h,
    inverse,
    mcx,
    phase,
    remap,
    ry,
    toffoli,
    x,
)


def test_constructors_carry_kind_and_operands() -> None:
    g = ccry(0.5, 2, 4, 1)
    assert g.kind is GateKind.CCRY
    assert g.controls == (2, 4)
    assert g.target == 1
    assert g.angle == 0.5
    assert cnot(3, 0).controls == (3,)
    assert x(2).controls == ()
    assert toffoli(0, 1, 2).kind is GateKind.TOFFOLI


def test_mcx_collapses_small_control_counts() -> None:
    assert mcx([0], 3).kind is GateKind.CNOT
    assert mcx([0, 1], 3).kind is GateKind.TOFFOLI
    assert mcx([0, 1, 2], 3).kind is GateKind.MCX
    assert mcx([0, 1, 2], 3).controls == (0, 1, 2)


def test_gate_rejects_bad_operands() -> None:
    with pytest.raises(ValueError):
        Gate(GateKind.CNOT, 1, (1,), None)  # control equals target
    with pytest.raises(ValueError):
        cnot(-1, 0)
    with pytest.raises(ValueError):
        Gate(GateKind.X, 0, (), 0.3)  # X takes no angle
    with pytest.raises(ValueError):
        Gate(GateKind.RY, 0, (), None)  # RY needs one
    with pytest.raises(ValueError):
        Gate(GateKind.RY, 0, (), math.inf)
    with pytest.raises(ValueError):
        Gate(GateKind.MCX, 5, (0, 1), None)  # too few controls for MCX


def test_gate_inverse_negates_angles_only() -> None:
    assert cnot(0, 1).inverse() == cnot(0, 1)
    assert ry(0.7, 2).inverse() == ry(-0.7, 2)
    assert cphase(0.3, 0, 1).inverse() == cphase(-0.3, 0, 1)
    assert toffoli(0, 1, 2).inverse() == toffoli(0, 1, 2)


def test_gate_remapped_moves_every_operand() -> None:
    g = ccry(0.2, 0, 1, 2).remapped({0: 5, 1: 3, 2: 0})
    assert g.controls == (5, 3)
    assert g.target == 0
    assert g.angle == 0.2


def test_qubits_property_lists_controls_then_target() -> None:
    assert toffoli(4, 2, 0).qubits == (4, 2, 0)
    assert h(3).qubits == (3,)


def test_circuit_rejects_out_of_range_gates() -> None:
    with pytest.raises(ValueError):
        Circuit(2, (cnot(0, 2),))
    with pytest.raises(ValueError):
        Circuit(0, ())


def test_compose_concatenates_and_checks_width() -> None:
    a = Circuit(2, (h(0),))
    b = Circuit(2, (cnot(0, 1),))
    ab = compose(a, b, label="bell")
    assert ab.gates == (h(0), cnot(0, 1))
    assert ab.label == "bell"
    with pytest.raises(ValueError):
        compose(a, Circuit(3, ()))


def test_inverse_reverses_and_inverts_gates() -> None:
    c = Circuit(2, (h(0), ry(0.4, 1), cnot(0, 1)))
    assert inverse(c).gates == (cnot(0, 1), ry(-0.4, 1), h(0))


def test_inverse_is_an_involution() -> None:
    c = Circuit(3, (h(0), cphase(0.3, 0, 2), toffoli(0, 1, 2), ry(-1.1, 1)))
    assert inverse(inverse(c)).gates == c.gates


def test_remap_accepts_dict_and_sequence() -> None:
    c = Circuit(2, (cnot(0, 1),))
    moved = remap(c, {0: 2, 1: 0}, 3)
    assert moved.num_qubits == 3
    assert moved.gates == (cnot(2, 0),)
    also = remap(c, [2, 0], 3)
    assert also.gates == moved.gates


def test_remap_rejects_partial_or_colliding_mappings() -> None:
    c = Circuit(2, (cnot(0, 1),))
    with pytest.raises(ValueError):
        remap(c, {0: 2}, 3)  # qubit 1 unmapped
    with pytest.raises(ValueError):
        remap(c, {0: 1, 1: 1}, 3)  # collision
    with pytest.raises(ValueError):
        remap(c, {0: 0, 1: 5}, 3)  # lands outside the new register


def test_depth_counts_greedy_layers() -> None:
    # Disjoint pairs share a layer; a gate waits on every qubit it touches.
    c = Circuit(4, (cnot(0, 1), cnot(2, 3), cnot(0, 2), cnot(1, 2)))
    report = cost(c)
    assert report.depth == 3
    assert report.size == 4
    assert report.granularity is Granularity.LOGICAL


def test_empty_circuit_has_zero_cost() -> None:
    report = cost(Circuit(3, ()))
    assert (report.depth, report.size) == (0, 0)


def test_cost_report_validation() -> None:
    with pytest.raises(ValueError):
        CostReport(5, 3, 0, Granularity.LOGICAL)  # depth above size
    with pytest.raises(ValueError):
        CostReport(0, 3, 0, Granularity.LOGICAL)


def test_basis_granularity_counts_decomposed_gates() -> None:
    c = Circuit(3, (toffoli(0, 1, 2),))
    logical = cost(c, Granularity.LOGICAL)
    basis = cost(c, Granularity.TWO_QUBIT_BASIS)
    assert logical.size == 1
    assert basis.size == 15
    assert basis.depth <= basis.size


def test_cost_carries_ancilla_through() -> None:
    report = cost(Circuit(4, (cnot(0, 1),)), ancilla=2)
    assert report.ancilla == 2


def test_basis_depth_equals_logical_depth_for_basis_circuits() -> None:
    c = Circuit(3, (h(0), cnot(0, 1), cnot(1, 2), x(0), phase(0.4, 2)))
    assert cost(c, Granularity.TWO_QUBIT_BASIS).depth == cost(c).depth
