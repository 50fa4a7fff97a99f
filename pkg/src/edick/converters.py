"""Circuits that move a level-encoded amplitude vector between encodings.

The staircase (edick) form is the hub: one converter unfolds it into the
one-hot form, another compresses it into the binary form, and composing
them (Theorem-1 style) links one-hot and binary directly.

Conventions used throughout:

* qubit 0 is the leftmost ket position and carries the most significant
  bit of any binary register;
* binary registers sit on the rightmost qubits of their block, with every
  other qubit returned to |0>;
* ancilla qubits, when a method needs them, occupy the leftmost physical
  positions and start and end in |0>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .circuit import Circuit, Gate, cnot, cphase, h, mcx, phase, toffoli, x
from .circuit import compose, inverse, remap


class EvenMethod(Enum):
    """Strategy for an even level count, where halving does not divide evenly.

    RECURSION peels one qubit and reduces to the odd case below, ancilla
    free but at the price of one multi-controlled X. The two expansion
    methods embed the problem into a larger odd instance on fresh |0>
    qubits: the next size up, or the next size of the form 2**k + 1
    (which is self-similar under halving, so no further padding is ever
    needed).
    """

    RECURSION = "recursion"
    EXPAND_TO_N_PLUS_1 = "expand-n-plus-1"
    EXPAND_TO_POW2 = "expand-pow2"


class Direction(Enum):
    EDICK_TO_ONEHOT = "edick-to-onehot"
    EDICK_TO_BINARY = "edick-to-binary"
    ONEHOT_TO_BINARY = "onehot-to-binary"
    BINARY_TO_ONEHOT = "binary-to-onehot"


@dataclass(frozen=True)
class ConverterPlan:
    """Register bookkeeping for a built converter.

    `ancilla` counts the qubits beyond those the input encoding strictly
    needs; they are leftmost and are returned to |0>. `method` is None
    when no even-level strategy was involved, `direction` is None when a
    pipeline attaches no conversion stage at all.
    """

    num_levels: int
    method: EvenMethod | None
    total_qubits: int
    ancilla: int
    direction: Direction | None

    def __post_init__(self) -> None:
        if self.num_levels < 2:
            raise ValueError("need at least two levels")
        if self.total_qubits < 1:
            raise ValueError("empty register")
        if not 0 <= self.ancilla <= self.total_qubits:
            raise ValueError("ancilla count out of range")


def binary_width(num_levels: int) -> int:
    """Qubits needed to hold level indices 0..num_levels-1 in binary."""
    if num_levels < 2:
        raise ValueError("need at least two levels")
    return (num_levels - 1).bit_length()


# ---------------------------------------------------------------------------
# staircase -> one-hot


def _onehot_gates(view: tuple[int, ...]) -> list[Gate]:
    n = len(view)
    if n == 2:
        return [cnot(view[0], view[1])]
    if n % 2:
        # Odd width: the leftmost qubit joins after the even sub-block.
        return _onehot_gates(view[1:]) + [cnot(view[0], view[1])]
    half = n // 2
    gates = [cnot(view[2 * i], view[2 * i + 1]) for i in range(half)]
    gates += _onehot_gates(view[::2])
    gates += [cnot(view[2 * i + 1], view[2 * i + 2]) for i in range(half - 1)]
    return gates


def build_edick_to_onehot(num_levels: int) -> Circuit:
    """Unfold a staircase state, joined with a rightmost |1>, into one-hot.

    Input: level i as i+1 right-aligned ones on `num_levels` qubits.
    Output: a single 1 at right-offset i. Depth is logarithmic in the
    level count; sizes follow s(2N) = s(N) + 2N - 1 and s(N+1) = s(N) + 1.
    """
    if num_levels < 2:
        raise ValueError("need at least two levels")
    gates = _onehot_gates(tuple(range(num_levels)))
    return Circuit(num_levels, tuple(gates), label=f"edick_to_onehot_{num_levels}")


def build_cnot_stair(num_levels: int) -> Circuit:
    """Baseline staircase-to-one-hot converter: a plain fan-out triangle.

    Row c sends CNOTs from qubit c to every qubit to its right. On level
    i only the row at the topmost 1 fires, clearing the ones below it.
    Exactly N(N-1)/2 gates and greedy depth 2N-3: the quadratic baseline
    the logarithmic converter is measured against.
    """
    if num_levels < 2:
        raise ValueError("need at least two levels")
    gates = [
        cnot(c, t)
        for c in range(num_levels - 1)
        for t in range(c + 1, num_levels)
    ]
    return Circuit(num_levels, tuple(gates), label=f"cnot_stair_{num_levels}")


# ---------------------------------------------------------------------------
# staircase -> binary


class _AncillaPool:
    """Hands out virtual ancilla ids (above `base`) with reuse.

    A sub-build that finishes returns its ancillas to |0>, so a sibling
    sub-build may take the same physical qubits; `total` is therefore the
    peak simultaneous need, not the sum.
    """

    def __init__(self, base: int) -> None:
        self._base = base
        self._free: list[int] = []
        self.total = 0

    def alloc(self, count: int) -> tuple[int, ...]:
        out = []
        for _ in range(count):
            if self._free:
                out.append(self._free.pop())
            else:
                out.append(self._base + self.total)
                self.total += 1
        return tuple(out)

    def release(self, qubits: tuple[int, ...]) -> None:
        self._free.extend(qubits)

    def placement(self) -> dict[int, int]:
        """Physical homes for the ids: the leftmost block of qubits."""
        return {self._base + k: self.total - 1 - k for k in range(self.total)}


def _adder_gates(qubits: tuple[int, ...], shift: int) -> list[Gate]:
    """Fourier-space adder: |j> -> |(j + shift) mod 2**n>, exactly.

    Uses the swapless transform, whose qubit at position q (0 = leftmost)
    carries frequency 2**q; the diagonal shift phases follow that layout.
    """
    n = len(qubits)
    d = shift % (1 << n)
    qft: list[Gate] = []
    for t in range(n):
        qft.append(h(qubits[t]))
        for c in range(t + 1, n):
            qft.append(cphase(math.pi / (1 << (c - t)), qubits[c], qubits[t]))
    shifts = []
    for q in range(n):
        turns = (d << q) % (1 << n)
        shifts.append(phase(2.0 * math.pi * turns / (1 << n), qubits[q]))
    return qft + shifts + [g.inverse() for g in reversed(qft)]


def build_adder(num_qubits: int, shift: int) -> Circuit:
    """Modular adder on a binary register; shift is reduced mod 2**n."""
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    gates = _adder_gates(tuple(range(num_qubits)), shift)
    return Circuit(num_qubits, tuple(gates), label=f"adder_{num_qubits}_plus_{shift}")


def _binary_gates(view: tuple[int, ...], method: EvenMethod, pool: _AncillaPool) -> list[Gate]:
    """Compress a staircase of len(view)+1 levels into its binary register."""
    levels = len(view) + 1
    if levels == 2:
        return []
    if levels == 3:
        return [cnot(view[0], view[1])]
    if levels % 2 == 0:
        return _even_gates(view, method, pool)
    return _odd_gates(view, method, pool)


def _odd_gates(view: tuple[int, ...], method: EvenMethod, pool: _AncillaPool) -> list[Gate]:
    # Split into halves of `half` qubits, each a staircase of half+1 levels.
    levels = len(view) + 1
    half = (levels - 1) // 2
    first, second = view[:half], view[half:]
    m = (half - 1).bit_length()
    d = (1 << m) - half

    gates = _binary_gates(first, method, pool)
    gates += _binary_gates(second, method, pool)

    # Offset the second half's value by d so its 2**m bit flags "second
    # half saturated", i.e. the level spilled into the first half.
    adder_register = second[-(m + 1):]
    if d > 0:
        gates += _adder_gates(adder_register, d)
    # Copy the first half's m value bits onto the second half's zeros,
    # then clear the first half, controlled on the saturation flag.
    gates += [cnot(first[half - 1 - r], second[half - 1 - r]) for r in range(m)]
    gates += [
        toffoli(second[half - 1 - m], second[half - 1 - r], first[half - 1 - r])
        for r in range(m)
    ]
    if d > 0:
        gates += _adder_gates(adder_register, -d)
    else:
        # half = 2**m exactly: the only unhandled level is the top one,
        # whose spill value 2**m sits one bit left of the copied window.
        # Three CNOTs move it into the final register's top bit.
        top_spill = view[half - m - 1]
        final_top = view[2 * half - m - 2]
        saturation = view[2 * half - m - 1]
        gates += [
            cnot(top_spill, final_top),
            cnot(final_top, top_spill),
            cnot(final_top, saturation),
        ]
    return gates


def _even_gates(view: tuple[int, ...], method: EvenMethod, pool: _AncillaPool) -> list[Gate]:
    levels = len(view) + 1
    if method is EvenMethod.RECURSION:
        return _recursion_gates(view, method, pool)
    if method is EvenMethod.EXPAND_TO_N_PLUS_1:
        extra = pool.alloc(1)
    else:
        target = (1 << (levels - 2).bit_length()) + 1
        extra = pool.alloc(target - levels)
    gates = _binary_gates(extra + view, method, pool)
    pool.release(extra)
    return gates


def _recursion_gates(view: tuple[int, ...], method: EvenMethod, pool: _AncillaPool) -> list[Gate]:
    # Peel the leftmost qubit: the remaining staircase has an odd level
    # count. Only the top level sets the peeled qubit, so patching the
    # binary register from value N-2 to N-1 is a classically known XOR,
    # undone on the peeled qubit by one multi-controlled X.
    levels = len(view) + 1
    gates = _binary_gates(view[1:], method, pool)
    width = binary_width(levels)
    register = view[-width:]
    flips = (levels - 1) ^ (levels - 2)
    for r in range(width):
        if (flips >> r) & 1:
            gates.append(cnot(view[0], register[width - 1 - r]))
    pattern = levels - 1
    off_bits = [register[width - 1 - r] for r in range(width) if not (pattern >> r) & 1]
    gates += [x(q) for q in off_bits]
    gates.append(mcx(register, view[0]))
    gates += [x(q) for q in off_bits]
    return gates


def build_recursion_step(num_levels: int) -> Circuit:
    """The ancilla-free even-level reduction, exposed on its own register."""
    if num_levels < 4 or num_levels % 2:
        raise ValueError("recursion step applies to even level counts >= 4")
    pool = _AncillaPool(base=num_levels)
    gates = _recursion_gates(tuple(range(num_levels - 1)), EvenMethod.RECURSION, pool)
    return Circuit(num_levels - 1, tuple(gates), label=f"recursion_step_{num_levels}")


def build_edick_to_binary(
    num_levels: int,
    method: EvenMethod = EvenMethod.EXPAND_TO_POW2,
) -> tuple[Circuit, ConverterPlan]:
    """Compress a staircase state into its binary register.

    Input: level i as i right-aligned ones on num_levels-1 qubits (plus
    leftmost |0> ancillas when the method adds them). Output: |i> on the
    rightmost binary_width(num_levels) qubits, |0> everywhere else.
    """
    if num_levels < 2:
        raise ValueError("need at least two levels")
    pool = _AncillaPool(base=num_levels)
    data = tuple(range(num_levels - 1))
    gates = _binary_gates(data, method, pool)
    anc = pool.total
    mapping = {v: anc + v for v in data}
    mapping.update(pool.placement())
    total = anc + num_levels - 1
    circuit = Circuit(
        total,
        tuple(g.remapped(mapping) for g in gates),
        label=f"edick_to_binary_{num_levels}",
    )
    plan = ConverterPlan(num_levels, method, total, anc, Direction.EDICK_TO_BINARY)
    return circuit, plan


# ---------------------------------------------------------------------------
# one-hot <-> binary, by composition through the staircase


def build_onehot_to_binary(
    num_levels: int,
    method: EvenMethod = EvenMethod.EXPAND_TO_POW2,
) -> tuple[Circuit, ConverterPlan]:
    """One-hot in, |0...0>|binary>|1> out.

    Runs the one-hot unfolding backwards (rightmost num_levels qubits),
    which leaves a staircase next to a lone |1> flag, then compresses the
    staircase. The flag qubit stays |1> at the far right.
    """
    binary, sub_plan = build_edick_to_binary(num_levels, method)
    anc = sub_plan.ancilla
    total = anc + num_levels
    unfold_inv = inverse(build_edick_to_onehot(num_levels))
    unfold_inv = remap(unfold_inv, {i: anc + i for i in range(num_levels)}, total)
    compress = remap(binary, {i: i for i in range(binary.num_qubits)}, total)
    circuit = compose(unfold_inv, compress, label=f"onehot_to_binary_{num_levels}")
    plan = ConverterPlan(num_levels, method, total, anc, Direction.ONEHOT_TO_BINARY)
    return circuit, plan


def build_binary_to_onehot(
    num_levels: int,
    method: EvenMethod = EvenMethod.EXPAND_TO_POW2,
) -> tuple[Circuit, ConverterPlan]:
    """|0...0>|binary>|1> in, one-hot on the rightmost num_levels qubits out."""
    forward, fplan = build_onehot_to_binary(num_levels, method)
    circuit = replace(inverse(forward), label=f"binary_to_onehot_{num_levels}")
    ancilla = fplan.total_qubits - binary_width(num_levels)
    plan = ConverterPlan(
        num_levels, method, fplan.total_qubits, ancilla, Direction.BINARY_TO_ONEHOT
    )
    return circuit, plan


def build_converter(
    direction: Direction,
    num_levels: int,
    method: EvenMethod = EvenMethod.EXPAND_TO_POW2,
) -> tuple[Circuit, ConverterPlan]:
    """Uniform entry point over all four conversion directions."""
    if direction is Direction.EDICK_TO_ONEHOT:
        circuit = build_edick_to_onehot(num_levels)
        plan = ConverterPlan(num_levels, None, num_levels, 0, direction)
        return circuit, plan
    if direction is Direction.EDICK_TO_BINARY:
        return build_edick_to_binary(num_levels, method)
    if direction is Direction.ONEHOT_TO_BINARY:
        return build_onehot_to_binary(num_levels, method)
    if direction is Direction.BINARY_TO_ONEHOT:
        return build_binary_to_onehot(num_levels, method)
    raise ValueError(f"unknown direction {direction!r}")
