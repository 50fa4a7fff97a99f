"""Dicke state preparation and the binomial-distribution pipeline.

A product of Y rotations puts binomial weights sqrt(C(N,k) p^k (1-p)^(N-k))
on the Dicke components |D_k^N>. Running the Dicke preparation unitary
backwards collapses each component onto the staircase string of k ones,
after which the staircase converters can re-encode the distribution as
one-hot or binary. The amplitudes are exact at every stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circuit import Circuit, Gate, ccry, cnot, compose, cry, inverse, remap, ry, x
from .converters import (
    ConverterPlan,
    Direction,
    EvenMethod,
    build_edick_to_binary,
    build_edick_to_onehot,
)
from .encodings import EncodingKind

_P_TOL = 1e-12


def build_scs(n: int, k: int) -> Circuit:
    """Split & cyclic shift block on k+1 qubits.

    On the staircase input with l <= k trailing ones it acts as

        |0...01...1>  ->  sqrt(l/n) |0...01...1> + sqrt((n-l)/n) |0..1..10>

    (the shifted term moves the block of ones left by one), and it fixes
    the all-zeros and all-ones strings. Built from one two-qubit block and
    k-1 three-qubit blocks with angles 2*arccos(sqrt(l/n)).
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    gates: list[Gate] = [
        cnot(k - 1, k),
        cry(2.0 * math.acos(math.sqrt(1.0 / n)), k, k - 1),
        cnot(k - 1, k),
    ]
    for level in range(2, k + 1):
        target = k - level
        angle = 2.0 * math.acos(math.sqrt(level / n))
        gates += [
            cnot(target, k),
            ccry(angle, k, target + 1, target),
            cnot(target, k),
        ]
    return Circuit(k + 1, tuple(gates), label=f"scs_{n}_{k}")


def build_dicke_unitary(num_qubits: int) -> Circuit:
    """Maps |0...01...1> with k ones to the uniform weight-k Dicke state.

    One full-width split block, then progressively narrower ones on the
    leftmost qubits. Size grows quadratically, depth linearly.
    """
    if num_qubits < 2:
        raise ValueError("need at least two qubits")
    gates = list(build_scs(num_qubits, num_qubits - 1).gates)
    for width in range(num_qubits - 1, 1, -1):
        gates += list(build_scs(width, width - 1).gates)
    return Circuit(num_qubits, tuple(gates), label=f"dicke_unitary_{num_qubits}")


@dataclass(frozen=True)
class BinomialSpec:
    """Parameters of one binomial-distribution preparation."""

    trials: int
    p: float
    theta: float
    target: EncodingKind
    method: EvenMethod

    def __post_init__(self) -> None:
        if self.trials < 2:
            raise ValueError("need at least two trials")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability {self.p} outside [0, 1]")
        if abs(self.p - math.sin(self.theta / 2.0) ** 2) > _P_TOL:
            raise ValueError("theta does not match p = sin^2(theta/2)")

    @staticmethod
    def from_probability(
        trials: int,
        p: float,
        target: EncodingKind = EncodingKind.EDICK,
        method: EvenMethod = EvenMethod.EXPAND_TO_POW2,
    ) -> "BinomialSpec":
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability {p} outside [0, 1]")
        theta = 2.0 * math.asin(math.sqrt(p))
        return BinomialSpec(trials, p, theta, target, method)


def variance_of(spec: BinomialSpec) -> float:
    """N * sin^2(theta) / 4, which equals N p (1-p)."""
    return spec.trials * math.sin(spec.theta) ** 2 / 4.0


def build_binomial_pipeline(spec: BinomialSpec) -> tuple[Circuit, ConverterPlan]:
    """Full preparation circuit from |0...0> to the encoded distribution.

    Level k of the output carries amplitude sqrt(C(N,k) p^k (1-p)^(N-k)),
    k = 0..N, i.e. N+1 levels. The returned plan describes the register of
    the conversion stage; with the EDICK target there is no conversion and
    the plan's direction is None.
    """
    n = spec.trials
    staircase = Circuit(
        n,
        tuple([ry(spec.theta, q) for q in range(n)])
        + inverse(build_dicke_unitary(n)).gates,
        label=f"binomial_staircase_{n}",
    )

    if spec.target is EncodingKind.EDICK:
        plan = ConverterPlan(n + 1, None, n, 0, None)
        return (
            Circuit(n, staircase.gates, label=f"binomial_pipeline_{n}_edick"),
            plan,
        )

    if spec.target is EncodingKind.ONE_HOT:
        total = n + 1
        unfold = build_edick_to_onehot(n + 1)
        gates = remap(staircase, {q: q for q in range(n)}, total).gates
        gates += (x(n),) + unfold.gates
        plan = ConverterPlan(n + 1, None, total, 0, Direction.EDICK_TO_ONEHOT)
        return (
            Circuit(total, gates, label=f"binomial_pipeline_{n}_onehot"),
            plan,
        )

    if spec.target is EncodingKind.BINARY:
        compress, plan = build_edick_to_binary(n + 1, spec.method)
        total = plan.total_qubits
        anc = plan.ancilla
        widened = remap(staircase, {q: anc + q for q in range(n)}, total)
        circuit = compose(widened, compress, label=f"binomial_pipeline_{n}_binary")
        return circuit, plan

    raise ValueError(f"unsupported target {spec.target!r}")
