"""Command line front end: build, verify, sweep, prepare-binomial.

Exit codes: 0 success, 1 a verification check failed, 2 usage or
parameter error. All randomness flows through --seed, and emitted text
uses repr floats, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .analysis import SWEEP_SUBJECTS, rows_to_csv, run_sweep
from .circuit import GateKind, Granularity
from .converters import Direction, EvenMethod, build_cnot_stair, build_converter
from .decompose import decompose_to_basis
from .dicke import BinomialSpec, build_binomial_pipeline
from .encodings import EncodingKind, random_vector
from .qasm import emit_text
from .statevector import Statevector, basis_state, fidelity, run, zero_state

_FIDELITY_TOL = 1e-9

_DIRECTION_CHOICES = [d.value for d in Direction] + ["cnot-stair"]
_METHOD_CHOICES = [m.value for m in EvenMethod]

_NEEDS_LOWERING = {GateKind.CRY, GateKind.CCRY, GateKind.MCX}


def _resolve(direction: str, num_levels: int, method: EvenMethod):
    """Circuit plus the level -> basis-index maps of its input and output."""
    if direction == "cnot-stair":
        circuit = build_cnot_stair(num_levels)
        total = num_levels
    else:
        circuit, plan = build_converter(Direction(direction), num_levels, method)
        total = plan.total_qubits

    stair_in = lambda i: (1 << (i + 1)) - 1  # staircase joined with the |1> flag
    edick_in = lambda i: (1 << i) - 1
    onehot = lambda i: 1 << i
    binary = lambda i: i
    flagged_binary = lambda i: (i << 1) | 1  # binary register left of the flag

    maps = {
        "edick-to-onehot": (stair_in, onehot),
        "cnot-stair": (stair_in, onehot),
        "edick-to-binary": (edick_in, binary),
        "onehot-to-binary": (onehot, flagged_binary),
        "binary-to-onehot": (flagged_binary, onehot),
    }
    level_in, level_out = maps[direction]
    return circuit, total, level_in, level_out


def _cmd_build(args: argparse.Namespace) -> int:
    circuit, _, _, _ = _resolve(args.direction, args.n, EvenMethod(args.method))
    if any(g.kind in _NEEDS_LOWERING for g in circuit.gates):
        circuit = decompose_to_basis(circuit)
    _write(emit_text(circuit), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    circuit, total, level_in, level_out = _resolve(
        args.direction, args.n, EvenMethod(args.method)
    )
    rng = np.random.default_rng(args.seed)
    worst, worst_label = 2.0, ""

    for level in range(args.n):
        output = run(basis_state(total, level_in(level)), circuit)
        value = float(abs(output.amplitudes[level_out(level)]))
        if value < worst:
            worst, worst_label = value, f"level {level}"

    for trial in range(args.trials):
        vector = random_vector(args.n, rng)
        source = np.zeros(1 << total, dtype=np.complex128)
        expected = np.zeros(1 << total, dtype=np.complex128)
        for level, alpha in enumerate(vector.alphas):
            source[level_in(level)] = alpha
            expected[level_out(level)] = alpha
        output = run(Statevector(total, source), circuit)
        value = float(fidelity(output, Statevector(total, expected)))
        if value < worst:
            worst, worst_label = value, f"trial {trial}"

    print(
        f"verify direction={args.direction} n={args.n} method={args.method} "
        f"trials={args.trials} seed={args.seed}"
    )
    print(f"worst fidelity {worst!r} at {worst_label}")
    ok = worst >= 1.0 - _FIDELITY_TOL
    print(f"verify: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    subjects = [s.strip() for s in args.methods.split(",") if s.strip()]
    for subject in subjects:
        if subject not in SWEEP_SUBJECTS:
            raise ValueError(f"unknown method {subject!r}; choose from {SWEEP_SUBJECTS}")
    if not 2 <= args.n_min <= args.n_max:
        raise ValueError("need 2 <= n-min <= n-max")
    granularity = (
        Granularity.TWO_QUBIT_BASIS if args.granularity == "basis" else Granularity.LOGICAL
    )
    rows = run_sweep(
        range(args.n_min, args.n_max + 1),
        subjects,
        granularity,
        measure_time=args.timings,
    )
    _write(rows_to_csv(rows), args.out)
    return 0


def _cmd_prepare_binomial(args: argparse.Namespace) -> int:
    target = EncodingKind(args.target)
    spec = BinomialSpec.from_probability(args.n, args.p, target, EvenMethod(args.method))
    circuit, _ = build_binomial_pipeline(spec)
    state = run(zero_state(circuit.num_qubits), circuit)

    if target is EncodingKind.EDICK:
        index_of = lambda k: (1 << k) - 1
    elif target is EncodingKind.ONE_HOT:
        index_of = lambda k: 1 << k
    else:
        index_of = lambda k: k

    lines = ["level,probability,pmf,abs_error"]
    for k in range(args.n + 1):
        probability = float(abs(state.amplitudes[index_of(k)]) ** 2)
        pmf = math.comb(args.n, k) * args.p**k * (1.0 - args.p) ** (args.n - k)
        lines.append(f"{k},{probability!r},{pmf!r},{abs(probability - pmf)!r}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _add_common(sub: argparse.ArgumentParser, with_direction: bool = True) -> None:
    if with_direction:
        sub.add_argument("--direction", required=True, choices=_DIRECTION_CHOICES)
    sub.add_argument("--n", required=True, type=int, help="number of levels")
    sub.add_argument(
        "--method",
        choices=_METHOD_CHOICES,
        default=EvenMethod.EXPAND_TO_POW2.value,
        help="strategy for even level counts",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edick",
        description="Build and check amplitude-encoding conversion circuits.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="emit a converter as OPENQASM 2.0")
    _add_common(build)
    build.add_argument("--out", help="output path (default: stdout)")
    build.set_defaults(handler=_cmd_build)

    verify = commands.add_parser("verify", help="simulate a converter against its contract")
    _add_common(verify)
    verify.add_argument("--trials", type=int, default=20, help="random vectors to test")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=_cmd_verify)

    sweep = commands.add_parser("sweep", help="cost table over a range of level counts")
    sweep.add_argument("--n-min", required=True, type=int)
    sweep.add_argument("--n-max", required=True, type=int)
    sweep.add_argument(
        "--methods",
        default="recursion,expand-n-plus-1,expand-pow2",
        help=f"comma-separated subset of {','.join(SWEEP_SUBJECTS)}",
    )
    sweep.add_argument("--granularity", choices=["logical", "basis"], default="basis")
    sweep.add_argument(
        "--timings",
        action="store_true",
        help="record wall-clock build times (off by default, keeping output reproducible)",
    )
    sweep.add_argument("--out", help="output path (default: stdout)")
    sweep.set_defaults(handler=_cmd_sweep)

    binomial = commands.add_parser(
        "prepare-binomial", help="distribution-loading circuit and its level probabilities"
    )
    binomial.add_argument("--n", required=True, type=int, help="number of trials")
    binomial.add_argument("--p", required=True, type=float, help="success probability")
    binomial.add_argument(
        "--target",
        choices=[k.value for k in EncodingKind],
        default=EncodingKind.EDICK.value,
    )
    binomial.add_argument(
        "--method",
        choices=_METHOD_CHOICES,
        default=EvenMethod.EXPAND_TO_POW2.value,
    )
    binomial.add_argument("--out", help="output path (default: stdout)")
    binomial.set_defaults(handler=_cmd_prepare_binomial)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "n", 2) < 2:
            raise ValueError("need at least two levels")
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
