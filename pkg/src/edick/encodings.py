"""Amplitude encodings over computational basis states.

A classical amplitude vector (alpha_0, ..., alpha_{N-1}) can be loaded into
a register three ways, all sharing the notion of a "level" i:

* one-hot: level i occupies the string with a single 1 at right-offset i,
  basis integer 2**i;
* binary: level i occupies basis integer i;
* edick: level i occupies the string of i right-aligned ones, basis
  integer 2**i - 1 (a staircase, the transition form between the other two).

A Dicke state of weight k is the uniform superposition over all strings of
Hamming weight k; it is parameterized, so it is a small class rather than
an enum member.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Union

import numpy as np

from .statevector import Statevector

_NORM_TOL = 1e-10
_STRAY_TOL = 1e-9


class EncodingKind(Enum):
    """The three level-indexed encodings."""

    ONE_HOT = "onehot"
    BINARY = "binary"
    EDICK = "edick"


@dataclass(frozen=True)
class Dicke:
    """Uniform superposition over all basis strings of one Hamming weight."""

    weight: int

    def __post_init__(self) -> None:
        if self.weight < 0:
            raise ValueError("Dicke weight must be non-negative")


Encoding = Union[EncodingKind, Dicke]


@dataclass(frozen=True)
class AmplitudeVector:
    """A normalized coefficient vector; real entries are the common case."""

    alphas: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.alphas) < 2:
            raise ValueError("need at least two levels")
        object.__setattr__(self, "alphas", tuple(complex(a) for a in self.alphas))
        norm_sq = sum(abs(a) ** 2 for a in self.alphas)
        if not cmath.isfinite(complex(norm_sq)) or abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"amplitudes are not normalized: sum of squares {norm_sq}")

    @property
    def num_levels(self) -> int:
        return len(self.alphas)

    @staticmethod
    def normalized(values) -> "AmplitudeVector":
        """Scale arbitrary non-zero coefficients to unit norm."""
        alphas = tuple(complex(v) for v in values)
        norm = math.sqrt(sum(abs(a) ** 2 for a in alphas))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return AmplitudeVector(tuple(a / norm for a in alphas))


def random_vector(num_levels: int, rng: np.random.Generator) -> AmplitudeVector:
    """Reproducible real test vector: normalized standard-normal draws."""
    values = rng.standard_normal(num_levels)
    return AmplitudeVector.normalized(values)


def level_to_basis(kind: EncodingKind, level: int, width: int) -> int:
    """Basis integer of level `level` for an encoding on `width` qubits.

    Extra qubits beyond the minimum are left padding (|0>), so any
    sufficiently wide register is accepted.
    """
    if width < 1:
        raise ValueError("width must be at least 1")
    if level < 0:
        raise ValueError(f"level {level} out of range")
    if kind is EncodingKind.ONE_HOT:
        if level >= width:
            raise ValueError(f"one-hot level {level} needs more than {width} qubits")
        return 1 << level
    if kind is EncodingKind.BINARY:
        if level >= (1 << width):
            raise ValueError(f"binary level {level} needs more than {width} qubits")
        return level
    if kind is EncodingKind.EDICK:
        if level > width:
            raise ValueError(f"edick level {level} needs more than {width} qubits")
        return (1 << level) - 1
    raise TypeError(f"no single-basis-state levels for {kind!r}")


def build_state(
    kind: Encoding,
    amplitudes: AmplitudeVector | None,
    width: int,
) -> Statevector:
    """Place amplitudes at the encoding's basis positions on `width` qubits.

    For `Dicke(k)` the state is fully determined by the weight, so
    `amplitudes` must be None.
    """
    if isinstance(kind, Dicke):
        if amplitudes is not None:
            raise ValueError("Dicke states take no amplitude vector")
        return _dicke_state(width, kind.weight)
    if amplitudes is None:
        raise ValueError(f"{kind.value} encoding requires an amplitude vector")
    vec = np.zeros(1 << width, dtype=np.complex128)
    for level, alpha in enumerate(amplitudes.alphas):
        vec[level_to_basis(kind, level, width)] = alpha
    return Statevector(width, vec)


def _dicke_state(num_qubits: int, weight: int) -> Statevector:
    if weight > num_qubits:
        raise ValueError(f"weight {weight} exceeds {num_qubits} qubits")
    vec = np.zeros(1 << num_qubits, dtype=np.complex128)
    amp = 1.0 / math.sqrt(math.comb(num_qubits, weight))
    for positions in combinations(range(num_qubits), weight):
        index = sum(1 << (num_qubits - 1 - q) for q in positions)
        vec[index] = amp
    return Statevector(num_qubits, vec)


def read_state(kind: EncodingKind, state: Statevector, num_levels: int) -> AmplitudeVector:
    """Extract the level amplitudes, rejecting states with off-pattern mass.

    Mass outside the encoding's positions above 1e-9 signals a broken
    converter and raises. The extracted vector is renormalized (the stray
    tolerance is looser than the AmplitudeVector norm invariant).
    """
    if num_levels < 2:
        raise ValueError("need at least two levels")
    indices = [level_to_basis(kind, i, state.num_qubits) for i in range(num_levels)]
    extracted = state.amplitudes[indices]
    kept = float(np.sum(np.abs(extracted) ** 2))
    stray = 1.0 - kept
    if stray > _STRAY_TOL:
        raise ValueError(
            f"state has {stray:.3e} probability mass outside {kind.value} positions"
        )
    extracted = extracted / math.sqrt(kept)
    return AmplitudeVector(tuple(extracted))


def save_amplitudes(vector: AmplitudeVector, path: str | Path) -> None:
    """One real per line; complex vectors use `real,imag` lines."""
    lines = []
    if all(a.imag == 0.0 for a in vector.alphas):
        lines = [repr(float(a.real)) for a in vector.alphas]
    else:
        lines = [f"{float(a.real)!r},{float(a.imag)!r}" for a in vector.alphas]
    Path(path).write_text("\n".join(lines) + "\n")


def load_amplitudes(path: str | Path) -> AmplitudeVector:
    alphas: list[complex] = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        if "," in line:
            real_text, imag_text = line.split(",")
            alphas.append(complex(float(real_text), float(imag_text)))
        else:
            alphas.append(complex(float(line)))
    return AmplitudeVector(tuple(alphas))
