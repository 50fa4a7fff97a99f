"""Circuits that convert amplitude encodings through a staircase state.

The library builds exact synthesis circuits linking one-hot, binary, and
staircase (edick) amplitude encodings, prepares Dicke states, and loads
binomial distributions, with an embedded statevector simulator and cost
analysis for every construction.
"""

from .analysis import (
    SWEEP_CSV_HEADER,
    SWEEP_SUBJECTS,
    ScalingModel,
    SweepRow,
    edick_to_onehot_size,
    edick_to_onehot_size_bound,
    fit_scaling,
    measured_edick_to_onehot_depth,
    predicted_edick_to_onehot_depth,
    rows_to_csv,
    run_sweep,
)
from .circuit import (
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
from .converters import (
    ConverterPlan,
    Direction,
    EvenMethod,
    binary_width,
    build_adder,
    build_binary_to_onehot,
    build_cnot_stair,
    build_converter,
    build_edick_to_binary,
    build_edick_to_onehot,
    build_onehot_to_binary,
    build_recursion_step,
)
from .decompose import decompose_gate, decompose_to_basis
from .dicke import (
    BinomialSpec,
    build_binomial_pipeline,
    build_dicke_unitary,
    build_scs,
    variance_of,
)
from .encodings import (
    AmplitudeVector,
    Dicke,
    Encoding,
    EncodingKind,
    build_state,
    level_to_basis,
    load_amplitudes,
    random_vector,
    read_state,
    save_amplitudes,
)
from .qasm import emit_text, parse_text
from .statevector import (
    Statevector,
    apply,
    basis_state,
    fidelity,
    from_amplitudes,
    run,
    to_csv,
    zero_state,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeVector",
    "BinomialSpec",
    "Circuit",
    "ConverterPlan",
    "CostReport",
    "Dicke",
    "Direction",
    "Encoding",
    "EncodingKind",
    "EvenMethod",
    "Gate",
    "GateKind",
    "Granularity",
    "ScalingModel",
    "Statevector",
    "SweepRow",
    "SWEEP_CSV_HEADER",
    "SWEEP_SUBJECTS",
    "apply",
    "basis_state",
    "binary_width",
    "build_adder",
    "build_binary_to_onehot",
    "build_binomial_pipeline",
    "build_cnot_stair",
    "build_converter",
    "build_dicke_unitary",
    "build_edick_to_binary",
    "build_edick_to_onehot",
    "build_onehot_to_binary",
    "build_recursion_step",
    "build_scs",
    "build_state",
    "ccry",
    "cnot",
    "compose",
    "cost",
    "cphase",
    "cry",
    "decompose_gate",
    "decompose_to_basis",
    "edick_to_onehot_size",
    "edick_to_onehot_size_bound",
    "emit_text",
    "fidelity",
    "fit_scaling",
    "from_amplitudes",
    "h",
    "inverse",
    "level_to_basis",
    "load_amplitudes",
    "mcx",
    "measured_edick_to_onehot_depth",
    "parse_text",
    "phase",
    "predicted_edick_to_onehot_depth",
    "random_vector",
    "read_state",
    "remap",
    "rows_to_csv",
    "run",
    "run_sweep",
    "ry",
    "save_amplitudes",
    "to_csv",
    "toffoli",
    "variance_of",
    "x",
    "zero_state",
]
