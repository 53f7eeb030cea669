"""CNOT circuits on a line of wires: synthesis, bounds, and search.

Circuits use only controlled-NOT gates between adjacent wires of a
linear array.  Their action on wire values is linear over GF(2), so a
circuit is a sequence of elementary column operations on an invertible
bit matrix.  This package builds the standard circuit families
(addition, swap, rotation, reversal, permutation routing, gathering),
synthesizes a depth-bounded circuit for an arbitrary invertible matrix,
certifies per-cut lower bounds, and exhaustively searches minimum
depths for small wire counts.
"""

from .bounds import (
    BoundReport,
    cut_lower_bound,
    matrix_lower_bounds,
    permutation_swap_lower,
    reversal_bounds,
    reversal_cut_bound,
)
from .circuit import (
    Circuit,
    CircuitMetrics,
    Gate,
    TimeSlice,
    Violation,
    apply,
    circuit_to_text,
    concat,
    crossing_counts,
    down,
    flip,
    from_gate_tokens,
    inverse,
    matrix_of,
    metrics,
    parse_circuit_text,
    parse_gate_token,
    schedule,
    up,
    validate,
)
from .constructions import (
    GATHER_DEPTH_PER_POSITION,
    BoxSpec,
    ComparatorNetwork,
    add_circuit,
    box_circuit,
    fired_comparators,
    gather_circuit,
    inversion_count,
    odd_even_network,
    permutation_circuit,
    permutation_matrix,
    reverse_circuit,
    rotate_circuit,
    rotation_block,
    swap_circuit,
)
from .f2 import (
    BitBlock,
    BitMatrix,
    BitVector,
    CutBlocks,
    SingularMatrixError,
    blocks,
    dual_functional,
    is_northwest_triangular,
    lex_less,
    lex_min_coset,
    matrix_to_text,
    matvec,
    multiply,
    parse_matrix_text,
    rank,
    transpose,
)
from .glsynth import (
    LabeledWireState,
    clearing_circuit,
    clearing_states,
    northwest_basis,
    reduction_states,
    reversal_layers,
    synthesize,
    triangular_reduction_circuit,
)
from .render import render_circuit
from .search import (
    ResourceLimitError,
    SearchResult,
    distance,
    max_depth,
    slice_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BitBlock",
    "BitMatrix",
    "BitVector",
    "BoundReport",
    "BoxSpec",
    "Circuit",
    "CircuitMetrics",
    "ComparatorNetwork",
    "CutBlocks",
    "GATHER_DEPTH_PER_POSITION",
    "Gate",
    "LabeledWireState",
    "ResourceLimitError",
    "SearchResult",
    "SingularMatrixError",
    "TimeSlice",
    "Violation",
    "add_circuit",
    "apply",
    "blocks",
    "box_circuit",
    "circuit_to_text",
    "clearing_circuit",
    "clearing_states",
    "concat",
    "crossing_counts",
    "cut_lower_bound",
    "distance",
    "down",
    "dual_functional",
    "fired_comparators",
    "flip",
    "from_gate_tokens",
    "gather_circuit",
    "inverse",
    "inversion_count",
    "is_northwest_triangular",
    "lex_less",
    "lex_min_coset",
    "matrix_lower_bounds",
    "matrix_of",
    "matrix_to_text",
    "matvec",
    "max_depth",
    "metrics",
    "multiply",
    "northwest_basis",
    "odd_even_network",
    "parse_circuit_text",
    "parse_gate_token",
    "parse_matrix_text",
    "permutation_circuit",
    "permutation_matrix",
    "permutation_swap_lower",
    "rank",
    "reduction_states",
    "render_circuit",
    "reversal_bounds",
    "reversal_cut_bound",
    "reversal_layers",
    "reverse_circuit",
    "rotate_circuit",
    "rotation_block",
    "schedule",
    "slice_generators",
    "swap_circuit",
    "synthesize",
    "transpose",
    "triangular_reduction_circuit",
    "up",
    "validate",
]
