"""Synthesis of arbitrary invertible transformations in depth at most 5n.

The pipeline undoes a matrix in two stages: a clearing stage drives the
state to northwest-triangular form with depth-2 boxes riding a sorting
network (depth at most 2n), and a reduction stage takes the triangular
matrix to the identity with depth-3 boxes riding the network's reversal
schedule (depth at most 3n).  Inverting both stages yields a circuit
computing the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import circuit as circuit_mod
from .circuit import Circuit, Gate, down, schedule, up
from .constructions import ComparatorNetwork, fired_comparators, odd_even_network
from .f2 import (
    BitMatrix,
    BitVector,
    SingularMatrixError,
    dual_functional,
    is_northwest_triangular,
    lex_min_coset,
)


@dataclass(frozen=True)
class LabeledWireState:
    """Snapshot of wire values and labels during a synthesis stage.

    w_basis and duals describe the coordinate system the clearing stage
    reasons in; the reduction stage uses the standard basis, where the
    dual of e_k is e_k itself.
    """

    values: BitMatrix
    labels: tuple[int, ...]
    w_basis: tuple[BitVector, ...]
    duals: tuple[BitVector, ...]

    def clearing_violations(self) -> list[str]:
        """Check: a wire's value has coefficient 0 on every lower wire's label."""
        out = []
        n = self.values.n
        for i in range(1, n + 1):
            value = self.values.column(i)
            for h in range(1, i):
                k = self.labels[h - 1]
                if self.duals[k - 1].dot(value) != 0:
                    out.append(
                        f"wire {i} value has nonzero w_{k} coefficient; "
                        f"label {k} sits on lower wire {h}"
                    )
        return out

    def reduction_violations(self) -> list[str]:
        """Check the triangular-stage invariants on coordinates.

        (1) the value on a label-k wire has coordinate k set and all
        higher coordinates clear; (2) it has coordinate j clear for
        every smaller label j on a lower-numbered wire.
        """
        out = []
        n = self.values.n
        for i in range(1, n + 1):
            k = self.labels[i - 1]
            value = self.values.column(i)
            if value.get(k) != 1 or value.top_coordinate() > k:
                out.append(f"wire {i} (label {k}) value {value} not confined to e_{k}")
            for h in range(1, i):
                j = self.labels[h - 1]
                if j < k and value.get(j) != 0:
                    out.append(
                        f"wire {i} (label {k}) value has coordinate {j} set; "
                        f"label {j} sits on lower wire {h}"
                    )
        return out


def northwest_basis(m: BitMatrix) -> tuple[tuple[BitVector, ...], tuple[int, ...]]:
    """Basis change and wire labeling behind the clearing stage.

    For each wire i, v_i is the lexicographically least vector reachable
    from column i by adding later columns; pi(i) positions v_i's top
    coordinate at n+1-pi(i).  Reindexing by pi gives the target basis:
    w_j has top coordinate exactly n+1-j.

    Returns:
        (w_basis, pi) with w_basis[j-1] = w_j and pi[i-1] = pi(i).

    Raises:
        SingularMatrixError: if the columns do not span the space.
    """
    n = m.n
    cols = [m.column(j) for j in range(1, n + 1)]
    w = [BitVector(n)] * n
    pi = [0] * n
    for i in range(n):
        v = lex_min_coset(cols[i], cols[i + 1 :])
        if v.is_zero():
            raise SingularMatrixError(f"matrix of dimension {n} is singular")
        label = n + 1 - v.top_coordinate()
        pi[i] = label
        w[label - 1] = v
    if sorted(pi) != list(range(1, n + 1)):
        raise SingularMatrixError(f"matrix of dimension {n} is singular")
    return tuple(w), tuple(pi)


def _snapshot(
    values: list[int],
    labels: list[int],
    w_basis: tuple[BitVector, ...],
    duals: tuple[BitVector, ...],
) -> LabeledWireState:
    n = len(values)
    return LabeledWireState(
        BitMatrix(n, tuple(values)), tuple(labels), w_basis, duals
    )


def _apply_gates(values: list[int], gates: list[Gate]) -> None:
    for g in gates:
        values[g.target - 1] ^= values[g.source - 1]


def _clearing_run(
    m: BitMatrix, net: ComparatorNetwork
) -> tuple[list[Gate], list[LabeledWireState]]:
    """Run the clearing stage; returns emitted gates and per-layer states."""
    n = m.n
    if net.n != n:
        raise ValueError(f"network on {net.n} wires, matrix of dimension {n}")
    w_basis, pi = northwest_basis(m)
    duals = tuple(dual_functional(w_basis, k) for k in range(1, n + 1))
    values = list(m.cols)
    labels = list(pi)
    gates: list[Gate] = []
    states = [_snapshot(values, labels, w_basis, duals)]
    for layer in net.layers:
        for p in layer:
            j, k = labels[p - 1], labels[p]
            if j < k:
                continue
            labels[p - 1], labels[p] = k, j
            u, v = values[p - 1], values[p]
            # write some member of span{w_l : l != k} to the lower wire,
            # cheapest output first; u itself always qualifies because
            # the span has codimension 1
            dual_k = duals[k - 1].bits
            if (dual_k & v).bit_count() & 1 == 0:
                box: list[Gate] = []
            elif (dual_k & (u ^ v)).bit_count() & 1 == 0:
                box = [down(p)]
            else:
                box = [up(p), down(p)]
            _apply_gates(values, box)
            gates += box
        states.append(_snapshot(values, labels, w_basis, duals))
    return gates, states


def clearing_circuit(m: BitMatrix, net: ComparatorNetwork) -> Circuit:
    """Circuit C with apply(C, m) northwest-triangular, depth <= 2 net.depth.

    Raises:
        SingularMatrixError: if m is singular.
    """
    gates, _ = _clearing_run(m, net)
    return schedule(m.n, gates)


def clearing_states(m: BitMatrix, net: ComparatorNetwork) -> list[LabeledWireState]:
    """Wire states after each clearing layer (index 0 = initial state)."""
    _, states = _clearing_run(m, net)
    return states


def reversal_layers(net: ComparatorNetwork) -> tuple[tuple[int, ...], ...]:
    """The comparators the network uses when sorting the reversal labeling."""
    return fired_comparators(net, list(range(net.n, 0, -1)))


def _reduction_run(
    nw: BitMatrix, net: ComparatorNetwork
) -> tuple[list[Gate], list[LabeledWireState]]:
    n = nw.n
    if net.n != n:
        raise ValueError(f"network on {net.n} wires, matrix of dimension {n}")
    if not is_northwest_triangular(nw):
        raise ValueError("matrix is not northwest-triangular")
    if not nw.is_invertible:
        raise SingularMatrixError(f"matrix of dimension {n} is singular")
    std = tuple(BitVector.unit(n, k) for k in range(1, n + 1))
    values = list(nw.cols)
    labels = list(range(n, 0, -1))
    gates: list[Gate] = []
    states = [_snapshot(values, labels, std, std)]
    for layer in reversal_layers(net):
        for p in layer:
            k, j = labels[p - 1], labels[p]
            # the reversal schedule only swaps out-of-order labels
            assert k > j
            labels[p - 1], labels[p] = j, k
            u = values[p - 1]
            if (u >> (j - 1)) & 1:
                # replace u by u^v, then exchange: outputs (v, u^v)
                box = [down(p), up(p)]
            else:
                box = [up(p), down(p), up(p)]
            _apply_gates(values, box)
            gates += box
        states.append(_snapshot(values, labels, std, std))
    return gates, states


def triangular_reduction_circuit(nw: BitMatrix, net: ComparatorNetwork) -> Circuit:
    """Circuit R with apply(R, nw) = I for invertible northwest-triangular nw.

    Depth at most 3 times the network depth.

    Raises:
        ValueError: if nw is not northwest-triangular.
        SingularMatrixError: if nw is singular.
    """
    gates, _ = _reduction_run(nw, net)
    return schedule(nw.n, gates)


def reduction_states(nw: BitMatrix, net: ComparatorNetwork) -> list[LabeledWireState]:
    """Wire states after each reduction layer (index 0 = initial state)."""
    _, states = _reduction_run(nw, net)
    return states


def synthesize(m: BitMatrix) -> Circuit:
    """Circuit computing m, depth at most 5n.

    Undoes m with the clearing and reduction stages, then returns the
    inverted composition: if apply(C, m) = N and apply(R, N) = I, the
    circuit inverse(R) then inverse(C) computes m.

    Raises:
        SingularMatrixError: if m is singular.
    """
    if not m.is_invertible:
        raise SingularMatrixError(f"matrix of dimension {m.n} is singular")
    if m == BitMatrix.identity(m.n):
        return Circuit(m.n)
    net = odd_even_network(m.n)
    clearing = clearing_circuit(m, net)
    nw = circuit_mod.apply(clearing, m)
    reduction = triangular_reduction_circuit(nw, net)
    return circuit_mod.concat(
        circuit_mod.inverse(reduction), circuit_mod.inverse(clearing)
    )
