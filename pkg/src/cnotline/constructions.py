"""Named circuit families with proven depth bounds.

Each construction emits its gates in an order chosen so that the greedy
scheduler reproduces the intended depth; where a construction depends
on reordering commuting gates, the emitted sequence is already the
reordered one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, Gate, TimeSlice, down, schedule, up
from .f2 import BitMatrix

# Measured nesting overhead of gather_circuit per gathered position; the
# depth bound ceil(n/2) + GATHER_DEPTH_PER_POSITION * m is pinned by test.
GATHER_DEPTH_PER_POSITION = 4


def add_circuit(n: int) -> Circuit:
    """Add wire 1 into wire n across the whole line.

    The result computes the identity except that wire n ends with
    a_1 xor a_n.  Size 4n - 7; depth at most n + 3 for even n and
    n + 4 for odd n.
    """
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    k = (n + 1) // 2
    # cascades put a_1 on wire k and confine a_n to wire k+1
    sub = (
        [up(i) for i in range(1, k)]
        + [down(i) for i in range(1, k)]
        + [up(i) for i in range(n - 1, k, -1)]
        + [down(i) for i in range(n - 1, k, -1)]
    )
    gates = sub + [down(k)] + sub[::-1]
    return schedule(n, gates)


def swap_circuit(n: int) -> Circuit:
    """Exchange the values of wires 1 and n, restoring every other wire.

    Size 6n - 9; depth at most n + 7 for even n and n + 8 for odd n.
    The central swap is emitted as (d_k, u_k, d_k) with its outer gates
    hoisted past the commuting cascade tails to save two slices.
    """
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    k = (n + 1) // 2
    t1 = [up(i) for i in range(1, k)]
    t2 = [down(i) for i in range(1, k)]
    t3 = [up(i) for i in range(1, k)]
    b1 = [up(i) for i in range(n - 1, k, -1)]
    b2 = [down(i) for i in range(n - 1, k, -1)]
    b3 = [up(i) for i in range(n - 1, k, -1)]
    # d_k only reads wire k and only adds into wire k+1, so it commutes
    # with the final cascade gates u_{k-1} and u_{k+1} on both sides of
    # the central swap; u_k does not.
    gates = (
        t1 + t2 + t3[:-1] + b1 + b2 + b3[:-1]
        + [down(k)]
        + t3[-1:] + b3[-1:]
        + [up(k)]
        + b3[-1:] + t3[-1:]
        + [down(k)]
        + b3[-2::-1] + b2[::-1] + b1[::-1] + t3[-2::-1] + t2[::-1] + t1[::-1]
    )
    return schedule(n, gates)


def rotation_block(lo: int, hi: int) -> tuple[list[Gate], list[Gate]]:
    """The window rotation R(lo, hi) and its flipped-reversed twin R'.

    Both gate lists send wire hi to the entering value of wire lo and
    wire i to the entering value of wire i+1 for lo <= i < hi, leaving
    wires outside the window fixed.  Each has size 4(hi - lo) - 1 and
    scheduled depth 2(hi - lo) + 3.

    Args:
        lo: first wire of the window.
        hi: last wire of the window, hi > lo.

    Returns:
        (primary, variant): the second list is the first run upside
        down within the window and backward, which rotates the same way.
    """
    if not 1 <= lo < hi:
        raise ValueError(f"bad rotation window [{lo}, {hi}]")
    primary = (
        [down(i) for i in range(lo, hi)]
        + [up(i) for i in range(lo, hi)]
        + [down(i) for i in range(lo, hi)]
        + [down(i) for i in range(hi - 2, lo - 1, -1)]
    )
    flipped = [Gate(lo + hi - g.target, lo + hi - g.source) for g in primary]
    return primary, flipped[::-1]


def rotate_circuit(n: int) -> Circuit:
    """Cyclically rotate the line: wire n gets a_1, wire i gets a_{i+1}.

    Size 4n - 6 and depth at most n + 5 for n > 2; n = 2 degenerates to
    the 3-gate swap.
    """
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    if n == 2:
        return swap_circuit(2)
    k = (n + 1) // 2
    head = schedule(n, rotation_block(1, k)[0])
    tail = schedule(n, rotation_block(k, n)[1])
    # Both windows meet only at wire k.  The head's scheduled accesses
    # to it sit at slices k-1, k+1, k+3 and the tail's at shift plus
    # n-k, n-k+2, n-k+4; the chosen shift keeps every read after the
    # write it needs, letting only the two commuting writes into wire k
    # trade places.  The tail therefore starts before the head is done.
    shift = 2 if n % 2 == 0 else 3
    depth = max(head.depth, tail.depth + shift)
    merged = []
    for t in range(depth):
        gates: frozenset[Gate] = frozenset()
        if t < head.depth:
            gates |= head.slices[t].gates
        if 0 <= t - shift < tail.depth:
            gates |= tail.slices[t - shift].gates
        merged.append(TimeSlice(gates))
    return Circuit(n, tuple(merged))


def reverse_circuit(n: int) -> Circuit:
    """Reverse the line: wire n+1-i gets a_i.

    Alternates n+1 rounds of adding even-indexed wires into both
    neighbors with rounds adding odd-indexed wires.  Depth 2n + 2
    (3 at n = 2), size n^2 - 1.
    """
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    even_round = [up(2 * i - 1) for i in range(1, n // 2 + 1)] + [
        down(2 * i) for i in range(1, (n - 1) // 2 + 1)
    ]
    odd_round = [down(2 * i - 1) for i in range(1, n // 2 + 1)] + [
        up(2 * i) for i in range(1, (n - 1) // 2 + 1)
    ]
    gates: list[Gate] = []
    for t in range(n + 1):
        gates += even_round if t % 2 == 0 else odd_round
    return schedule(n, gates)


@dataclass(frozen=True)
class ComparatorNetwork:
    """Adjacent-wire sorting network: layers of non-conflicting positions."""

    n: int
    layers: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)


def odd_even_network(n: int) -> ComparatorNetwork:
    """Odd-even transposition network: depth n (1 at n=2), size n(n-1)/2."""
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    if n == 2:
        return ComparatorNetwork(2, ((1,),))
    layers = tuple(
        tuple(range(1 + t % 2, n, 2)) for t in range(n)
    )
    return ComparatorNetwork(n, layers)


def fired_comparators(
    net: ComparatorNetwork, labels: Sequence[int]
) -> tuple[tuple[int, ...], ...]:
    """Comparators that actually swap when the network sorts the labels.

    Returns one (possibly empty) tuple of positions per network layer.
    """
    lab = list(labels)
    if len(lab) != net.n:
        raise ValueError(f"expected {net.n} labels, got {len(lab)}")
    out = []
    for layer in net.layers:
        fired = []
        for p in layer:
            if lab[p - 1] > lab[p]:
                lab[p - 1], lab[p] = lab[p], lab[p - 1]
                fired.append(p)
        out.append(tuple(fired))
    return tuple(out)


def inversion_count(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j]."""
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def _check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{len(perm)}")


def permutation_matrix(perm: Sequence[int]) -> BitMatrix:
    """Matrix sending wire perm[i-1] to a_i: column perm[i-1] = e_i."""
    _check_permutation(perm)
    n = len(perm)
    cols = [0] * n
    for i, image in enumerate(perm, start=1):
        cols[image - 1] = 1 << (i - 1)
    return BitMatrix(n, tuple(cols))


def permutation_circuit(perm: Sequence[int]) -> Circuit:
    """Route wire contents so that wire perm[i-1] ends with a_i.

    Each comparator of the odd-even network that finds its labels out
    of order becomes a 3-gate swap, so the size is 3 times the
    inversion count of perm and the depth is at most 3n.
    """
    _check_permutation(perm)
    n = len(perm)
    if n < 2:
        raise ValueError(f"need at least 2 wires, got {n}")
    net = odd_even_network(n)
    gates: list[Gate] = []
    for layer in fired_comparators(net, perm):
        for p in layer:
            gates += [up(p), down(p), up(p)]
    return schedule(n, gates)


_BOX_OUTPUTS = ("u", "v", "u^v")


@dataclass(frozen=True)
class BoxSpec:
    """Requested two-wire action: each output is u, v, u^v, or "free"."""

    first_out: str
    second_out: str

    def __post_init__(self) -> None:
        for out in (self.first_out, self.second_out):
            if out not in _BOX_OUTPUTS and out != "free":
                raise ValueError(f"bad box output {out!r}")
        if self.first_out == "free" and self.second_out == "free":
            raise ValueError("at most one box output may be free")
        if self.first_out == self.second_out:
            raise ValueError(f"box outputs must differ, got {self.first_out!r} twice")


# Minimal gate sequences per output pair, upper wire input u, lower v.
# Fully specified pairs realize the exact optimal depths 0,1,1,2,2,3;
# pairs with one free output need depth at most 2.
_BOX_GATES: dict[tuple[str, str], tuple[str, ...]] = {
    ("u", "v"): (),
    ("u", "u^v"): ("d",),
    ("u^v", "v"): ("u",),
    ("u^v", "u"): ("u", "d"),
    ("v", "u^v"): ("d", "u"),
    ("v", "u"): ("u", "d", "u"),
    ("u", "free"): (),
    ("v", "free"): ("d", "u"),
    ("u^v", "free"): ("u",),
    ("free", "v"): (),
    ("free", "u"): ("u", "d"),
    ("free", "u^v"): ("d",),
}


def box_circuit(position: int, spec: BoxSpec) -> list[Gate]:
    """Gate list realizing the requested outputs on wires (position, position + 1)."""
    if position < 1:
        raise ValueError(f"position must be positive, got {position}")
    kinds = _BOX_GATES[(spec.first_out, spec.second_out)]
    return [up(position) if kind == "u" else down(position) for kind in kinds]


def gather_circuit(n: int, positions: Sequence[int]) -> tuple[Circuit, int]:
    """Move the values at the given positions onto consecutive wires.

    With k = ceil(n/2) and j positions at or below wire k, the window
    starts at wire k - j + 1.  After the circuit, the wire at window
    slot l carries exactly the initial value of positions[l-1] and no
    other wire depends on it, so undoing the circuit restores the rest.

    Args:
        n: wire count.
        positions: strictly increasing wires to gather, 2 <= len <= n.

    Returns:
        (circuit, window_start)
    """
    pos = list(positions)
    m = len(pos)
    if not 2 <= m <= n:
        raise ValueError(f"need between 2 and {n} positions, got {m}")
    if pos != sorted(set(pos)) or pos[0] < 1 or pos[-1] > n:
        raise ValueError(f"positions must be strictly increasing within 1..{n}")
    k = (n + 1) // 2
    j = sum(1 for p in pos if p <= k)
    window_start = k - j + 1
    gates: list[Gate] = []
    # below-window values cascade down toward the window, innermost first
    for slot in range(j, 0, -1):
        src, dst = pos[slot - 1], k - j + slot
        rng = range(src, dst)
        for kind in (up, down, up):
            gates += [kind(i) for i in rng]
    # above-window values cascade up, innermost first
    for slot in range(j + 1, m + 1):
        src, dst = pos[slot - 1], k - j + slot
        rng = range(src - 1, dst - 1, -1)
        for kind in (up, down, up):
            gates += [kind(i) for i in rng]
    return schedule(n, gates), window_start
