"""Lower-bound certificates for circuits computing a given matrix.

The core argument: split the state matrix at the cut between wires k
and k+1 into blocks (W X; Y Z).  Only gates crossing the cut change the
block ranks, an upward gate moves rank(W) and rank(Y) by at most one,
and a downward gate moves rank(X) and rank(Z) by at most one.  Walking
the ranks from the identity's blocks to the target's blocks forces a
minimum number of crossing gates per cut, which aggregates into size
and depth bounds that hold for every circuit computing the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .constructions import inversion_count
from .f2 import BitMatrix, blocks, rank


@dataclass(frozen=True)
class BoundReport:
    """Per-cut crossing bounds plus the aggregated depth and size bounds."""

    method: str
    per_cut: tuple[tuple[int, int], ...]
    depth_lb: int
    size_lb: int


def cut_lower_bound(m: BitMatrix, k: int) -> int:
    """Minimum gates between wires k and k+1 in any circuit computing m."""
    if not m.is_invertible:
        raise ValueError(f"matrix of dimension {m.n} is singular")
    b = blocks(m, k)
    upward = max(k - rank(b.top_left), rank(b.bottom_left))
    downward = max(rank(b.top_right), (m.n - k) - rank(b.bottom_right))
    return upward + downward


def matrix_lower_bounds(m: BitMatrix) -> BoundReport:
    """Aggregate the cut bounds into size and depth lower bounds.

    Gates at cuts k-1 and k all occupy wire k in distinct slices, so the
    depth bound is the best sum of two adjacent cut bounds.
    """
    n = m.n
    per_cut = tuple((k, cut_lower_bound(m, k)) for k in range(1, n))
    by_cut = dict(per_cut)
    by_cut[0] = by_cut[n] = 0
    depth_lb = max(by_cut[w - 1] + by_cut[w] for w in range(1, n + 1))
    return BoundReport(
        method="rank-cut",
        per_cut=per_cut,
        depth_lb=depth_lb,
        size_lb=sum(v for _, v in per_cut),
    )


def reversal_cut_bound(n: int, k: int) -> int:
    """Gates forced between wires k and k+1 by any reversal circuit: 2k+1.

    The extra gate beyond the generic rank count comes from the first
    crossing gate, which cannot change any block rank yet.
    """
    if not 1 <= k <= n / 2:
        raise ValueError(f"cut {k} out of range 1..{n}/2")
    return 2 * k + 1


def reversal_bounds(n: int) -> tuple[int, int]:
    """Proven (depth, size) lower bounds for reversing n >= 3 wires.

    Depth at least 2n+1; size at least floor(n^2/2) + n.
    """
    if n < 3:
        raise ValueError(f"closed forms require n >= 3, got {n}")
    if n % 2 == 0:
        return 2 * n + 1, (n * n + 2 * n) // 2
    return 2 * n + 1, (n * n + 2 * n - 1) // 2


def permutation_swap_lower(perm: Sequence[int]) -> int:
    """Minimum adjacent swaps realizing the permutation: its inversions.

    Each adjacent swap removes at most one inversion, so no swap network
    for perm can use fewer.
    """
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{len(perm)}")
    return inversion_count(perm)
