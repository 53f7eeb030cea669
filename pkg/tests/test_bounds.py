"""Lower-bound certificates: rank cuts, reversal closed forms, soundness."""

import itertools
from collections import deque

import pytest

from cnotline import (
    BitMatrix,
    add_circuit,
    crossing_counts,
    cut_lower_bound,
    inversion_count,
    matrix_lower_bounds,
    matrix_of,
    permutation_circuit,
    permutation_swap_lower,
    reversal_bounds,
    reversal_cut_bound,
    reverse_circuit,
    rotate_circuit,
    swap_circuit,
    synthesize,
)
from conftest import random_invertible


def test_reversal_example_n8():
    report = matrix_lower_bounds(BitMatrix.anti_identity(8))
    assert report.size_lb == 32
    assert report.depth_lb == 14
    assert report.method == "rank-cut"


def test_reversal_example_n9_per_cut():
    report = matrix_lower_bounds(BitMatrix.anti_identity(9))
    assert [b for _, b in report.per_cut] == [2, 4, 6, 8, 8, 6, 4, 2]
    assert report.depth_lb == 16
    assert report.size_lb == 40


def test_identity_has_zero_bounds():
    report = matrix_lower_bounds(BitMatrix.identity(6))
    assert report.depth_lb == 0 and report.size_lb == 0


def test_cut_bound_rejects_singular():
    with pytest.raises(ValueError):
        cut_lower_bound(BitMatrix(3, (1, 1, 4)), 1)


def test_reversal_cut_bound_formula():
    for n in range(3, 20):
        for k in range(1, n // 2 + 1):
            assert reversal_cut_bound(n, k) == 2 * k + 1
            # the generic certificate can never beat the dedicated one
            assert cut_lower_bound(BitMatrix.anti_identity(n), k) <= 2 * k + 1


def test_reversal_bounds_closed_forms():
    for n in range(3, 40):
        depth_lb, size_lb = reversal_bounds(n)
        assert depth_lb == 2 * n + 1
        assert size_lb == (n * n) // 2 + n


def test_reversal_bounds_dominate_generic():
    for n in range(3, 20):
        generic = matrix_lower_bounds(BitMatrix.anti_identity(n))
        depth_lb, size_lb = reversal_bounds(n)
        assert depth_lb >= generic.depth_lb
        assert size_lb >= generic.size_lb


def test_reverse_circuit_depth_gap_at_most_one():
    for n in range(3, 25):
        c = reverse_circuit(n)
        depth_lb, size_lb = reversal_bounds(n)
        assert 0 <= c.depth - depth_lb <= 1
        assert c.size >= size_lb
        assert c.size == n * n - 1


def _assert_sound(circuit, target):
    report = matrix_lower_bounds(target)
    assert circuit.depth >= report.depth_lb
    assert circuit.size >= report.size_lb
    for (_, bound), seen in zip(report.per_cut, crossing_counts(circuit)):
        assert seen >= bound


def test_soundness_on_families():
    for n in range(2, 20):
        for c in (
            add_circuit(n),
            swap_circuit(n),
            rotate_circuit(n),
            reverse_circuit(n),
        ):
            _assert_sound(c, matrix_of(c))


def test_soundness_on_synthesized(rng):
    for n in (3, 6, 10, 14):
        for _ in range(25):
            m = random_invertible(n, rng)
            _assert_sound(synthesize(m), m)


def test_soundness_on_permutations(rng):
    for n in (4, 9):
        for _ in range(25):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            c = permutation_circuit(perm)
            _assert_sound(c, matrix_of(c))


def test_permutation_swap_lower_is_inversion_count(rng):
    for _ in range(100):
        n = rng.randint(2, 10)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert permutation_swap_lower(perm) == inversion_count(perm)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_swap_lower_bound_tight_by_exhaustion(n):
    """BFS over all swap networks: fewest adjacent swaps reaching any
    permutation equals its inversion count, so inv is a true lower bound."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        perm = queue.popleft()
        for p in range(n - 1):
            swapped = list(perm)
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            key = tuple(swapped)
            if key not in dist:
                dist[key] = dist[perm] + 1
                queue.append(key)
    for perm in itertools.permutations(range(1, n + 1)):
        assert dist[perm] == inversion_count(list(perm))
        assert dist[perm] == permutation_swap_lower(list(perm))
