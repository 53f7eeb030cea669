"""Shared test helpers: independent oracles and closed-form targets.

Oracles here deliberately avoid the packed-integer representation of
the library, computing over plain lists so that agreement is evidence.
"""

from __future__ import annotations

import random

import pytest

from cnotline import BitMatrix


def to_lists(m: BitMatrix) -> list[list[int]]:
    """Unpack a BitMatrix into a row-major list-of-lists of 0/1 ints."""
    return [[m.entry(i, j) for j in range(1, m.n + 1)] for i in range(1, m.n + 1)]


def from_lists(rows: list[list[int]]) -> BitMatrix:
    n = len(rows)
    cols = [
        sum(rows[i][j] << i for i in range(n)) for j in range(n)
    ]
    return BitMatrix(n, tuple(cols))


def oracle_rank(rows: list[list[int]]) -> int:
    """Gaussian elimination over GF(2) on list rows; independent of f2."""
    work = [row[:] for row in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(rank, len(work)) if work[r][col]), None
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                work[r] = [a ^ b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def random_invertible(n: int, rng: random.Random) -> BitMatrix:
    while True:
        cols = tuple(rng.randrange(1, 1 << n) for _ in range(n))
        m = BitMatrix(n, cols)
        if m.is_invertible:
            return m


def random_northwest(n: int, rng: random.Random) -> BitMatrix:
    """Row-reversal of a random unit lower-triangular matrix.

    Entry (i, j) of the result is zero whenever i + j > n + 1 and the
    anti-diagonal is all ones, so it is northwest-triangular and
    invertible.
    """
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        for j in range(i):
            rows[i][j] = rng.randint(0, 1)
    return from_lists(rows[::-1])


def cyclic_matrix(n: int) -> BitMatrix:
    """Column n = e_1, column i = e_{i+1}: one step of rotation."""
    return BitMatrix(n, tuple([1 << i for i in range(1, n)] + [1]))


def add_target(n: int) -> BitMatrix:
    """Identity except wire n also picks up a_1."""
    cols = [1 << (i - 1) for i in range(1, n)] + [1 | (1 << (n - 1))]
    return BitMatrix(n, tuple(cols))


def swap_target(n: int) -> BitMatrix:
    cols = [1 << (i - 1) for i in range(1, n + 1)]
    cols[0], cols[n - 1] = cols[n - 1], cols[0]
    return BitMatrix(n, tuple(cols))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0)
