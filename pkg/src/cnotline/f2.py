"""Exact linear algebra over the two-element field.

Vectors and matrix columns are bit-packed into Python ints, so every
operation is exact and dimensions are not capped by a machine word (the
constructions in this package are exercised up to a few hundred wires;
anything from 1 upward works).  All public coordinates are 1-based:
coordinate i of a vector lives at bit i-1, and entry (i, j) of a matrix
is bit i-1 of the packed column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an inverse of a singular matrix is requested."""


@dataclass(frozen=True)
class BitVector:
    """Vector over GF(2), coordinates packed into an int (1-based access)."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"coordinates beyond position {self.n} must be zero")

    @classmethod
    def unit(cls, n: int, k: int) -> "BitVector":
        """Standard basis vector with a single 1 at coordinate k."""
        if not 1 <= k <= n:
            raise ValueError(f"coordinate {k} out of range 1..{n}")
        return cls(n, 1 << (k - 1))

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "BitVector":
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {i + 1} is {c}, expected 0 or 1")
            bits |= c << i
        return cls(len(coords), bits)

    def get(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"coordinate {i} out of range 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        """Inner product over GF(2)."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def top_coordinate(self) -> int:
        """Largest i with coordinate i set, or 0 for the zero vector."""
        return self.bits.bit_length()

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))


def lex_less(u: BitVector, v: BitVector) -> bool:
    """Strict lexicographic order that weighs coordinate n heaviest.

    Equivalent to comparing the packed integer values, which is why the
    packing puts coordinate i at bit i-1.
    """
    if u.n != v.n:
        raise ValueError(f"dimension mismatch: {u.n} vs {v.n}")
    return u.bits < v.bits


@dataclass(frozen=True)
class BitBlock:
    """Rectangular block over GF(2), rows packed into ints.

    Bit j-1 of rows[i-1] is entry (i, j).  Either dimension may be zero.
    """

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("block dimensions must be nonnegative")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.ncols):
                raise ValueError("row has bits outside the column range")

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise ValueError(f"entry ({i}, {j}) out of range")
        return (self.rows[i - 1] >> (j - 1)) & 1


def _row_space_rank(rows: Iterable[int]) -> int:
    # Incremental elimination keyed on the highest set bit of each pivot.
    pivot_by_top: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length()
            p = pivot_by_top.get(top)
            if p is None:
                pivot_by_top[top] = r
                rank += 1
                break
            r ^= p
    return rank


@dataclass(frozen=True)
class BitMatrix:
    """Square matrix over GF(2), columns packed into ints.

    Bit i-1 of cols[j-1] is entry (i, j).
    """

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if len(self.cols) != self.n:
            raise ValueError(f"expected {self.n} columns, got {len(self.cols)}")
        for c in self.cols:
            if not 0 <= c < (1 << self.n):
                raise ValueError("column has bits outside the row range")

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def anti_identity(cls, n: int) -> "BitMatrix":
        """Ones on the anti-diagonal: entry (i, j) = 1 iff i + j = n + 1."""
        return cls(n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        cols = [0] * n
        for i, r in enumerate(rows):
            for j, e in enumerate(r):
                if e not in (0, 1):
                    raise ValueError(f"entry ({i + 1}, {j + 1}) is {e}, expected 0 or 1")
                cols[j] |= e << i
        return cls(n, tuple(cols))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector]) -> "BitMatrix":
        n = len(columns)
        for v in columns:
            if v.n != n:
                raise ValueError(f"column of dimension {v.n} in a {n}x{n} matrix")
        return cls(n, tuple(v.bits for v in columns))

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"entry ({i}, {j}) out of range 1..{self.n}")
        return (self.cols[j - 1] >> (i - 1)) & 1

    def column(self, j: int) -> BitVector:
        if not 1 <= j <= self.n:
            raise ValueError(f"column {j} out of range 1..{self.n}")
        return BitVector(self.n, self.cols[j - 1])

    def row(self, i: int) -> BitVector:
        if not 1 <= i <= self.n:
            raise ValueError(f"row {i} out of range 1..{self.n}")
        bits = 0
        for j in range(self.n):
            bits |= ((self.cols[j] >> (i - 1)) & 1) << j
        return BitVector(self.n, bits)

    def packed_rows(self) -> tuple[int, ...]:
        """Rows packed into ints, bit j-1 of row i-1 holding entry (i, j)."""
        rows = [0] * self.n
        for j, c in enumerate(self.cols):
            while c:
                low = c & -c
                rows[low.bit_length() - 1] |= 1 << j
                c ^= low
        return tuple(rows)

    @cached_property
    def is_invertible(self) -> bool:
        return _row_space_rank(self.cols) == self.n


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.n, m.packed_rows())


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product a @ b over GF(2)."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    cols = []
    for bc in b.cols:
        acc = 0
        rest = bc
        while rest:
            low = rest & -rest
            acc ^= a.cols[low.bit_length() - 1]
            rest ^= low
        cols.append(acc)
    return BitMatrix(a.n, tuple(cols))


def matvec(m: BitMatrix, v: BitVector) -> BitVector:
    if m.n != v.n:
        raise ValueError(f"dimension mismatch: {m.n} vs {v.n}")
    acc = 0
    rest = v.bits
    while rest:
        low = rest & -rest
        acc ^= m.cols[low.bit_length() - 1]
        rest ^= low
    return BitVector(m.n, acc)


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse via Gauss-Jordan elimination on the rows.

    Raises:
        SingularMatrixError: if the matrix has rank below n.
    """
    n = m.n
    rows = list(m.packed_rows())
    aug = [1 << i for i in range(n)]
    pivot = 0
    for c in range(n):
        hit = next((k for k in range(pivot, n) if (rows[k] >> c) & 1), None)
        if hit is None:
            raise SingularMatrixError(f"matrix of dimension {n} is singular")
        rows[pivot], rows[hit] = rows[hit], rows[pivot]
        aug[pivot], aug[hit] = aug[hit], aug[pivot]
        for k in range(n):
            if k != pivot and (rows[k] >> c) & 1:
                rows[k] ^= rows[pivot]
                aug[k] ^= aug[pivot]
        pivot += 1
    # aug now holds the packed rows of the inverse
    inv_cols = [0] * n
    for i, r in enumerate(aug):
        while r:
            low = r & -r
            inv_cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    return BitMatrix(n, tuple(inv_cols))


def rank(m: "BitMatrix | BitBlock") -> int:
    """Rank of a square matrix or a rectangular block."""
    if isinstance(m, BitMatrix):
        return _row_space_rank(m.cols)
    return _row_space_rank(m.rows)


def is_northwest_triangular(m: BitMatrix) -> bool:
    """True when every entry strictly below the anti-diagonal is zero.

    Entry (i, j) sits below the anti-diagonal when i + j > n + 1.
    """
    n = m.n
    for j in range(1, n + 1):
        # rows n+2-j .. n of column j must be clear
        if m.cols[j - 1] >> (n + 1 - j):
            return False
    return True


def lex_min_coset(a: BitVector, spanning: Iterable[BitVector]) -> BitVector:
    """Lexicographically least element of a + span(spanning).

    Reduces the spanning set to a basis in echelon form keyed on top set
    coordinates, then clears the top coordinates of a greedily from the
    highest down.  Greedy is optimal because flipping a higher coordinate
    to zero always beats any configuration of lower coordinates.
    """
    pivot_by_top: dict[int, int] = {}
    for v in spanning:
        if v.n != a.n:
            raise ValueError(f"dimension mismatch: {v.n} vs {a.n}")
        r = v.bits
        while r:
            top = r.bit_length()
            p = pivot_by_top.get(top)
            if p is None:
                pivot_by_top[top] = r
                break
            r ^= p
    x = a.bits
    for top in sorted(pivot_by_top, reverse=True):
        if (x >> (top - 1)) & 1:
            x ^= pivot_by_top[top]
    return BitVector(a.n, x)


def dual_functional(basis: Sequence[BitVector], k: int) -> BitVector:
    """Vector d with d . basis[j-1] = 1 exactly when j = k.

    Args:
        basis: a basis of the full space, in order.
        k: 1-based index of the basis vector the functional selects.

    Raises:
        SingularMatrixError: if the vectors do not form a basis.
    """
    n = len(basis)
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    inv = inverse(BitMatrix.from_columns(basis))
    # row k of the inverse is the k-th dual functional
    return inv.row(k)


@dataclass(frozen=True)
class CutBlocks:
    """The four blocks of a square matrix split after row and column k.

    top_left is k x k, top_right is k x (n-k), bottom_left is (n-k) x k,
    bottom_right is (n-k) x (n-k).
    """

    n: int
    k: int
    top_left: BitBlock
    top_right: BitBlock
    bottom_left: BitBlock
    bottom_right: BitBlock

    def assemble(self) -> BitMatrix:
        """Reassemble the original matrix from the four blocks."""
        n, k = self.n, self.k
        rows = []
        for i in range(k):
            rows.append(self.top_left.rows[i] | (self.top_right.rows[i] << k))
        for i in range(n - k):
            rows.append(self.bottom_left.rows[i] | (self.bottom_right.rows[i] << k))
        cols = [0] * n
        for i, r in enumerate(rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(n, tuple(cols))


def blocks(m: BitMatrix, k: int) -> CutBlocks:
    """Split a matrix into the four blocks around the cut after position k."""
    n = m.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"cut position {k} out of range 1..{n - 1}")
    rows = m.packed_rows()
    low = (1 << k) - 1
    return CutBlocks(
        n=n,
        k=k,
        top_left=BitBlock(k, k, tuple(r & low for r in rows[:k])),
        top_right=BitBlock(k, n - k, tuple(r >> k for r in rows[:k])),
        bottom_left=BitBlock(n - k, k, tuple(r & low for r in rows[k:])),
        bottom_right=BitBlock(n - k, n - k, tuple(r >> k for r in rows[k:])),
    )


def matrix_to_text(m: BitMatrix) -> str:
    """Serialize: first line n, then n lines of n characters from {0, 1}."""
    lines = [str(m.n)]
    for i in range(1, m.n + 1):
        lines.append("".join(str(m.entry(i, j)) for j in range(1, m.n + 1)))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> BitMatrix:
    """Parse the format written by matrix_to_text.

    Raises:
        ValueError: on malformed headers, bad characters, or wrong shape.
    """
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].strip()
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"bad dimension header {head!r}") from None
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != n:
        raise ValueError(f"expected {n} rows, got {len(body)}")
    rows = []
    for i, ln in enumerate(body):
        ln = ln.strip()
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ValueError(f"row {i + 1} is not {n} characters of 0/1: {ln!r}")
        rows.append([int(ch) for ch in ln])
    return BitMatrix.from_rows(rows)
