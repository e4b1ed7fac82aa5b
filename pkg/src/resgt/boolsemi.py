"""Linear algebra over the two-element Boolean semifield.

Addition is OR, multiplication is AND; addition is idempotent, so there
is no subtraction.  Vectors and matrices are bit-packed into Python
integers (bit ``i`` of a mask is coordinate ``i``), which makes the
componentwise operations and the order test word-parallel for any
length.  All values are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class DimensionMismatch(ValueError):
    """Operands have incompatible lengths or shapes."""


class FormatError(ValueError):
    """Text block does not follow the matrix/vector file format."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BoolVec:
    """Fixed-length row vector over {0, 1}, packed into ``mask``."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vector length must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for length {self.n}")

    @classmethod
    def zeros(cls, n: int) -> "BoolVec":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BoolVec":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BoolVec":
        if not 0 <= i < n:
            raise ValueError(f"unit index {i} out of range for length {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BoolVec":
        seq = list(bits)
        mask = 0
        for i, b in enumerate(seq):
            if b not in (0, 1):
                raise ValueError(f"entry {b!r} at index {i} is not 0 or 1")
            mask |= b << i
        return cls(len(seq), mask)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.mask >> i) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def support(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __str__(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))

    def __or__(self, other: "BoolVec") -> "BoolVec":
        return vec_add(self, other)

    def __and__(self, other: "BoolVec") -> "BoolVec":
        return vec_mul(self, other)

    def __invert__(self) -> "BoolVec":
        return negate(self)

    def __le__(self, other: "BoolVec") -> bool:
        return leq(self, other)


def _check_len(x: BoolVec, y: BoolVec) -> None:
    if x.n != y.n:
        raise DimensionMismatch(f"length mismatch: {x.n} vs {y.n}")


def vec_add(x: BoolVec, y: BoolVec) -> BoolVec:
    """Componentwise OR."""
    _check_len(x, y)
    return BoolVec(x.n, x.mask | y.mask)


def vec_mul(x: BoolVec, y: BoolVec) -> BoolVec:
    """Componentwise AND."""
    _check_len(x, y)
    return BoolVec(x.n, x.mask & y.mask)


def negate(x: BoolVec) -> BoolVec:
    """Componentwise flip; swaps sums and products (de Morgan)."""
    return BoolVec(x.n, x.mask ^ ((1 << x.n) - 1))


def leq(x: BoolVec, y: BoolVec) -> bool:
    """Componentwise partial order: x <= y iff x + y = y."""
    _check_len(x, y)
    return x.mask | y.mask == y.mask


def hamming_weight(x: BoolVec) -> int:
    return x.mask.bit_count()


def hamming_distance(x: BoolVec, y: BoolVec) -> int:
    _check_len(x, y)
    return (x.mask ^ y.mask).bit_count()


def linearly_independent(rows: Sequence[BoolVec]) -> bool:
    """True iff no vector is below the sum of all the others.

    A list containing the zero vector is never independent (the empty
    sum is zero, and 0 <= everything).
    """
    if not rows:
        raise ValueError("empty list")
    n = rows[0].n
    for r in rows[1:]:
        if r.n != n:
            raise DimensionMismatch(f"length mismatch: {n} vs {r.n}")
    for i, r in enumerate(rows):
        rest = 0
        for j, other in enumerate(rows):
            if j != i:
                rest |= other.mask
        if r.mask | rest == rest:
            return False
    return True


def ball_size(n: int, d: int) -> int:
    """Number of vectors within Hamming distance ``d`` of any center."""
    return sum(math.comb(n, i) for i in range(d + 1))


def ball_masks(n: int, d: int, center: int = 0) -> Iterator[int]:
    """Masks of the Hamming ball, radius ascending, flip sets in lex order."""
    if not 0 <= d <= n:
        raise ValueError(f"radius {d} invalid for length {n}")
    yield center
    for r in range(1, d + 1):
        for flips in combinations(range(n), r):
            m = center
            for i in flips:
                m ^= 1 << i
            yield m


def ball_enumerate(center: BoolVec, d: int) -> Iterator[BoolVec]:
    """Yield every vector within Hamming distance ``d`` of ``center`` once."""
    n = center.n
    for m in ball_masks(n, d, center.mask):
        yield BoolVec(n, m)


@dataclass(frozen=True)
class BoolMatrix:
    """n x k matrix over {0, 1}, stored as one k-bit mask per row.

    Column masks are precomputed so that both row-wise and column-wise
    sweeps are word-parallel.
    """

    rows: int
    cols: int
    row_masks: tuple[int, ...]
    col_masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix shape {self.rows}x{self.cols} must be positive")
        if not isinstance(self.row_masks, tuple):
            object.__setattr__(self, "row_masks", tuple(self.row_masks))
        if len(self.row_masks) != self.rows:
            raise ValueError(f"expected {self.rows} row masks, got {len(self.row_masks)}")
        top = 1 << self.cols
        for i, m in enumerate(self.row_masks):
            if not 0 <= m < top:
                raise ValueError(f"row {i} mask out of range for {self.cols} columns")
        cols = []
        for j in range(self.cols):
            c = 0
            for i, m in enumerate(self.row_masks):
                c |= ((m >> j) & 1) << i
            cols.append(c)
        object.__setattr__(self, "col_masks", tuple(cols))

    @classmethod
    def from_rows(cls, rows: Sequence[BoolVec]) -> "BoolMatrix":
        if not rows:
            raise ValueError("empty row list")
        k = rows[0].n
        for r in rows:
            if r.n != k:
                raise DimensionMismatch(f"row length mismatch: {k} vs {r.n}")
        return cls(len(rows), k, tuple(r.mask for r in rows))

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "BoolMatrix":
        return cls.from_rows([BoolVec.from_bits(row) for row in entries])

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> BoolVec:
        return BoolVec(self.cols, self.row_masks[i])

    def col(self, j: int) -> BoolVec:
        return BoolVec(self.rows, self.col_masks[j])

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_masks[i] >> j) & 1

    def transpose(self) -> "BoolMatrix":
        return BoolMatrix(self.cols, self.rows, self.col_masks)

    def zero_rows(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.row_masks) if m == 0)


def mat_vec_mul(x: BoolVec, H: BoolMatrix) -> BoolVec:
    """Row-vector product x @ H: the OR of the rows selected by x."""
    if x.n != H.rows:
        raise DimensionMismatch(f"vector length {x.n} != matrix rows {H.rows}")
    y = 0
    for i in iter_bits(x.mask):
        y |= H.row_masks[i]
    return BoolVec(H.cols, y)


def colspace_greedy_sum(H: BoolMatrix, v: BoolVec) -> BoolVec:
    """Sum of every column lying below ``v``: the largest column sum <= v."""
    if v.n != H.rows:
        raise DimensionMismatch(f"vector length {v.n} != matrix rows {H.rows}")
    vm = v.mask
    acc = 0
    for c in H.col_masks:
        if c | vm == vm:
            acc |= c
    return BoolVec(v.n, acc)


def colspace_member(H: BoolMatrix, v: BoolVec) -> bool:
    """True iff ``v`` is a sum of a subset of columns of ``H``.

    Addition is idempotent, so v is a column sum exactly when the sum of
    all columns below v reaches v; no subset search needed.
    """
    return colspace_greedy_sum(H, v).mask == v.mask


# --- shared text format ---------------------------------------------------
#
# Matrix: first line "n k", then n lines of exactly k characters from {0,1}.
# Vector: a single line of {0,1} characters.  Text column j is bit j.


def _body_lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _mask_from_line(line: str, k: int, what: str) -> int:
    if len(line) != k or set(line) - {"0", "1"}:
        raise FormatError(f"{what} must be exactly {k} characters from {{0,1}}: {line!r}")
    return int(line[::-1], 2) if line else 0


def matrix_to_text(H: BoolMatrix) -> str:
    lines = [f"{H.rows} {H.cols}"]
    lines.extend(str(H.row(i)) for i in range(H.rows))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> BoolMatrix:
    lines = _body_lines(text)
    if not lines:
        raise FormatError("empty matrix text")
    parts = lines[0].split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"matrix header must be 'n k': {lines[0]!r}")
    n, k = int(parts[0]), int(parts[1])
    if n < 1 or k < 1:
        raise FormatError(f"matrix shape {n}x{k} must be positive")
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows after the header, got {len(lines) - 1}")
    masks = tuple(_mask_from_line(line, k, "matrix row") for line in lines[1:])
    return BoolMatrix(n, k, masks)


def vector_to_text(x: BoolVec) -> str:
    return str(x) + "\n"


def vector_from_text(text: str) -> BoolVec:
    lines = _body_lines(text)
    if len(lines) != 1:
        raise FormatError(f"vector text must be a single line, got {len(lines)} lines")
    line = lines[0]
    if not line or set(line) - {"0", "1"}:
        raise FormatError(f"vector must be characters from {{0,1}}: {line!r}")
    return BoolVec(len(line), _mask_from_line(line, len(line), "vector"))
