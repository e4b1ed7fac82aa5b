"""Residuated pairs between Boolean semifield spaces.

The forward map of a testing scheme sends a sample pattern x to its
syndrome x @ H.  Its residual g(y) = not(not(y) @ H^T) is the unique
map with f(x) <= y iff x <= g(y), and it acts as the decoder: sample i
is declared positive exactly when every test containing i is positive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .boolsemi import (
    BoolMatrix,
    BoolVec,
    DimensionMismatch,
    FormatError,
    iter_bits,
    mat_vec_mul,
    matrix_from_text,
    matrix_to_text,
)

# Exhaustive enumerations are exponential; refuse beyond these defaults.
VERIFY_GUARD = 16
ENUM_GUARD = 20


class SizeGuardExceeded(RuntimeError):
    """An exhaustive sweep was requested beyond its size guard."""


def forward_mask(H: BoolMatrix, xm: int) -> int:
    """Syndrome mask of the sample mask ``xm``: OR of the selected rows."""
    y = 0
    for i in iter_bits(xm):
        y |= H.row_masks[i]
    return y


def residual_mask(H: BoolMatrix, ym: int) -> int:
    """Decoded sample mask for the syndrome mask ``ym``.

    Starting from the all-ones candidate set, each negative test clears
    the samples it contains, one word-parallel AND per negative test.
    """
    cand = (1 << H.rows) - 1
    negative = ym ^ ((1 << H.cols) - 1)
    for j in iter_bits(negative):
        cand &= ~H.col_masks[j]
    return cand


def forward(H: BoolMatrix, x: BoolVec) -> BoolVec:
    """The test map x -> x @ H."""
    return mat_vec_mul(x, H)


def residual(H: BoolMatrix, y: BoolVec) -> BoolVec:
    """The residual of the test map, evaluated via its negation form."""
    if y.n != H.cols:
        raise DimensionMismatch(f"vector length {y.n} != matrix cols {H.cols}")
    return BoolVec(H.rows, residual_mask(H, y.mask))


@dataclass(frozen=True)
class TestingScheme:
    """A testing matrix plus its certified disjunctness level.

    Row i of the matrix lists the tests sample i participates in.
    ``certified_d`` must only be set by construction paths that have
    established d-disjunctness (see ``conditions.certify_scheme``); an
    all-zero row makes a sample undetectable, so no such matrix can be
    certified at d >= 1.
    """

    matrix: BoolMatrix
    certified_d: int | None = None

    def __post_init__(self) -> None:
        if self.certified_d is not None:
            if self.certified_d < 0:
                raise ValueError(f"certified_d must be >= 0, got {self.certified_d}")
            if self.certified_d >= 1 and self.matrix.zero_rows():
                raise ValueError(
                    f"rows {self.matrix.zero_rows()} are all-zero; "
                    "cannot certify d >= 1"
                )

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def k(self) -> int:
        return self.matrix.cols

    @property
    def has_zero_rows(self) -> bool:
        return bool(self.matrix.zero_rows())


def encode(scheme: TestingScheme, x: BoolVec) -> BoolVec:
    return forward(scheme.matrix, x)


def decode(scheme: TestingScheme, y: BoolVec) -> BoolVec:
    return residual(scheme.matrix, y)


def closure(scheme: TestingScheme, x: BoolVec) -> BoolVec:
    """g(f(x)): idempotent, monotone, >= identity."""
    return decode(scheme, encode(scheme, x))


def kernel(scheme: TestingScheme, y: BoolVec) -> BoolVec:
    """f(g(y)): idempotent, monotone, <= identity."""
    return encode(scheme, decode(scheme, y))


@dataclass(frozen=True)
class ResiduatedPair:
    """A forward/residual pair of maps between B2^n and B2^k."""

    forward: Callable[[BoolVec], BoolVec]
    residual: Callable[[BoolVec], BoolVec]
    n: int
    k: int

    @classmethod
    def from_matrix(cls, H: BoolMatrix) -> "ResiduatedPair":
        return cls(
            forward=lambda x: forward(H, x),
            residual=lambda y: residual(H, y),
            n=H.rows,
            k=H.cols,
        )


def verify_residuated_pair(
    fwd: Callable[[BoolVec], BoolVec],
    res: Callable[[BoolVec], BoolVec],
    n: int,
    k: int,
    *,
    samples: int | None = None,
    guard: int = VERIFY_GUARD,
    seed: int = 0,
) -> bool:
    """Check that (fwd, res) behave as a residuated pair.

    Verifies monotonicity of both maps, res(fwd(x)) >= x and
    fwd(res(y)) <= y.  With ``samples=None`` the check is exhaustive
    (requires n, k <= guard); monotonicity then only needs the covering
    pairs (x, x + e_i), which order-generate all comparable pairs.
    Otherwise ``samples`` seeded random cases are drawn per law.
    """
    if samples is None:
        if n > guard or k > guard:
            raise SizeGuardExceeded(f"exhaustive verify needs n,k <= {guard}, got {n},{k}")
        for xm in range(1 << n):
            x = BoolVec(n, xm)
            fx = fwd(x)
            if not x <= res(fx):
                return False
            for i in range(n):
                if not (xm >> i) & 1:
                    if not fx <= fwd(BoolVec(n, xm | (1 << i))):
                        return False
        for ym in range(1 << k):
            y = BoolVec(k, ym)
            gy = res(y)
            if not fwd(gy) <= y:
                return False
            for j in range(k):
                if not (ym >> j) & 1:
                    if not gy <= res(BoolVec(k, ym | (1 << j))):
                        return False
        return True

    rng = random.Random(seed)
    top_n = (1 << n) - 1
    top_k = (1 << k) - 1
    for _ in range(samples):
        xm = rng.randint(0, top_n)
        x = BoolVec(n, xm)
        bigger = BoolVec(n, xm | rng.randint(0, top_n))
        if not fwd(x) <= fwd(bigger):
            return False
        if not x <= res(fwd(x)):
            return False
        ym = rng.randint(0, top_k)
        y = BoolVec(k, ym)
        bigger_y = BoolVec(k, ym | rng.randint(0, top_k))
        if not res(y) <= res(bigger_y):
            return False
        if not fwd(res(y)) <= y:
            return False
    return True


def syndrome_table(H: BoolMatrix) -> list[int]:
    """Syndrome mask of every x in B2^n, indexed by x's mask.

    Built by peeling the lowest set bit, one OR per entry.
    """
    size = 1 << H.rows
    rows = H.row_masks
    tab = [0] * size
    for m in range(1, size):
        low = m & -m
        tab[m] = tab[m ^ low] | rows[low.bit_length() - 1]
    return tab


@lru_cache(maxsize=8)
def closed_masks(H: BoolMatrix, guard: int = ENUM_GUARD) -> frozenset[int]:
    """Masks of all fixed points of g o f (the image of the residual)."""
    if H.rows > guard:
        raise SizeGuardExceeded(f"closed-set enumeration needs n <= {guard}, got {H.rows}")
    tab = syndrome_table(H)
    memo: dict[int, int] = {}
    closed = []
    for xm in range(1 << H.rows):
        syn = tab[xm]
        back = memo.get(syn)
        if back is None:
            back = residual_mask(H, syn)
            memo[syn] = back
        if back == xm:
            closed.append(xm)
    return frozenset(closed)


@lru_cache(maxsize=8)
def kernel_masks(H: BoolMatrix, guard: int = ENUM_GUARD) -> frozenset[int]:
    """Masks of all fixed points of f o g (the image of the test map)."""
    if H.cols > guard:
        raise SizeGuardExceeded(f"kernel-set enumeration needs k <= {guard}, got {H.cols}")
    kernel_set = []
    for ym in range(1 << H.cols):
        if forward_mask(H, residual_mask(H, ym)) == ym:
            kernel_set.append(ym)
    return frozenset(kernel_set)


def enumerate_closed(scheme: TestingScheme, guard: int = ENUM_GUARD) -> frozenset[BoolVec]:
    """All fixed points of g o f, equivalently the image of the residual."""
    n = scheme.n
    return frozenset(BoolVec(n, m) for m in closed_masks(scheme.matrix, guard))


def enumerate_kernel(scheme: TestingScheme, guard: int = ENUM_GUARD) -> frozenset[BoolVec]:
    """All fixed points of f o g, equivalently the image of the test map."""
    k = scheme.k
    return frozenset(BoolVec(k, m) for m in kernel_masks(scheme.matrix, guard))


# --- scheme descriptor file -------------------------------------------------
#
# Grammar (fixed line order, all fields optional except the matrix):
#
#   certified_d=<int>
#   source=<string>
#   matrix=
#   <matrix in the shared text format>
#
# Files written by scheme_to_text round-trip byte-identically.


def scheme_to_text(scheme: TestingScheme, source: str | None = None) -> str:
    lines = []
    if scheme.certified_d is not None:
        lines.append(f"certified_d={scheme.certified_d}")
    if source is not None:
        lines.append(f"source={source}")
    lines.append("matrix=")
    return "\n".join(lines) + "\n" + matrix_to_text(scheme.matrix)


def scheme_from_text(text: str) -> tuple[TestingScheme, str | None]:
    lines = text.split("\n")
    certified_d: int | None = None
    source: str | None = None
    pos = 0
    if pos < len(lines) and lines[pos].startswith("certified_d="):
        value = lines[pos].removeprefix("certified_d=")
        if not value.isdigit():
            raise FormatError(f"certified_d must be a natural number: {value!r}")
        certified_d = int(value)
        pos += 1
    if pos < len(lines) and lines[pos].startswith("source="):
        source = lines[pos].removeprefix("source=")
        pos += 1
    if pos >= len(lines) or lines[pos] != "matrix=":
        raise FormatError("scheme descriptor must contain a 'matrix=' line")
    matrix = matrix_from_text("\n".join(lines[pos + 1 :]))
    return TestingScheme(matrix, certified_d=certified_d), source
