"""Checkers for the disjunctness and reversibility of testing matrices.

d-Dis: no row is below the sum of any t <= d other rows (the empty sum
is the zero vector, so an all-zero row already fails at t = 0).
d-Rev: the syndrome map is injective from the radius-d ball around zero
against the whole space.  The two conditions are equivalent; the four
reversibility routes implemented here (direct, via the ball, via the
closed set, via the column space) exist so the equivalence can be
exercised empirically.

Subset and ball sweeps accept a worker count.  Blocks are merged in a
fixed order, so the reported witness does not depend on the number of
workers: for d-Dis it is the first failure by (subset size, colex order
of the subset, covered row index); for the ball sweeps it is the first
failure in enumeration order (weight, then lexicographic flip set).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .boolsemi import (
    BoolMatrix,
    BoolVec,
    ball_masks,
    ball_size,
    colspace_greedy_sum,
    colspace_member,
    hamming_weight,
)
from .residuation import (
    ENUM_GUARD,
    SizeGuardExceeded,
    TestingScheme,
    closed_masks,
    forward_mask,
    residual_mask,
    syndrome_table,
)

DIS = "d-Dis"
REV_DIRECT = "d-Rev-direct"
REV_BALL = "d-Rev-via-ball"
REV_IMG = "d-Rev-via-img"
REV_COLSPACE = "d-Rev-via-colspace"

REV_DIRECT_GUARD = 20
BALL_BUDGET = 5_000_000


@dataclass(frozen=True)
class RowCoverWitness:
    """Rows ``subset`` whose sum covers row ``row`` (row not in subset)."""

    subset: tuple[int, ...]
    row: int


@dataclass(frozen=True)
class VectorPairWitness:
    """A pair of vectors exhibiting a violation; meaning depends on the property."""

    x: BoolVec
    y: BoolVec


@dataclass(frozen=True)
class PropertyReport:
    property: str
    d: int
    holds: bool
    witness: RowCoverWitness | VectorPairWitness | None = None

    def replay(self, H: BoolMatrix) -> bool:
        """Re-check the stored counterexample against ``H``.

        Returns True iff the witness reproduces the violation.  Reports
        with ``holds=True`` have nothing to replay and return False.
        """
        if self.holds or self.witness is None:
            return False
        w = self.witness
        if self.property == DIS:
            assert isinstance(w, RowCoverWitness)
            if len(set(w.subset)) != len(w.subset) or len(w.subset) > self.d:
                return False
            if w.row in w.subset or not 0 <= w.row < H.rows:
                return False
            union = 0
            for i in w.subset:
                union |= H.row_masks[i]
            return H.row_masks[w.row] | union == union
        assert isinstance(w, VectorPairWitness)
        if self.property == REV_DIRECT:
            return (
                hamming_weight(w.x) <= self.d
                and w.x != w.y
                and forward_mask(H, w.x.mask) == forward_mask(H, w.y.mask)
            )
        if self.property in (REV_BALL, REV_IMG):
            back = residual_mask(H, forward_mask(H, w.x.mask))
            return hamming_weight(w.x) <= self.d and back == w.y.mask and back != w.x.mask
        if self.property == REV_COLSPACE:
            dist_to_ones = H.rows - w.x.mask.bit_count()
            return dist_to_ones <= self.d and not colspace_member(H, w.x)
        raise ValueError(f"unknown property {self.property!r}")


def report_to_text(report: PropertyReport) -> str:
    lines = [
        f"property={report.property}",
        f"d={report.d}",
        f"holds={'true' if report.holds else 'false'}",
    ]
    w = report.witness
    if isinstance(w, RowCoverWitness):
        lines.append("witness_rows=" + " ".join(str(i) for i in w.subset))
        lines.append(f"witness_covered={w.row}")
    elif isinstance(w, VectorPairWitness):
        lines.append(f"witness_x={w.x}")
        lines.append(f"witness_y={w.y}")
    return "\n".join(lines) + "\n"


# --- d-Dis ------------------------------------------------------------------


def _colex_union(row_masks: tuple[int, ...], t: int, limit: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """(subset, union-of-rows) for t-subsets of range(limit), colex order."""
    if t == 0:
        yield (), 0
        return
    if t == 1:
        for last in range(limit):
            yield (last,), row_masks[last]
        return
    for last in range(t - 1, limit):
        rl = row_masks[last]
        for rest, u in _colex_union(row_masks, t - 1, last):
            yield rest + (last,), u | rl


def _cover_in_block(row_masks: tuple[int, ...], n: int, t: int, last: int) -> RowCoverWitness | None:
    """First covered row among size-t subsets whose maximum element is ``last``."""
    if t == 0:
        for i, m in enumerate(row_masks):
            if m == 0:
                return RowCoverWitness((), i)
        return None
    rl = row_masks[last]
    for rest, ru in _colex_union(row_masks, t - 1, last):
        u = ru | rl
        for i in range(n):
            if row_masks[i] | u == u and i != last and i not in rest:
                return RowCoverWitness(rest + (last,), i)
    return None


def _cover_block_task(args: tuple[tuple[int, ...], int, int, int]) -> RowCoverWitness | None:
    row_masks, n, t, last = args
    return _cover_in_block(row_masks, n, t, last)


def _scan_ordered(tasks: Iterable, worker, workers: int):
    """Run ``worker`` over ``tasks``; return the first non-None result in task order."""
    if workers <= 1:
        for task in tasks:
            found = worker(task)
            if found is not None:
                return found
        return None
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for found in ex.map(worker, tasks):
            if found is not None:
                ex.shutdown(wait=False, cancel_futures=True)
                return found
    return None


def _first_cover_at_size(H: BoolMatrix, t: int, workers: int) -> RowCoverWitness | None:
    if t == 0:
        return _cover_in_block(H.row_masks, H.rows, 0, 0)
    tasks = [(H.row_masks, H.rows, t, last) for last in range(t - 1, H.rows)]
    return _scan_ordered(tasks, _cover_block_task, workers)


def check_d_dis(H: BoolMatrix, d: int, workers: int = 1) -> PropertyReport:
    """Sweep all row subsets of size t <= d for a covered outside row.

    Subset sizes ascend, so the reported witness has minimal t; within a
    size, subsets are visited in colex order with incrementally reused
    unions.
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if d >= H.rows:
        raise ValueError(f"d must be at most n-1 = {H.rows - 1}, got {d}")
    for t in range(0, d + 1):
        witness = _first_cover_at_size(H, t, workers)
        if witness is not None:
            return PropertyReport(DIS, d, False, witness)
    return PropertyReport(DIS, d, True)


def max_d(H: BoolMatrix, workers: int = 1) -> int:
    """Largest d <= n-1 at which the matrix is d-disjunct; 0 if 1-Dis fails.

    Linear ascent from t = 1: the property is monotone in d and the
    final failing size dominates the sweep cost anyway.
    """
    for t in range(1, H.rows):
        if _first_cover_at_size(H, t, workers) is not None:
            return t - 1
    return H.rows - 1


class CertificationFailed(RuntimeError):
    """A scheme construction expected d-Dis to hold but the sweep refuted it."""

    def __init__(self, report: PropertyReport):
        super().__init__(f"matrix is not {report.d}-disjunct: {report.witness}")
        self.report = report


def certify_scheme(H: BoolMatrix, d: int, workers: int = 1) -> TestingScheme:
    """Run the disjunctness sweep and return a scheme with certified_d set."""
    report = check_d_dis(H, d, workers=workers)
    if not report.holds:
        raise CertificationFailed(report)
    return TestingScheme(H, certified_d=d)


# --- d-Rev routes -----------------------------------------------------------


def _ball_block_task(args: tuple[BoolMatrix, int, int]) -> tuple[int, int] | None:
    """First round-trip failure among weight-w masks with least element ``first``."""
    H, w, first = args
    if w == 0:
        back = residual_mask(H, 0)
        return (0, back) if back != 0 else None
    n = H.rows
    rows = H.row_masks
    base_mask = 1 << first
    base_syn = rows[first]
    for rest in combinations(range(first + 1, n), w - 1):
        xm = base_mask
        syn = base_syn
        for i in rest:
            xm |= 1 << i
            syn |= rows[i]
        back = residual_mask(H, syn)
        if back != xm:
            return (xm, back)
    return None


def check_d_rev_via_ball(
    H: BoolMatrix, d: int, workers: int = 1, budget: int = BALL_BUDGET
) -> PropertyReport:
    """Production reversibility checker: decode(encode(x)) = x on the ball."""
    if not 0 <= d <= H.rows:
        raise ValueError(f"radius {d} invalid for {H.rows} rows")
    if ball_size(H.rows, d) > budget:
        raise SizeGuardExceeded(
            f"ball of radius {d} in B2^{H.rows} has {ball_size(H.rows, d)} elements, "
            f"budget is {budget}"
        )
    n = H.rows
    tasks = [(H, 0, 0)] + [(H, w, f) for w in range(1, d + 1) for f in range(0, n - w + 1)]
    found = _scan_ordered(tasks, _ball_block_task, workers)
    if found is None:
        return PropertyReport(REV_BALL, d, True)
    xm, back = found
    return PropertyReport(REV_BALL, d, False, VectorPairWitness(BoolVec(n, xm), BoolVec(n, back)))


def check_d_rev_direct(H: BoolMatrix, d: int, guard: int = REV_DIRECT_GUARD) -> PropertyReport:
    """Exhaustive oracle: no y in all of B2^n shares a syndrome with a ball element."""
    if H.rows > guard:
        raise SizeGuardExceeded(f"direct check needs n <= {guard}, got {H.rows}")
    if not 0 <= d <= H.rows:
        raise ValueError(f"radius {d} invalid for {H.rows} rows")
    n = H.rows
    tab = syndrome_table(H)
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for ym in range(1 << n):
        syn = tab[ym]
        if syn not in first:
            first[syn] = ym
        elif syn not in second:
            second[syn] = ym
    for xm in ball_masks(n, d):
        syn = tab[xm]
        other = first[syn] if first[syn] != xm else second.get(syn)
        if other is not None:
            return PropertyReport(
                REV_DIRECT, d, False, VectorPairWitness(BoolVec(n, xm), BoolVec(n, other))
            )
    return PropertyReport(REV_DIRECT, d, True)


def check_d_rev_via_img(H: BoolMatrix, d: int, guard: int = ENUM_GUARD) -> PropertyReport:
    """Membership route: every ball element must lie in the closed set."""
    closed = closed_masks(H, guard)
    n = H.rows
    for xm in ball_masks(n, d):
        if xm not in closed:
            back = residual_mask(H, forward_mask(H, xm))
            return PropertyReport(
                REV_IMG, d, False, VectorPairWitness(BoolVec(n, xm), BoolVec(n, back))
            )
    return PropertyReport(REV_IMG, d, True)


def check_d_rev_via_colspace(H: BoolMatrix, d: int) -> PropertyReport:
    """Column-space route: the ball around the all-ones vector is covered."""
    n = H.rows
    for vm in ball_masks(n, d, center=(1 << n) - 1):
        v = BoolVec(n, vm)
        best = colspace_greedy_sum(H, v)
        if best.mask != vm:
            return PropertyReport(REV_COLSPACE, d, False, VectorPairWitness(v, best))
    return PropertyReport(REV_COLSPACE, d, True)


def equivalence_reports(H: BoolMatrix, d: int, workers: int = 1) -> dict[str, PropertyReport]:
    """Run every applicable checker at level d, keyed by property name.

    The exponential routes (direct, via-img) are included only when
    their size guards allow.
    """
    reports = {
        DIS: check_d_dis(H, d, workers=workers),
        REV_BALL: check_d_rev_via_ball(H, d, workers=workers),
        REV_COLSPACE: check_d_rev_via_colspace(H, d),
    }
    if H.rows <= REV_DIRECT_GUARD:
        reports[REV_DIRECT] = check_d_rev_direct(H, d)
    if H.rows <= ENUM_GUARD:
        reports[REV_IMG] = check_d_rev_via_img(H, d)
    return reports
