"""Finite partial linear spaces and generalized quadrangles as test matrices.

A partial linear space of order (s, t) has s+1 points per line, t+1
lines per point, and any two points on at most one common line.  Its
lines, read as sets of points, give a testing matrix that is s-disjunct:
a line cannot be hidden inside the union of s or fewer other lines,
because it meets each of them in at most one of its s+1 points.

Constructions: the (s+1) x (s+1) grid, a generalized quadrangle of order
(s, 1); and the symplectic quadrangle of order (q, q) on the points of
three-dimensional projective space over GF(q), with the lines that are
totally isotropic for the alternating form
<x, y> = x0*y1 - x1*y0 + x2*y3 - x3*y2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolsemi import BoolMatrix, FormatError
from .conditions import certify_scheme
from .residuation import TestingScheme


class GeometryError(ValueError):
    """An incidence structure violates a required axiom; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class PartialLinearSpace:
    """Validated point/line incidence structure of order (s, t)."""

    v: int
    lines: tuple[tuple[int, ...], ...]
    s: int
    t: int

    @property
    def b(self) -> int:
        return len(self.lines)


def validate_pls(v: int, lines) -> PartialLinearSpace:
    """Check the three axioms and infer the order from the data.

    Raises GeometryError with a concrete witness: the offending line for
    a size mismatch, the offending point for a pencil-size mismatch, or
    the point pair plus both line indices for a repeated connection.
    """
    line_list = [tuple(sorted(line)) for line in lines]
    if not line_list:
        raise GeometryError("a partial linear space needs at least one line")
    if v < 1:
        raise GeometryError(f"point count must be positive, got {v}")
    for li, line in enumerate(line_list):
        if len(set(line)) != len(line):
            raise GeometryError(f"line {li} repeats a point: {line}", witness=li)
        if not line or line[0] < 0 or line[-1] >= v:
            raise GeometryError(f"line {li} has points outside 0..{v - 1}: {line}", witness=li)
    size = len(line_list[0])
    for li, line in enumerate(line_list):
        if len(line) != size:
            raise GeometryError(
                f"line {li} has {len(line)} points, line 0 has {size}", witness=li
            )
    degree = [0] * v
    for line in line_list:
        for p in line:
            degree[p] += 1
    for p in range(v):
        if degree[p] != degree[0]:
            raise GeometryError(
                f"point {p} lies on {degree[p]} lines, point 0 on {degree[0]}", witness=p
            )
    seen: dict[tuple[int, int], int] = {}
    for li, line in enumerate(line_list):
        for a in range(len(line)):
            for b in range(a + 1, len(line)):
                pair = (line[a], line[b])
                if pair in seen:
                    raise GeometryError(
                        f"points {pair} lie on lines {seen[pair]} and {li}",
                        witness=(pair, seen[pair], li),
                    )
                seen[pair] = li
    return PartialLinearSpace(v, tuple(line_list), s=size - 1, t=degree[0] - 1)


def dual_pls(pls: PartialLinearSpace) -> PartialLinearSpace:
    """Swap the roles of points and lines; the order becomes (t, s)."""
    pencils: list[list[int]] = [[] for _ in range(pls.v)]
    for li, line in enumerate(pls.lines):
        for p in line:
            pencils[p].append(li)
    return validate_pls(pls.b, pencils)


@dataclass(frozen=True)
class GQReport:
    """Outcome of the quadrangle axiom check."""

    holds: bool
    point: int | None = None
    line: int | None = None
    collinear_count: int | None = None


def is_generalized_quadrangle(pls: PartialLinearSpace) -> GQReport:
    """For every non-incident point-line pair, exactly one point of the
    line must be collinear with the point."""
    line_mask = [0] * pls.b
    for li, line in enumerate(pls.lines):
        for p in line:
            line_mask[li] |= 1 << p
    collinear = [0] * pls.v
    for li, line in enumerate(pls.lines):
        for p in line:
            collinear[p] |= line_mask[li]
    for li in range(pls.b):
        lm = line_mask[li]
        for p in range(pls.v):
            if (lm >> p) & 1:
                continue
            count = (lm & collinear[p]).bit_count()
            if count != 1:
                return GQReport(False, point=p, line=li, collinear_count=count)
    return GQReport(True)


# --- prime field arithmetic ---------------------------------------------------


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class FieldElement:
    """Element of the prime field of characteristic p."""

    p: int
    value: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if not 0 <= self.value < self.p:
            raise ValueError(f"value {self.value} out of range mod {self.p}")

    def _coerce(self, other: "FieldElement") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._coerce(other)
        return FieldElement(self.p, (self.value + other.value) % self.p)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._coerce(other)
        return FieldElement(self.p, (self.value - other.value) % self.p)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._coerce(other)
        return FieldElement(self.p, (self.value * other.value) % self.p)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.p, (-self.value) % self.p)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.p, pow(self.value, self.p - 2, self.p))

    def __bool__(self) -> bool:
        return self.value != 0


Point = tuple[FieldElement, FieldElement, FieldElement, FieldElement]


def _canonical(vec: Point) -> Point:
    """Scale a nonzero 4-vector so its first nonzero coordinate is 1."""
    for c in vec:
        if c:
            inv = c.inverse()
            return tuple(x * inv for x in vec)  # type: ignore[return-value]
    raise ValueError("cannot canonicalize the zero vector")


def _symplectic_form(x: Point, y: Point) -> FieldElement:
    return (x[0] * y[1] - x[1] * y[0]) + (x[2] * y[3] - x[3] * y[2])


def _projective_points(q: int) -> list[Point]:
    """Canonical representatives of PG(3, q), in label order."""
    elems = [FieldElement(q, v) for v in range(q)]
    one = FieldElement(q, 1)
    zero = FieldElement(q, 0)
    points: list[Point] = []
    for a in elems:
        for b in elems:
            for c in elems:
                points.append((one, a, b, c))
    for b in elems:
        for c in elems:
            points.append((zero, one, b, c))
    for c in elems:
        points.append((zero, zero, one, c))
    points.append((zero, zero, zero, one))
    return points


@dataclass(frozen=True)
class GQDescriptor:
    """A constructed generalized quadrangle with canonical point labels."""

    s: int
    t: int
    point_labels: tuple[str, ...]
    pls: PartialLinearSpace
    provenance: str

    @property
    def order(self) -> tuple[int, int]:
        return (self.s, self.t)

    @property
    def lines(self) -> tuple[tuple[int, ...], ...]:
        return self.pls.lines


def construct_grid(s: int) -> GQDescriptor:
    """The (s+1) x (s+1) grid: rows and columns as lines, order (s, 1)."""
    if s < 1:
        raise ValueError(f"grid parameter must be >= 1, got {s}")
    w = s + 1
    labels = tuple(f"({r},{c})" for r in range(w) for c in range(w))
    lines = [[r * w + c for c in range(w)] for r in range(w)]
    lines += [[r * w + c for r in range(w)] for c in range(w)]
    pls = validate_pls(w * w, lines)
    assert (pls.s, pls.t) == (s, 1)
    return GQDescriptor(s, 1, labels, pls, "grid")


def construct_symplectic(q: int) -> GQDescriptor:
    """The symplectic quadrangle of order (q, q) for prime q.

    Points are all of PG(3, q); lines are the projective lines on which
    the alternating form vanishes identically.  The form is alternating,
    so a line span{u, w} is totally isotropic iff <u, w> = 0; lines are
    therefore collected as closures of isotropic point pairs and
    deduplicated by their sorted point-index sets.
    """
    if not is_prime(q):
        raise ValueError(
            f"order {q} is not prime; only prime fields are supported "
            "(prime powers would need polynomial field tables)"
        )
    points = _projective_points(q)
    index = {pt: i for i, pt in enumerate(points)}
    labels = tuple(":".join(str(c.value) for c in pt) for pt in points)
    elems = [FieldElement(q, v) for v in range(q)]
    lines: set[tuple[int, ...]] = set()
    for i, u in enumerate(points):
        for j in range(i + 1, len(points)):
            w = points[j]
            if _symplectic_form(u, w):
                continue
            members = {i, j}
            for lam in elems:
                combo = tuple(uc * lam + wc for uc, wc in zip(u, w))
                members.add(index[_canonical(combo)])
            lines.add(tuple(sorted(members)))
    pls = validate_pls(len(points), sorted(lines))
    assert (pls.s, pls.t) == (q, q)
    assert pls.v == (q + 1) * (q * q + 1) and pls.b == (q + 1) * (q * q + 1)
    return GQDescriptor(q, q, labels, pls, "symplectic")


# --- incidence matrices and schemes ------------------------------------------


def incidence_matrix(pls: PartialLinearSpace) -> BoolMatrix:
    """v x b matrix with rows labelled by points, columns by lines."""
    row_masks = [0] * pls.v
    for li, line in enumerate(pls.lines):
        for p in line:
            row_masks[p] |= 1 << li
    return BoolMatrix(pls.v, pls.b, tuple(row_masks))


def to_testing_scheme(pls: PartialLinearSpace, verify: bool = True, workers: int = 1) -> TestingScheme:
    """Testing scheme with lines as samples and points as tests.

    The line-covering property certifies disjunctness for lines read as
    point sets, so the testing matrix is the transpose of the incidence
    matrix and certified_d = s.  With ``verify`` the certification is
    re-established by the subset sweep (cost grows like C(b, s); pass
    verify=False for large geometries to rely on the construction).
    """
    H = incidence_matrix(pls).transpose()
    if verify:
        return certify_scheme(H, pls.s, workers=workers)
    return TestingScheme(H, certified_d=pls.s)


def scheme_source(gq: GQDescriptor) -> str:
    """Descriptor string recorded in scheme files, e.g. W(3) or grid(4)."""
    if gq.provenance == "symplectic":
        return f"W({gq.s})"
    if gq.provenance == "grid":
        return f"grid({gq.s})"
    return "file"


# --- PLS file format ----------------------------------------------------------
#
# Line 1: "v b"; then b lines, each the point indices of one line,
# space-separated, ascending.


def pls_to_text(pls: PartialLinearSpace) -> str:
    lines = [f"{pls.v} {pls.b}"]
    lines.extend(" ".join(str(p) for p in line) for line in pls.lines)
    return "\n".join(lines) + "\n"


def pls_from_text(text: str) -> PartialLinearSpace:
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows.pop()
    if not rows:
        raise FormatError("empty incidence text")
    parts = rows[0].split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"incidence header must be 'v b': {rows[0]!r}")
    v, b = int(parts[0]), int(parts[1])
    if len(rows) != b + 1:
        raise FormatError(f"expected {b} lines after the header, got {len(rows) - 1}")
    lines = []
    for row in rows[1:]:
        fields = row.split(" ")
        if not fields or not all(f.isdigit() for f in fields):
            raise FormatError(f"line must be space-separated point indices: {row!r}")
        pts = [int(f) for f in fields]
        if pts != sorted(pts):
            raise FormatError(f"line points must be ascending: {row!r}")
        lines.append(pts)
    return validate_pls(v, lines)
