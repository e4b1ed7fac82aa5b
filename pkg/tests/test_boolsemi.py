import math
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resgt.boolsemi import (
    BoolMatrix,
    BoolVec,
    DimensionMismatch,
    FormatError,
    ball_enumerate,
    ball_size,
    colspace_greedy_sum,
    colspace_member,
    hamming_distance,
    hamming_weight,
    leq,
    linearly_independent,
    mat_vec_mul,
    matrix_from_text,
    matrix_to_text,
    negate,
    vec_add,
    vec_mul,
    vector_from_text,
    vector_to_text,
)


def v(*bits):
    return BoolVec.from_bits(bits)


@st.composite
def vec_pairs(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    top = (1 << n) - 1
    return BoolVec(n, draw(st.integers(0, top))), BoolVec(n, draw(st.integers(0, top)))


@st.composite
def matrices(draw, max_n=10, max_k=10):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    masks = tuple(draw(st.integers(0, (1 << k) - 1)) for _ in range(n))
    return BoolMatrix(n, k, masks)


# --- ring operations ---------------------------------------------------------


def test_vec_add_or_table():
    assert vec_add(v(1, 0), v(0, 1)) == v(1, 1)
    x = v(1, 0, 1)
    assert vec_add(x, BoolVec.zeros(3)) == x
    assert vec_add(v(1, 1, 0), v(1, 0, 0)) == v(1, 1, 0)


def test_vec_mul_and_table():
    assert vec_mul(v(1, 0), v(1, 1)) == v(1, 0)
    x = v(0, 1, 1)
    assert vec_mul(x, BoolVec.ones(3)) == x
    assert vec_mul(x, BoolVec.zeros(3)) == BoolVec.zeros(3)


def test_negate():
    assert negate(v(1, 0, 1)) == v(0, 1, 0)
    assert negate(BoolVec.zeros(4)) == BoolVec.ones(4)
    assert negate(vec_add(v(1, 0), v(0, 0))) == vec_mul(negate(v(1, 0)), negate(v(0, 0)))
    assert negate(vec_add(v(1, 0), v(0, 0))) == v(0, 1)


def test_length_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        vec_add(v(1, 0), v(1, 0, 0))
    with pytest.raises(DimensionMismatch):
        vec_mul(v(1), v(1, 0))
    with pytest.raises(DimensionMismatch):
        leq(v(1), v(1, 0))
    with pytest.raises(DimensionMismatch):
        hamming_distance(v(1), v(1, 0))


@given(vec_pairs())
def test_de_morgan_laws(pair):
    x, y = pair
    assert negate(vec_add(x, y)) == vec_mul(negate(x), negate(y))
    assert negate(vec_mul(x, y)) == vec_add(negate(x), negate(y))


@given(vec_pairs())
def test_double_negation(pair):
    x, _ = pair
    assert negate(negate(x)) == x


# --- order ---------------------------------------------------------------------


def test_leq_examples():
    assert leq(v(1, 0), v(1, 1))
    assert not leq(v(1, 0), v(0, 1))
    x = v(1, 0, 1)
    assert leq(x, x)


def test_partial_order_laws_exhaustive_b2_4():
    space = [BoolVec(4, m) for m in range(16)]
    for x in space:
        assert leq(x, x)
    for x, y in product(space, repeat=2):
        if leq(x, y) and leq(y, x):
            assert x == y
    for x, y, z in product(space, repeat=3):
        if leq(x, y) and leq(y, z):
            assert leq(x, z)


def test_leq_iff_add_absorbs():
    for xm in range(8):
        for ym in range(8):
            x, y = BoolVec(3, xm), BoolVec(3, ym)
            assert leq(x, y) == (vec_add(x, y) == y)


# --- Hamming metrics ------------------------------------------------------------


def test_weight_and_distance_examples():
    assert hamming_weight(v(1, 0, 1, 1)) == 3
    assert hamming_distance(v(1, 0, 1), v(1, 1, 0)) == 2
    assert hamming_weight(v(1, 1, 1)) - hamming_weight(v(1, 0, 0)) == 2
    x = v(0, 1, 1, 0)
    assert hamming_distance(x, x) == 0


@given(vec_pairs())
def test_distance_weight_identity(pair):
    x, y = pair
    assert hamming_distance(x, y) == hamming_weight(vec_add(x, y)) - hamming_weight(vec_mul(x, y))


# --- linear independence ---------------------------------------------------------


def test_linearly_independent():
    assert linearly_independent([v(1, 0), v(0, 1)])
    assert not linearly_independent([v(1, 0), v(1, 1)])
    assert not linearly_independent([v(1, 1), BoolVec.zeros(2)])
    assert not linearly_independent([BoolVec.zeros(3)])
    assert linearly_independent([v(1, 0, 1)])
    with pytest.raises(ValueError):
        linearly_independent([])


# --- Hamming balls ----------------------------------------------------------------


def test_ball_examples():
    got = list(ball_enumerate(BoolVec.zeros(3), 1))
    assert got == [BoolVec(3, 0), v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)]
    center = v(1, 0, 1, 1)
    assert list(ball_enumerate(center, 0)) == [center]
    # binomial-sum oracle: 1 + 15 + C(15,2) = 121
    assert sum(math.comb(15, i) for i in range(3)) == 121
    assert sum(1 for _ in ball_enumerate(BoolVec.zeros(15), 2)) == 121


def test_ball_radius_guard():
    with pytest.raises(ValueError):
        list(ball_enumerate(BoolVec.zeros(3), 4))
    with pytest.raises(ValueError):
        list(ball_enumerate(BoolVec.zeros(3), -1))


@given(st.integers(1, 10), st.integers(0, 4), st.data())
def test_ball_size_and_membership(n, d, data):
    d = min(d, n)
    center = BoolVec(n, data.draw(st.integers(0, (1 << n) - 1)))
    seen = set()
    for z in ball_enumerate(center, d):
        assert hamming_distance(center, z) <= d
        assert z not in seen
        seen.add(z)
    assert len(seen) == ball_size(n, d)


# --- matrices ------------------------------------------------------------------------


def test_matrix_accessors():
    H = BoolMatrix.from_entries([[1, 0], [1, 1], [0, 1]])
    assert H.rows == 3 and H.cols == 2
    assert H.row(1) == v(1, 1)
    assert H.col(0) == v(1, 1, 0)
    assert H.entry(2, 0) == 0 and H.entry(2, 1) == 1
    assert H.transpose().transpose() == H
    assert BoolMatrix.identity(3).transpose() == BoolMatrix.identity(3)


@given(matrices())
def test_transpose_involution(H):
    T = H.transpose()
    assert T.rows == H.cols and T.cols == H.rows
    assert T.transpose() == H
    for i in range(H.rows):
        assert H.row(i) == T.col(i)


def test_mat_vec_mul_examples():
    H = BoolMatrix.from_entries([[1, 0], [1, 1], [0, 1]])
    assert mat_vec_mul(v(1, 0, 0), H) == v(1, 0)
    # OR of rows 0 and 2: (1,0) + (0,1)
    assert mat_vec_mul(v(1, 0, 1), H) == v(1, 1)
    assert mat_vec_mul(BoolVec.zeros(3), H) == BoolVec.zeros(2)
    with pytest.raises(DimensionMismatch):
        mat_vec_mul(v(1, 0), H)


@given(matrices(), st.data())
def test_mat_vec_mul_preserves_suprema(H, data):
    top = (1 << H.rows) - 1
    x = BoolVec(H.rows, data.draw(st.integers(0, top)))
    x2 = BoolVec(H.rows, data.draw(st.integers(0, top)))
    f = lambda z: mat_vec_mul(z, H)
    assert f(vec_add(x, x2)) == vec_add(f(x), f(x2))
    assert f(BoolVec.zeros(H.rows)) == BoolVec.zeros(H.cols)


# --- column space ----------------------------------------------------------------------


def colspace_member_exhaustive(H, target):
    """Oracle: try every subset of columns."""
    cols = [H.col(j).mask for j in range(H.cols)]
    for r in range(H.cols + 1):
        for sub in combinations(cols, r):
            acc = 0
            for c in sub:
                acc |= c
            if acc == target.mask:
                return True
    return False


def test_colspace_examples():
    H = BoolMatrix.from_entries([[1, 0], [1, 1], [0, 1]])  # columns (1,1,0), (0,1,1)
    assert colspace_member(H, v(1, 1, 1))
    assert colspace_member(H, BoolVec.zeros(3))
    assert not colspace_member(H, v(1, 0, 0))
    assert colspace_greedy_sum(H, v(1, 0, 0)) == BoolVec.zeros(3)
    with pytest.raises(DimensionMismatch):
        colspace_member(H, v(1, 0))


@settings(max_examples=60)
@given(matrices(max_n=8, max_k=12), st.data())
def test_colspace_greedy_matches_exhaustive(H, data):
    target = BoolVec(H.rows, data.draw(st.integers(0, (1 << H.rows) - 1)))
    assert colspace_member(H, target) == colspace_member_exhaustive(H, target)


# --- text format -------------------------------------------------------------------------


def test_matrix_text_roundtrip():
    H = BoolMatrix.from_entries([[1, 0], [1, 1], [0, 1]])
    text = matrix_to_text(H)
    assert text == "3 2\n10\n11\n01\n"
    assert matrix_from_text(text) == H


@given(matrices())
def test_matrix_text_roundtrip_random(H):
    assert matrix_from_text(matrix_to_text(H)) == H


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "3\n10\n11\n01\n",
        "3 2\n10\n11\n",
        "3 2\n10\n11\n01\n00\n",
        "3 2\n10\n1x\n01\n",
        "3 2\n10\n111\n01\n",
        "3 2\n10\n11\n01\n\n",
        "a b\n10\n",
        "0 2\n",
        "3  2\n10\n11\n01\n",
    ],
)
def test_matrix_text_rejects(bad):
    with pytest.raises(FormatError):
        matrix_from_text(bad)


def test_vector_text_roundtrip():
    x = v(1, 0, 1, 1)
    assert vector_to_text(x) == "1011\n"
    assert vector_from_text("1011\n") == x
    assert vector_from_text("1011") == x
    for bad in ["", "10\n11\n", "1a1\n", "\n"]:
        with pytest.raises(FormatError):
            vector_from_text(bad)
