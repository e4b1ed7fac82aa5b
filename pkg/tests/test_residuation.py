import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resgt.boolsemi import BoolMatrix, BoolVec, DimensionMismatch, leq, mat_vec_mul, vec_mul
from resgt.residuation import (
    ResiduatedPair,
    SizeGuardExceeded,
    TestingScheme,
    closure,
    decode,
    encode,
    enumerate_closed,
    enumerate_kernel,
    forward,
    kernel,
    residual,
    scheme_from_text,
    scheme_to_text,
    verify_residuated_pair,
)
from resgt.boolsemi import FormatError


def v(*bits):
    return BoolVec.from_bits(bits)


@st.composite
def matrices(draw, max_n=8, max_k=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    masks = tuple(draw(st.integers(0, (1 << k) - 1)) for _ in range(n))
    return BoolMatrix(n, k, masks)


def decode_by_sets(H, y):
    """Independent reference decoder: sample positive iff all its tests are."""
    bits = []
    for i in range(H.rows):
        tests = [j for j in range(H.cols) if H.entry(i, j)]
        bits.append(1 if all(y[j] for j in tests) else 0)
    return BoolVec.from_bits(bits)


H_EXAMPLE = BoolMatrix.from_entries([[1, 0], [1, 1], [0, 1]])


def test_encode_examples():
    ident = TestingScheme(BoolMatrix.identity(3))
    assert encode(ident, v(0, 1, 0)) == v(0, 1, 0)
    scheme = TestingScheme(H_EXAMPLE)
    assert encode(scheme, v(0, 1, 0)) == v(1, 1)
    assert encode(scheme, BoolVec.zeros(3)) == BoolVec.zeros(2)
    with pytest.raises(DimensionMismatch):
        encode(scheme, v(1, 0))


def test_decode_examples():
    ident = TestingScheme(BoolMatrix.identity(3))
    assert decode(ident, v(1, 0, 1)) == v(1, 0, 1)
    scheme = TestingScheme(H_EXAMPLE)
    # product-of-sums by hand: row 0 needs test 0 only; rows 1, 2 need test 1
    assert decode(scheme, v(1, 0)) == v(1, 0, 0)
    assert decode(scheme, BoolVec.ones(2)) == BoolVec.ones(3)
    with pytest.raises(DimensionMismatch):
        decode(scheme, v(1, 0, 0))


@given(matrices(), st.data())
def test_decode_matches_set_reference(H, data):
    y = BoolVec(H.cols, data.draw(st.integers(0, (1 << H.cols) - 1)))
    assert residual(H, y) == decode_by_sets(H, y)


def test_closure_kernel_examples():
    scheme = TestingScheme(H_EXAMPLE)  # no all-zero row
    assert closure(scheme, BoolVec.zeros(3)) == BoolVec.zeros(3)
    for ym in range(4):
        y = encode(scheme, decode(scheme, BoolVec(2, ym)))
        assert kernel(scheme, y) == y  # k(y) = y on im(f)
    rng = random.Random(0)
    for _ in range(20):
        x = BoolVec(3, rng.randint(0, 7))
        assert closure(scheme, closure(scheme, x)) == closure(scheme, x)


@given(matrices(max_n=12, max_k=12), st.data())
def test_no_false_negatives_and_dual(H, data):
    scheme = TestingScheme(H)
    x = BoolVec(H.rows, data.draw(st.integers(0, (1 << H.rows) - 1)))
    assert leq(x, closure(scheme, x))
    y = BoolVec(H.cols, data.draw(st.integers(0, (1 << H.cols) - 1)))
    assert leq(kernel(scheme, y), y)


@settings(max_examples=40)
@given(matrices(max_n=8, max_k=8))
def test_triple_composition_laws_exhaustive(H):
    scheme = TestingScheme(H)
    for xm in range(1 << H.rows):
        x = BoolVec(H.rows, xm)
        fx = encode(scheme, x)
        assert encode(scheme, decode(scheme, fx)) == fx
    for ym in range(1 << H.cols):
        y = BoolVec(H.cols, ym)
        gy = decode(scheme, y)
        assert decode(scheme, encode(scheme, gy)) == gy


@given(matrices(max_n=10, max_k=10), st.data())
def test_residual_preserves_infima(H, data):
    scheme = TestingScheme(H)
    top = (1 << H.cols) - 1
    y1 = BoolVec(H.cols, data.draw(st.integers(0, top)))
    y2 = BoolVec(H.cols, data.draw(st.integers(0, top)))
    assert decode(scheme, vec_mul(y1, y2)) == vec_mul(decode(scheme, y1), decode(scheme, y2))
    assert decode(scheme, BoolVec.ones(H.cols)) == BoolVec.ones(H.rows)


def test_verify_residuated_pair_modes():
    pair = ResiduatedPair.from_matrix(H_EXAMPLE)
    assert verify_residuated_pair(pair.forward, pair.residual, 3, 2)
    assert verify_residuated_pair(pair.forward, pair.residual, 3, 2, samples=200, seed=1)

    ident = lambda z: z
    assert verify_residuated_pair(ident, ident, 4, 4)

    # y -> y H^T without the negations overshoots the residual
    H = BoolMatrix.from_entries([[1, 1]])
    fwd = lambda x: mat_vec_mul(x, H)
    bad = lambda y: mat_vec_mul(y, H.transpose())
    assert not verify_residuated_pair(fwd, bad, 1, 2)
    assert not verify_residuated_pair(fwd, bad, 1, 2, samples=500, seed=3)


def test_verify_guard():
    pair = ResiduatedPair.from_matrix(BoolMatrix.identity(3))
    with pytest.raises(SizeGuardExceeded):
        verify_residuated_pair(pair.forward, pair.residual, 17, 17, guard=16)
    assert verify_residuated_pair(pair.forward, pair.residual, 3, 3, guard=3)


@settings(max_examples=30)
@given(matrices(max_n=6, max_k=6))
def test_residual_is_forced_supremum(H):
    # the adjunction leaves no choice: g(y) must be the largest x with f(x) <= y,
    # so the residual is unique given f
    scheme = TestingScheme(H)
    for ym in range(1 << H.cols):
        y = BoolVec(H.cols, ym)
        sup = 0
        for xm in range(1 << H.rows):
            if leq(encode(scheme, BoolVec(H.rows, xm)), y):
                sup |= xm
        assert decode(scheme, y) == BoolVec(H.rows, sup)


def test_enumerate_closed_identity():
    scheme = TestingScheme(BoolMatrix.identity(3))
    closed = enumerate_closed(scheme)
    assert closed == frozenset(BoolVec(3, m) for m in range(8))
    assert enumerate_kernel(scheme) == closed


def test_enumerate_closed_example_matrix():
    scheme = TestingScheme(H_EXAMPLE)
    closed = enumerate_closed(scheme)
    kern = enumerate_kernel(scheme)
    assert len(closed) == len(kern)
    assert BoolVec.zeros(3) in closed
    # the restriction of f is a bijection onto the kernel set, inverted by g
    image = {encode(scheme, c) for c in closed}
    assert image == set(kern)


@settings(max_examples=40)
@given(matrices(max_n=8, max_k=8))
def test_closed_kernel_bijection(H):
    scheme = TestingScheme(H)
    closed = enumerate_closed(scheme)
    kern = enumerate_kernel(scheme)
    image = [encode(scheme, c) for c in closed]
    assert len(set(image)) == len(closed)  # injective
    assert set(image) == set(kern)  # onto
    for c in closed:
        assert decode(scheme, encode(scheme, c)) == c  # two-sided inverse


def test_enumeration_guard():
    scheme = TestingScheme(BoolMatrix.identity(4))
    with pytest.raises(SizeGuardExceeded):
        enumerate_closed(scheme, guard=3)
    with pytest.raises(SizeGuardExceeded):
        enumerate_kernel(scheme, guard=3)


def test_scheme_zero_row_flagging():
    H = BoolMatrix.from_entries([[0, 0], [1, 1]])
    scheme = TestingScheme(H)  # constructible for pedagogy
    assert scheme.has_zero_rows
    with pytest.raises(ValueError):
        TestingScheme(H, certified_d=1)
    TestingScheme(H, certified_d=0)  # d = 0 says nothing about zero rows


def test_scheme_descriptor_roundtrip():
    scheme = TestingScheme(H_EXAMPLE, certified_d=0)
    text = scheme_to_text(scheme, source="file")
    assert text == "certified_d=0\nsource=file\nmatrix=\n3 2\n10\n11\n01\n"
    back, source = scheme_from_text(text)
    assert back == scheme and source == "file"
    assert scheme_to_text(back, source=source) == text

    bare = scheme_to_text(TestingScheme(H_EXAMPLE))
    assert bare == "matrix=\n3 2\n10\n11\n01\n"
    back, source = scheme_from_text(bare)
    assert back.certified_d is None and source is None


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "3 2\n10\n11\n01\n",
        "certified_d=2\n3 2\n10\n11\n01\n",
        "certified_d=x\nmatrix=\n3 2\n10\n11\n01\n",
        "source=f\ncertified_d=2\nmatrix=\n3 2\n10\n11\n01\n",
        "matrix=\n3 2\n10\n11\n",
    ],
)
def test_scheme_descriptor_rejects(bad):
    with pytest.raises(FormatError):
        scheme_from_text(bad)


def test_forward_residual_dimension_checks():
    with pytest.raises(DimensionMismatch):
        forward(H_EXAMPLE, v(1, 0))
    with pytest.raises(DimensionMismatch):
        residual(H_EXAMPLE, v(1, 0, 0))
