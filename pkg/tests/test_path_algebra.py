import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ksbraid.path_algebra import (
    AlgebraElement,
    AlgebraSpec,
    Coefficients,
    basis,
    degree,
    idempotent_slice,
    is_path,
    multiply,
    reduce_path,
    reduce_path_all_orders,
)


def el(spec, *p, c=1):
    return AlgebraElement.path(spec, p, c)


def test_basis_m1_order():
    assert basis(AlgebraSpec(1)) == [(0,), (1,), (0, 1), (1, 0), (1, 0, 1)]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_basis_size(m):
    b = basis(AlgebraSpec(m))
    assert len(b) == 4 * m + 1
    assert len(set(b)) == len(b)


def test_idempotent_count_m1():
    assert sum(1 for p in basis(AlgebraSpec(1)) if len(p) == 1) == 2


def test_bad_spec():
    with pytest.raises(ValueError):
        AlgebraSpec(0)


@pytest.mark.parametrize("p,d", [((1, 0), 1), ((0, 1), 0), ((1, 0, 1), 1), ((2,), 0)])
def test_degree(p, d):
    assert degree(p) == d


def test_reduce_examples():
    s1, s2 = AlgebraSpec(1), AlgebraSpec(2)
    assert reduce_path((0, 1, 0), s2).is_zero()
    assert reduce_path((1, 2, 1), s2) == el(s2, 1, 0, 1)
    assert reduce_path((0, 1, 2), s2).is_zero()
    assert reduce_path((2, 1, 0), s2).is_zero()
    assert reduce_path((1, 0, 1, 0), s1).is_zero()
    assert reduce_path((1, 0, 1, 0), s2).is_zero()


def _paths(m, max_len):
    for n in range(1, max_len + 1):
        for start in range(m + 1):
            for steps in itertools.product((1, -1), repeat=n - 1):
                p = [start]
                for s in steps:
                    p.append(p[-1] + s)
                if all(0 <= v <= m for v in p):
                    yield tuple(p)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reduce_confluent(m):
    spec = AlgebraSpec(m)
    for p in _paths(m, 6):
        results = reduce_path_all_orders(p)
        assert len(results) == 1, p
        (res,) = results
        ref = reduce_path(p, spec)
        if res == ():
            assert ref.is_zero()
        else:
            assert ref == el(spec, *res)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_associative_exhaustive(m):
    spec = AlgebraSpec(m)
    b = [el(spec, *p) for p in basis(spec)]
    for x, y, z in itertools.product(b, repeat=3):
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_unit_and_degree(m):
    spec = AlgebraSpec(m)
    one = AlgebraElement.unit(spec)
    b = basis(spec)
    for p in b:
        x = el(spec, *p)
        assert one * x == x and x * one == x
    for p, q in itertools.product(b, repeat=2):
        prod = el(spec, *p) * el(spec, *q)
        if not prod.is_zero():
            assert prod.degrees() == {degree(p) + degree(q)}


def test_multiply_examples():
    s = AlgebraSpec(2)
    assert multiply(el(s, 0, 1), el(s, 1, 0)).is_zero()
    assert multiply(el(s, 1, 0), el(s, 0, 1)) == el(s, 1, 0, 1)
    assert multiply(el(s, 0, 1), el(s, 0)).is_zero()
    for i in range(3):
        assert multiply(el(s, i), el(s, i)) == el(s, i)


def test_slices():
    s = AlgebraSpec(3)
    assert idempotent_slice(1, 1, s) == [(0, 1), (1, 1)]
    assert idempotent_slice(0, 0, s) == [(0, 1)]
    assert idempotent_slice(0, 2, s) == []
    assert idempotent_slice(1, 2, s) == [(0, 1)]
    assert idempotent_slice(2, 1, s) == [(1, 1)]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_slice_ranks_sum(m):
    s = AlgebraSpec(m)
    assert sum(r for i in range(m + 1) for j in range(m + 1) for _, r in idempotent_slice(i, j, s)) == 4 * m + 1


def test_mod2_coefficients():
    s = AlgebraSpec(2, Coefficients.MOD2)
    x = el(s, 1, 0)
    assert (x + x).is_zero()
    assert el(s, 1, c=-1) == el(s, 1)


def test_json_roundtrip():
    s = AlgebraSpec(2)
    x = el(s, 1, 0, 1, c=3) + el(s, 0, 1, c=-2)
    data = x.to_json()
    assert data == sorted(data, key=lambda t: basis(s).index(tuple(t["path"])))
    assert AlgebraElement.from_json(s, data) == x


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 4 * m), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))))
@settings(max_examples=100, deadline=None)
def test_distributive(data):
    m, idx, coeffs = data
    s = AlgebraSpec(m)
    b = basis(s)
    x, y, z = (el(s, *b[i], c=c) for i, c in zip(idx, coeffs))
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


def test_invalid_path():
    assert not is_path((0, 2))
    with pytest.raises(ValueError):
        reduce_path((0, 2), AlgebraSpec(2))
