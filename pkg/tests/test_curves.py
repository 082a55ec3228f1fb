from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings

from ksbraid.braid_functors import BraidWord, apply_word
from ksbraid.complexes import BigradedPoly, fingerprint, hom_poincare, projective, shift
from ksbraid.curves import (
    BOUNDARY,
    BigradedNormalCurve,
    Crossing,
    CurveError,
    KString,
    Segment,
    apply_word_curve,
    basic_curve,
    curve_shift,
    decompose_kstrings,
    gin_basic,
    gin_by_types,
    ibigr_basic,
    identity_witness,
    is_identity_word,
    kstring_contribution,
    l_complex,
    twist,
)
from ksbraid.path_algebra import AlgebraSpec

from conftest import braid_words, seeded_words

Q = BigradedPoly.monomial
ONE = Q(0, 0)


def twisted(w):
    return [apply_word_curve(w, basic_curve(j, w.m)) for j in range(w.m + 1)]


def test_basic_curves():
    m = 4
    for k in range(m + 1):
        b = basic_curve(k, m)
        assert b.crossings == (Crossing(k, 0, 0),)
        assert fingerprint(l_complex(b)) == ((k, 0, 0),)
    assert basic_curve(0, m).ends == (BOUNDARY, 0)
    assert basic_curve(3, m).ends == (2, 3)
    with pytest.raises(ValueError):
        basic_curve(5, m)


def test_basic_intersections():
    m = 4
    assert ibigr_basic(0, basic_curve(0, m)) == ONE
    for k in range(m + 1):
        if k >= 1:
            assert ibigr_basic(k, basic_curve(k, m)) == ONE + Q(0, 1)
        assert gin_basic(k, basic_curve(k, m)) == (1 if k else Fraction(1, 2))
        if k < m:
            assert ibigr_basic(k, basic_curve(k + 1, m)) == ONE
            assert gin_basic(k, basic_curve(k + 1, m)) == Fraction(1, 2)
        for j in range(m + 1):
            if abs(j - k) >= 2:
                assert gin_basic(k, basic_curve(j, m)) == 0


def test_decompose_basic():
    m = 4
    for k in range(1, m + 1):
        assert decompose_kstrings(basic_curve(k, m), k) == [KString("VI", None, (0, 0))]
    for k in range(1, m):
        (s,) = decompose_kstrings(basic_curve(k + 1, m), k)
        assert (s.type_tag, s.u, s.shift) == ("III'", 0, (0, 0))
        assert kstring_contribution(s) == ONE
    for k in range(m + 1):
        for j in range(m + 1):
            if abs(j - k) > 1:
                assert all(kstring_contribution(s).is_zero() for s in decompose_kstrings(basic_curve(j, m), k))


def test_curve_shift():
    b = basic_curve(2, 3)
    assert curve_shift(b, 0, 0) == b
    assert fingerprint(l_complex(curve_shift(b, 1, 1))) == ((2, 1, 1),)
    assert fingerprint(shift(l_complex(b), -1, 1)) == ((2, 1, 1),)


def test_self_twist():
    m = 4
    for k in range(1, m + 1):
        b = basic_curve(k, m)
        assert twist(b, k, 1) == curve_shift(b, -1, 1)
        assert twist(b, k, -1) == curve_shift(b, 1, -1)


def test_twist_b2_along_1():
    c = twist(basic_curve(2, 3), 1, 1)
    assert fingerprint(l_complex(c)) == ((1, -1, 0), (2, 0, 0))
    assert fingerprint(l_complex(c)) == fingerprint(apply_word(BraidWord(3, (1,)), projective(2, AlgebraSpec(3))))


def test_twist_range():
    with pytest.raises(ValueError):
        twist(basic_curve(1, 2), 0, 1)
    with pytest.raises(ValueError):
        twist(basic_curve(1, 2), 1, 2)


def example_curve():
    # d1 -> d2 over puncture 1, U-turn round puncture 2, back under puncture 1, out to d3
    return BigradedNormalCurve(
        3,
        [Crossing(1, 0, 0), Crossing(2, 1, 0), Crossing(2, 2, -1), Crossing(2, 1, 0), Crossing(3, 0, 1)],
        [Segment(2, -1), Segment(3, -2), Segment(2, 2), Segment(3, 1)],
        (0, 3),
    )


def test_example_complex():
    c = example_curve()
    assert c.segment_types() == ["1", "2", "2'", "1'"]
    lc = l_complex(c)
    assert Counter(s.signature for s in lc.summands) == Counter(
        [(1, 0, 0), (3, 0, 1), (2, 1, 0), (2, 1, 0), (2, 2, -1)]
    )
    assert len(lc.entries) == 4
    # it is a twisted basic curve, so the curve side and complex side must agree
    w = BraidWord(3, (-2, 3, -2))
    assert apply_word_curve(w, basic_curve(1, 3)) == c


def test_i0_string_complex():
    k = 2
    c = BigradedNormalCurve(
        3, [Crossing(1, 0, 0), Crossing(2, 1, 0), Crossing(3, 0, 1)], [Segment(2, -1), Segment(3, 1)], (0, 3)
    )
    lc = l_complex(c)
    assert sorted(s.signature for s in lc.summands) == [(1, 0, 0), (2, 1, 0), (3, 0, 1)]
    (s,) = decompose_kstrings(c, k)
    assert (s.type_tag, s.u, s.shift) == ("I", 0, (0, 0))
    assert ibigr_basic(k, c) == Q(1, 0) + Q(0, 1)


def test_invalid_curves():
    with pytest.raises(CurveError):  # wrong bigrading jump
        BigradedNormalCurve(3, [Crossing(1, 0, 0), Crossing(2, 0, 0)], [Segment(2, -1)], (0, 2))
    with pytest.raises(CurveError):  # crossing does not separate the adjacent regions
        BigradedNormalCurve(3, [Crossing(2, 0, 0)], [], (0, 2))
    with pytest.raises(CurveError):  # winding not allowed
        BigradedNormalCurve(3, [Crossing(1, 0, 0), Crossing(2, 1, 0)], [Segment(2, -3)], (0, 2))
    with pytest.raises(CurveError):  # no crossings
        BigradedNormalCurve(3, [], [], (0, 1))


def test_canonical_orientation_and_json():
    c = example_curve()
    rev = BigradedNormalCurve(
        3,
        c.crossings[::-1],
        [Segment(s.region, -s.winding) for s in c.segments[::-1]],
        (c.ends[1], c.ends[0]),
    )
    assert rev == c and hash(rev) == hash(c)
    data = c.to_json()
    assert set(data) == {"m", "crossings", "segments", "ends"}
    assert BigradedNormalCurve.from_json(data) == c
    b0 = basic_curve(0, 2)
    assert b0.to_json()["ends"] == ["boundary", 0]
    assert BigradedNormalCurve.from_json(b0.to_json()) == b0


def test_all_string_types_occur():
    tags = set()
    for m in (1, 2, 3, 4):
        for w in seeded_words(11 + m, m, 60, 7):
            for c in twisted(w):
                for k in range(m + 1):
                    tags.update(s.type_tag for s in decompose_kstrings(c, k))
    assert tags == {"I", "II", "II'", "III", "III'", "IV", "IV'", "V", "V'", "VI", "VII", "VIII", "IX", "X", "XI"}


@pytest.mark.parametrize("m", [2, 3, 4])
def test_curve_braid_relations(m):
    rels = [((i, i + 1, i), (i + 1, i, i + 1)) for i in range(1, m)]
    rels += [((a, b), (b, a)) for a in range(1, m + 1) for b in range(a + 2, m + 1)]
    for lhs, rhs in rels:
        for j in range(m + 1):
            b = basic_curve(j, m)
            assert apply_word_curve(BraidWord(m, lhs), b) == apply_word_curve(BraidWord(m, rhs), b)


def test_identity_detection():
    for m in (1, 2, 3, 4):
        assert is_identity_word(BraidWord(m, ()))
        assert not is_identity_word(BraidWord(m, (1,)))
        assert not is_identity_word(BraidWord(m, (1, 1)))
    assert is_identity_word(BraidWord(2, (1, 2, 1, -2, -1, -2)))
    assert not is_identity_word(BraidWord(2, (1, 2)))
    assert not is_identity_word(BraidWord(2, (1, -2)))
    assert identity_witness(BraidWord(2, ())) is None


@given(braid_words(max_len=6))
@settings(max_examples=60, deadline=None)
def test_curve_properties(w):
    m = w.m
    for j, c in enumerate(twisted(w)):
        lc = l_complex(c)
        for k in range(m + 1):
            h = ibigr_basic(k, c)
            assert h == hom_poincare(k, lc)[0]
            assert gin_by_types(k, c) == gin_basic(k, c)
            assert ibigr_basic(k, curve_shift(c, 2, -3)) == h.shifted(2, -3)
        assert fingerprint(l_complex(curve_shift(c, 1, -2))) == fingerprint(shift(lc, -1, -2))
        for k in range(1, m + 1):
            for s in (1, -1):
                t = twist(c, k, s)
                assert twist(t, k, -s) == c
                assert ibigr_basic(k, t) == ibigr_basic(k, c).shifted(-s, s)
                outside = lambda cur: Counter(x for x in cur.crossings if x.line != k)
                assert outside(t) == outside(c)


@given(braid_words(max_len=6))
@settings(max_examples=40, deadline=None)
def test_bigraded_symmetry(w):
    m = w.m
    for j in range(m + 1):
        for k in range(m + 1):
            if (j, k) == (0, 0):
                continue  # both curves end on the boundary point
            a = ibigr_basic(j, apply_word_curve(w, basic_curve(k, m)))
            b = ibigr_basic(k, apply_word_curve(w.inverse(), basic_curve(j, m)))
            assert a.terms == {(-r1, 1 - r2): v for (r1, r2), v in b.terms.items()}
