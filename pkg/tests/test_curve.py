import itertools

import pytest

from hermcodes.curve import (
    AffinePoint,
    HermitianCurve,
    embed_projective,
    enumerate_affine_points,
    on_curve,
)
from hermcodes.field import elements, hermitian_field


def test_q2_points_match_hand_list(gf4):
    curve = HermitianCurve.over(2)
    w = gf4.gen
    expected = {(gf4.zero, gf4.zero), (gf4.zero, gf4.one)}
    expected |= {(x, y) for x in (gf4.one, w, w * w) for y in (w, w * w)}
    got = {(p.x, p.y) for p in enumerate_affine_points(curve)}
    assert got == expected


@pytest.mark.parametrize("q", [2, 3, 4])
def test_enumeration_matches_pair_scan(q):
    curve = HermitianCurve.over(q)
    F = curve.field
    scan = [(x.idx, y.idx) for x, y in itertools.product(elements(F), repeat=2)
            if on_curve(curve, x, y)]
    pts = enumerate_affine_points(curve)
    assert [(p.x.idx, p.y.idx) for p in pts] == scan
    assert len(pts) == q**3


def test_on_curve_examples(gf4):
    curve = HermitianCurve.over(2)
    assert on_curve(curve, gf4.zero, gf4.zero)
    assert not on_curve(curve, gf4.one, gf4.one)
    assert on_curve(curve, gf4.one, gf4.gen)


def test_off_curve_point_rejected(gf4):
    with pytest.raises(ValueError):
        AffinePoint(HermitianCurve.over(2), gf4.one, gf4.one)


def test_embedding(gf4):
    curve = HermitianCurve.over(2)
    p = embed_projective(AffinePoint(curve, gf4.zero, gf4.zero))
    assert p.idx == (0, 0, 1)
    P = embed_projective(AffinePoint(curve, gf4.one, gf4.gen))
    assert P.idx == (1, gf4.gen.idx, 1)
    assert type(P)(P.coords) == P


def test_wrong_field_rejected():
    with pytest.raises(ValueError):
        HermitianCurve(2, hermitian_field(3))


def test_genus():
    assert [HermitianCurve.over(q).genus for q in (2, 3, 4, 5)] == [1, 3, 6, 10]


def test_json_is_index_pairs(points_q2):
    assert points_q2.to_json()[:2] == [{"x": 0, "y": 0}, {"x": 0, "y": 1}]
