import math
import random

import pytest

from quditline import kernels
from quditline.errors import BudgetExceededError, ZeroVectorError
from quditline.line import (
    count_points_through,
    cyclic_submodule,
    enumerate_points,
    line_cardinality,
    point_through,
    points_through,
    union_equals_perp,
    union_of_points,
    union_size,
)
from quditline.ring import factorize
from quditline.symplectic import Vec2, is_admissible, perp_set


def _vec(b, c, d):
    return Vec2(b % d, c % d, factorize(d))


def test_enumerate_points_counts():
    assert len(enumerate_points(factorize(2))) == 3
    assert len(enumerate_points(factorize(4))) == 6
    assert len(enumerate_points(factorize(12))) == 24


def test_enumerate_points_d4_generators():
    cat = enumerate_points(factorize(4))
    assert cat.generators() == [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 1)]


def test_enumerate_points_d2_generators():
    cat = enumerate_points(factorize(2))
    assert cat.generators() == [(0, 1), (1, 0), (1, 1)]


def test_points_are_sorted_and_admissible():
    for d in (6, 9, 12, 18):
        cat = enumerate_points(factorize(d))
        gens = cat.generators()
        assert gens == sorted(gens)
        assert all(is_admissible(pt.generator) for pt in cat)


@pytest.mark.parametrize("d", list(range(2, 41)))
def test_catalog_matches_dedup_enumeration(d):
    """Closed-form generators reproduce plain orbit deduplication exactly."""
    cat = enumerate_points(factorize(d))
    catalog_masks = sorted(
        kernels.orbit_mask(d, gb, gc) for gb, gc in cat.generators()
    )
    assert catalog_masks == sorted(kernels.dedup_points(d))
    assert len(cat) == line_cardinality(factorize(d))


@pytest.mark.parametrize("d", [2, 3, 4, 6, 8, 9, 12, 30, 60])
def test_points_have_d_vectors_and_share_zero(d):
    m = factorize(d)
    cat = enumerate_points(m)
    masks = [
        kernels.mask_bits(kernels.orbit_mask(d, gb, gc))
        for gb, gc in cat.generators()
    ]
    for bits in masks:
        assert bits.bit_count() == d
        assert bits & 1  # (0,0) is bit 0
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            assert masks[i] != masks[j]
            assert masks[i] & masks[j] & 1


def test_point_membership_matches_vectors():
    rng = random.Random(3)
    for d in (4, 9, 12, 30):
        m = factorize(d)
        cat = enumerate_points(m)
        for pt in cat:
            vecs = pt.vectors()
            assert len(vecs) == d
            for _ in range(40):
                v = Vec2(rng.randrange(d), rng.randrange(d), m)
                assert pt.contains(v) == (v in vecs)


def test_point_through_canonicalizes():
    for d in (4, 12, 18):
        m = factorize(d)
        cat = enumerate_points(m)
        for pt in cat:
            for v in pt.vectors():
                if is_admissible(v):
                    assert point_through(v) == pt
    with pytest.raises(ValueError):
        point_through(_vec(2, 0, 4))


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_points(factorize(12), budget=5)


def test_cyclic_submodule_examples():
    m = factorize(4)
    assert cyclic_submodule(Vec2(1, 2, m)) == {
        Vec2(0, 0, m), Vec2(1, 2, m), Vec2(2, 0, m), Vec2(3, 2, m)
    }
    assert cyclic_submodule(Vec2(0, 0, m)) == {Vec2(0, 0, m)}
    assert cyclic_submodule(Vec2(2, 0, m)) == {Vec2(0, 0, m), Vec2(2, 0, m)}


@pytest.mark.parametrize("d", [4, 6, 9, 12])
def test_cyclic_submodule_size(d):
    m = factorize(d)
    for b in range(d):
        for c in range(d):
            v = Vec2(b, c, m)
            orbit = cyclic_submodule(v)
            assert d % len(orbit) == 0
            assert (len(orbit) == d) == is_admissible(v)


def test_points_through_counterexample_vector():
    got = points_through(_vec(2, 0, 4))
    assert [pt.generator.pair for pt in got] == [(1, 0), (1, 2)]


def test_points_through_zero_vector():
    assert len(points_through(_vec(0, 0, 4))) == 6


def test_points_through_agrees_with_count():
    for d in (8, 12, 18):
        m = factorize(d)
        cat = enumerate_points(m)
        for b in range(d):
            for c in range(d):
                v = Vec2(b, c, m)
                assert len(points_through(v, cat)) == count_points_through(v)


def test_count_points_through_examples():
    assert count_points_through(_vec(2, 0, 4)) == 2
    assert count_points_through(_vec(0, 0, 12)) == 24
    assert count_points_through(_vec(4, 6, 12)) == 2
    # zero component mod 3, degree-1 component mod 4: 2 * (3 + 1)
    assert count_points_through(_vec(6, 0, 12)) == 8


def test_union_counterexample():
    m = factorize(4)
    v = Vec2(2, 0, m)
    union = union_of_points(v)
    assert union == {
        Vec2(0, 0, m), Vec2(1, 0, m), Vec2(2, 0, m), Vec2(3, 0, m),
        Vec2(1, 2, m), Vec2(3, 2, m),
    }
    perp = perp_set(v)
    assert Vec2(2, 2, m) in perp
    assert Vec2(2, 2, m) not in union
    assert union < perp


def test_union_admissible_equals_perp():
    m = factorize(4)
    v = Vec2(1, 0, m)
    union = union_of_points(v)
    assert union == perp_set(v)
    assert len(union) == 4


def test_union_size_examples():
    assert union_size(_vec(2, 0, 4)) == 6
    assert union_size(_vec(1, 0, 8)) == 8
    assert union_size(_vec(6, 0, 12)) == 54
    assert union_size(_vec(4, 6, 12)) == 18
    assert union_size(_vec(3, 3, 9)) == 21
    assert union_size(_vec(2, 4, 8)) == 12
    assert union_size(_vec(6, 3, 12)) == 36


def test_union_size_rejects_zero():
    with pytest.raises(ZeroVectorError):
        union_size(_vec(0, 0, 12))


@pytest.mark.parametrize("d", list(range(2, 25)))
def test_union_size_vs_enumeration(d):
    m = factorize(d)
    cat = enumerate_points(m)
    for b in range(d):
        for c in range(d):
            if b == 0 and c == 0:
                continue
            v = Vec2(b, c, m)
            assert union_size(v) == len(union_of_points(v, cat))


def test_union_equals_perp_examples():
    assert not union_equals_perp(_vec(2, 0, 4))
    assert union_equals_perp(_vec(0, 0, 12))
    assert union_equals_perp(_vec(1, 7, 12))
    # nonzero, non-admissible, but still exhausts its perp: the mod-3
    # component is zero while the mod-4 component is admissible
    assert union_equals_perp(_vec(6, 3, 12))
    assert union_size(_vec(6, 3, 12)) == 36


@pytest.mark.parametrize("d", list(range(2, 25)))
def test_union_equals_perp_vs_enumeration(d):
    m = factorize(d)
    cat = enumerate_points(m)
    for b in range(d):
        for c in range(d):
            v = Vec2(b, c, m)
            assert union_equals_perp(v) == (union_of_points(v, cat) == perp_set(v))


@pytest.mark.parametrize("d", list(range(2, 31)))
def test_squarefree_dichotomy_small(d):
    m = factorize(d)
    all_nonzero_equal = all(
        union_equals_perp(Vec2(b, c, m))
        for b in range(d)
        for c in range(d)
        if (b, c) != (0, 0)
    )
    assert all_nonzero_equal == m.is_squarefree


def test_line_cardinality_formula():
    assert line_cardinality(factorize(2)) == 3
    assert line_cardinality(factorize(4)) == 6
    assert line_cardinality(factorize(12)) == 24
    assert line_cardinality(factorize(60)) == 144
    prod = 1
    for p, e in factorize(360).factors:
        prod *= p**e + p ** (e - 1)
    assert line_cardinality(factorize(360)) == prod


def test_union_generates_perp_spot():
    """The union spans the whole perp as a submodule even when unequal."""
    for d, (b, c) in [(4, (2, 0)), (8, (2, 4)), (9, (3, 3)), (12, (6, 0))]:
        m = factorize(d)
        v = Vec2(b, c, m)
        union = union_of_points(v)
        perp = perp_set(v)
        span = set(union)
        frontier = True
        while frontier:
            frontier = False
            for x in list(span):
                for y in list(span):
                    s = Vec2((x.b + y.b) % d, (x.c + y.c) % d, m)
                    if s not in span:
                        span.add(s)
                        frontier = True
        assert span == perp
