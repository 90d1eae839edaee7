import itertools
import random

import pytest

from quditline.errors import BudgetExceededError, ModulusMismatchError
from quditline.line import enumerate_points
from quditline.pauli import (
    PauliOp,
    center_size,
    commutator,
    commutes,
    commuting_count,
    component_layer_count,
    group_order,
    inverse,
    layer_table,
    maximal_commuting_sets,
    multiply,
    pg_label,
)
from quditline.ring import factorize
from quditline.symplectic import Degree, Vec2, form


def _op(a, b, c, d):
    return PauliOp(a % d, b % d, c % d, factorize(d))


def _random_op(rng, m):
    return PauliOp(
        rng.randrange(m.d), rng.randrange(m.d), rng.randrange(m.d), m
    )


def test_multiply_examples():
    assert multiply(_op(0, 1, 0, 2), _op(0, 0, 1, 2)) == _op(0, 1, 1, 2)
    assert multiply(_op(0, 0, 1, 2), _op(0, 1, 0, 2)) == _op(1, 1, 1, 2)
    assert multiply(_op(1, 2, 3, 4), _op(2, 1, 1, 4)) == _op(2, 3, 0, 4)


def test_multiply_mismatched_moduli():
    with pytest.raises(ModulusMismatchError):
        multiply(_op(0, 1, 0, 2), _op(0, 1, 0, 3))


def test_identity_and_inverse_exhaustive():
    for d in (2, 3, 4, 6, 8, 9, 12):
        m = factorize(d)
        ident = PauliOp.identity(m)
        for a, b, c in itertools.product(range(d), repeat=3):
            g = PauliOp(a, b, c, m)
            assert multiply(g, ident) == g
            assert multiply(ident, g) == g
            assert multiply(g, inverse(g)) == ident
            assert multiply(inverse(g), g) == ident


@pytest.mark.parametrize("d", [4, 12])
def test_multiply_associative(d):
    m = factorize(d)
    rng = random.Random(d)
    for _ in range(100000):
        g, h, k = (_random_op(rng, m) for _ in range(3))
        assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))


def test_commutator_examples():
    # [Z, X] over d=2 carries the phase flip
    assert commutator(_op(0, 0, 1, 2), _op(0, 1, 0, 2)) == _op(1, 0, 0, 2)
    g = _op(2, 2, 1, 4)
    assert commutator(g, g) == _op(0, 0, 0, 4)
    assert commutator(_op(2, 2, 1, 4), _op(0, 1, 3, 4)) == _op(3, 0, 0, 4)


@pytest.mark.parametrize("d", [3, 4, 6, 12])
def test_commutator_matches_product_chain(d):
    m = factorize(d)
    rng = random.Random(17 * d)
    for _ in range(5000):
        g = _random_op(rng, m)
        h = _random_op(rng, m)
        chain = multiply(multiply(multiply(g, h), inverse(g)), inverse(h))
        assert commutator(g, h) == chain


@pytest.mark.parametrize("d", list(range(2, 17)))
def test_commutator_iff_form_zero(d):
    m = factorize(d)
    for b, c, bp, cp in itertools.product(range(d), repeat=4):
        g = PauliOp(0, b, c, m)
        h = PauliOp(0, bp, cp, m)
        comm = commutator(g, h)
        assert (comm == PauliOp.identity(m)) == (form(g.vector, h.vector) == 0)
        assert commutes(g, h) == (comm.a == 0)
        assert comm.b == 0 and comm.c == 0


def test_phases_never_affect_commutation():
    m = factorize(6)
    rng = random.Random(23)
    for _ in range(2000):
        g = _random_op(rng, m)
        h = _random_op(rng, m)
        g2 = PauliOp(rng.randrange(6), g.b, g.c, m)
        h2 = PauliOp(rng.randrange(6), h.b, h.c, m)
        assert commutator(g, h) == commutator(g2, h2)


def test_commuting_count_examples():
    m = factorize(12)
    for a in range(12):
        assert commuting_count(PauliOp(a, 0, 0, m)) == 1728
    assert commuting_count(_op(0, 1, 5, 12)) == 144
    assert commuting_count(_op(3, 1, 0, 12)) == 144
    assert commuting_count(_op(0, 2, 0, 4)) == 32


def test_commuting_count_brute_force_d6():
    d = 6
    m = factorize(d)
    for b in range(d):
        for c in range(d):
            perp_n = sum(
                (c * x - y * b) % d == 0 for x in range(d) for y in range(d)
            )
            for a in (0, 1, d - 1):
                assert commuting_count(PauliOp(a, b, c, m)) == d * perp_n


def test_group_constants():
    assert group_order(factorize(12)) == 1728
    assert center_size(factorize(12)) == 12


def test_layer_table_d12():
    table = layer_table(factorize(12))
    got = {row.degree.deltas: row.vector_count for row in table}
    assert got == {(0, 0): 96, (1, 0): 24, (2, 0): 8, (0, 1): 12, (1, 1): 3, (2, 1): 1}
    assert all(row.operator_count == 12 * row.vector_count for row in table)
    assert table.total_vectors == 144
    assert table.total_operators == 1728


def test_layer_table_permuted_order_d12():
    table = layer_table(factorize(12))
    keyed = table.permuted((1, 0))
    assert [k for k, _ in keyed] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (1, 2)]
    assert [r.vector_count for _, r in keyed] == [96, 24, 12, 8, 3, 1]


def test_layer_table_prime_and_d8():
    for p in (2, 3, 5, 7):
        table = layer_table(factorize(p))
        assert {r.degree.deltas: r.vector_count for r in table} == {
            (0,): p * p - 1,
            (1,): 1,
        }
    table8 = layer_table(factorize(8))
    assert {r.degree.deltas: r.vector_count for r in table8} == {
        (0,): 48, (1,): 12, (2,): 3, (3,): 1
    }


def test_layer_table_center_row():
    for d in (4, 12, 30):
        m = factorize(d)
        table = layer_table(m)
        top = tuple(e for _, e in m.factors)
        assert table.row(top).vector_count == 1


def test_layer_table_permuted_validates():
    table = layer_table(factorize(12))
    with pytest.raises(ValueError):
        table.permuted((0, 0))
    with pytest.raises(KeyError):
        table.row((9, 9))


@pytest.mark.parametrize("d", list(range(2, 201)))
def test_layer_counts_match_degree_histogram(d):
    """The per-component count formula versus a from-scratch valuation census."""
    m = factorize(d)
    hist: dict[tuple[int, ...], int] = {}
    for b in range(d):
        for c in range(d):
            deltas = []
            for p, e in m.factors:
                q = p**e
                delta = 0
                bb, cc = b % q, c % q
                while delta < e and bb % p == 0 and cc % p == 0:
                    bb //= p
                    cc //= p
                    delta += 1
                deltas.append(delta)
            key = tuple(deltas)
            hist[key] = hist.get(key, 0) + 1
    table = layer_table(m)
    assert {r.degree.deltas: r.vector_count for r in table} == hist


def test_component_layer_count_validates():
    with pytest.raises(ValueError):
        component_layer_count(2, 2, 3)
    assert component_layer_count(2, 2, 2) == 1
    assert component_layer_count(3, 1, 0) == 8


def test_pg_label_examples():
    assert pg_label(Degree((1, 0)), factorize(6)) == (1, 0)
    assert pg_label(Degree((0, 0)), factorize(6)) is None
    assert pg_label(Degree((0, 1)), factorize(12)) is None
    assert pg_label(Degree((1,)), factorize(5)) is None


def test_pg_label_covers_binary_space():
    # squarefree d with r factors: non-admissible layers biject with the
    # 2^r - 1 nonzero binary tuples
    m = factorize(30)
    labels = [r.pg_label for r in layer_table(m) if r.pg_label is not None]
    assert sorted(labels) == sorted(
        t for t in itertools.product((0, 1), repeat=3) if any(t)
    )


def test_maximal_sets_d2():
    sets = maximal_commuting_sets(factorize(2))
    assert len(sets) == 3
    assert all(s.is_free_cyclic for s in sets)
    assert sorted(s.pairs() for s in sets) == [
        ((0, 0), (0, 1)), ((0, 0), (1, 0)), ((0, 0), (1, 1))
    ]


def test_maximal_sets_d2_against_subset_search():
    """Independent oracle: scan all 2^4 subsets of Z_2^2 for maximal cliques."""
    d = 2
    vectors = [(b, c) for b in range(d) for c in range(d)]
    perp = lambda v, w: (v[1] * w[0] - w[1] * v[0]) % d == 0
    cliques = [
        set(sub)
        for r in range(1, 5)
        for sub in itertools.combinations(vectors, r)
        if all(perp(v, w) for v, w in itertools.combinations(sub, 2))
    ]
    maximal = [
        s for s in cliques
        if not any(s < t for t in cliques)
    ]
    got = [set(s.pairs()) for s in maximal_commuting_sets(factorize(2))]
    assert sorted(map(sorted, got)) == sorted(map(sorted, maximal))


def test_maximal_sets_d4():
    sets = maximal_commuting_sets(factorize(4))
    assert len(sets) == 7
    quad = next(s for s in sets if s.pairs() == ((0, 0), (0, 2), (2, 0), (2, 2)))
    assert not quad.is_free_cyclic
    free = [s for s in sets if s.is_free_cyclic]
    assert len(free) == 6
    point_sets = {
        tuple(sorted(pt.vectors(), key=lambda v: v.pair))
        for pt in enumerate_points(factorize(4))
    }
    for s in free:
        assert s.vectors in point_sets


@pytest.mark.parametrize("d", [2, 3, 4, 6, 9, 12])
def test_maximal_sets_are_maximal_and_complete(d):
    m = factorize(d)
    sets = maximal_commuting_sets(m)
    zero = Vec2(0, 0, m)
    all_vectors = [Vec2(b, c, m) for b in range(d) for c in range(d)]
    seen = set()
    for s in sets:
        assert s.pairs() not in seen
        seen.add(s.pairs())
        members = set(s.vectors)
        assert zero in members
        for v in s.vectors:
            for w in s.vectors:
                assert form(v, w) == 0
        for w in all_vectors:
            if w not in members:
                assert any(form(v, w) != 0 for v in members), (
                    f"{s.pairs()} extendable by {w.pair}"
                )
    # every projective point shows up as a maximal set
    for pt in enumerate_points(m):
        key = tuple(sorted(v.pair for v in pt.vectors()))
        assert any(s.pairs() == key for s in sets)


def test_maximal_sets_budget():
    with pytest.raises(BudgetExceededError):
        maximal_commuting_sets(factorize(65))


def test_pauliop_validates():
    with pytest.raises(ValueError):
        PauliOp(4, 0, 0, factorize(4))
    g = _op(3, 2, 1, 4)
    assert g.vector == Vec2(2, 1, factorize(4))
    assert str(g) == "w^3 X^2 Z^1"
    assert PauliOp(1, 0, 0, factorize(4)).is_central
