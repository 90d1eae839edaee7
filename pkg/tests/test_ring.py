import math
import random

import pytest

from quditline.errors import NonUnitError
from quditline.ring import (
    Modulus,
    annihilator,
    crt_combine,
    crt_split,
    factorize,
    inverse,
    is_unit,
    power_rep,
)


def test_factorize_examples():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(7).factors == ((7, 1),)
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))


def test_factorize_multiplies_back():
    rng = random.Random(7)
    for _ in range(200):
        d = rng.randrange(2, 100000)
        m = factorize(d)
        prod = 1
        for p, e in m.factors:
            prod *= p**e
        assert prod == d
        assert [p for p, _ in m.factors] == sorted({p for p, _ in m.factors})


def test_factorize_rejects_small():
    for bad in (1, 0, -5):
        with pytest.raises(ValueError):
            factorize(bad)


def test_modulus_validates():
    with pytest.raises(ValueError):
        Modulus(12, ((2, 2),))  # product mismatch
    with pytest.raises(ValueError):
        Modulus(12, ((3, 1), (2, 2)))  # primes not ascending
    assert factorize(12).describe() == "12 = 2^2 * 3"
    assert factorize(30).is_squarefree
    assert not factorize(12).is_squarefree


def test_prime_powers():
    assert factorize(360).prime_powers == (8, 9, 5)
    assert factorize(7).num_components == 1


def test_is_unit_examples():
    assert is_unit(3, factorize(4))
    assert not is_unit(2, factorize(4))
    assert not is_unit(0, factorize(5))


def test_is_unit_range_check():
    with pytest.raises(ValueError):
        is_unit(4, factorize(4))
    with pytest.raises(ValueError):
        is_unit(-1, factorize(4))


@pytest.mark.parametrize("q", [4, 8, 16, 27, 25, 49, 121])
def test_is_unit_prime_power_characterization(q):
    # over Z_{p^e} the non-units are exactly the multiples of p
    m = factorize(q)
    p = m.factors[0][0]
    for a in range(q):
        assert is_unit(a, m) == (a % p != 0)


def test_inverse_examples():
    assert inverse(3, factorize(4)) == 3
    assert inverse(5, factorize(12)) == 5
    assert inverse(7, factorize(360)) == 103


def test_inverse_contract_exhaustive():
    for d in (2, 3, 4, 12, 30, 360):
        m = factorize(d)
        for a in range(d):
            if math.gcd(a, d) == 1:
                assert a * inverse(a, m) % d == 1
            else:
                with pytest.raises(NonUnitError):
                    inverse(a, m)


def test_power_rep_examples():
    assert (power_rep(2, 2, 2).unit, power_rep(2, 2, 2).alpha) == (1, 1)
    assert (power_rep(0, 2, 2).unit, power_rep(0, 2, 2).alpha) == (1, 2)
    assert (power_rep(12, 2, 4).unit, power_rep(12, 2, 4).alpha) == (3, 2)


@pytest.mark.parametrize("p,e", [(2, 12), (3, 7), (5, 4), (7, 3), (11, 3), (13, 2)])
def test_power_rep_exhaustive(p, e):
    # unit * p^alpha == a with alpha minimal, for every residue of the ring
    q = p**e
    for a in range(q):
        rep = power_rep(a, p, e)
        assert 0 <= rep.alpha <= e
        assert rep.unit % p != 0
        assert rep.unit * p**rep.alpha % q == a
        if a == 0:
            assert rep.alpha == e and rep.unit == 1
        else:
            assert a % p**rep.alpha == 0
            assert a % p ** (rep.alpha + 1) != 0


def test_annihilator_examples():
    assert annihilator(1, 2, 2) == {0, 2}
    assert annihilator(0, 3, 2) == {0}
    assert annihilator(2, 2, 2) == {0, 1, 2, 3}


@pytest.mark.parametrize("p,e", [(2, 4), (3, 3), (5, 2)])
def test_annihilator_contract(p, e):
    q = p**e
    for alpha in range(e + 1):
        ann = annihilator(alpha, p, e)
        assert len(ann) == p**alpha
        for x in range(q):
            assert (x * p**alpha % q == 0) == (x in ann)


def test_annihilator_range():
    with pytest.raises(ValueError):
        annihilator(3, 2, 2)


def test_crt_split_examples():
    assert crt_split(7, factorize(12)) == (3, 1)
    assert crt_split(0, factorize(12)) == (0, 0)
    assert crt_split(11, factorize(60)) == (3, 2, 1)


def test_crt_combine_examples():
    assert crt_combine((3, 1), factorize(12)) == 7
    assert crt_combine((0, 0, 0), factorize(60)) == 0
    assert crt_combine((1, 1, 1), factorize(60)) == 1


@pytest.mark.parametrize(
    "d", list(range(2, 65)) + [360, 1024, 2310, 4096, 9999, 10000]
)
def test_crt_round_trip_exhaustive(d):
    m = factorize(d)
    for x in range(d):
        t = crt_split(x, m)
        assert all(0 <= r < q for r, q in zip(t, m.prime_powers))
        assert crt_combine(t, m) == x


def test_crt_split_is_ring_homomorphism():
    rng = random.Random(11)
    for d in (12, 60, 360, 2310):
        m = factorize(d)
        qs = m.prime_powers
        for _ in range(25000):
            x = rng.randrange(d)
            y = rng.randrange(d)
            sx, sy = crt_split(x, m), crt_split(y, m)
            assert crt_split((x + y) % d, m) == tuple(
                (a + b) % q for a, b, q in zip(sx, sy, qs)
            )
            assert crt_split(x * y % d, m) == tuple(
                a * b % q for a, b, q in zip(sx, sy, qs)
            )


def test_crt_combine_rejects_bad_tuples():
    m = factorize(12)
    with pytest.raises(ValueError):
        crt_combine((3,), m)
    with pytest.raises(ValueError):
        crt_combine((4, 1), m)
