"""Prime splitting, unique factorization, and residue-field arithmetic."""

import json
import random

import pytest

from cubesum.eisenstein import BETA, EisensteinInt, ONE, UNITS, W, is_primary
from cubesum.factorization import (
    classify_rational_prime,
    factor,
    factor_int,
    inert_pow,
    inert_units,
    is_cube_mod_p,
    is_prime,
    multiplicative_order,
    residue_split,
    split_prime,
)


def E(a, b=0):
    return EisensteinInt(a, b)


class TestIsPrime:
    def test_small(self):
        assert is_prime(2)
        assert is_prime(73)
        assert is_prime(307)
        assert not is_prime(1)
        assert not is_prime(561)  # Carmichael

    def test_against_sieve(self):
        limit = 2000
        sieve = [True] * limit
        sieve[0] = sieve[1] = False
        for i in range(2, limit):
            if sieve[i]:
                for j in range(i * i, limit, i):
                    sieve[j] = False
        for n in range(limit):
            assert is_prime(n) == sieve[n], n

    def test_large(self):
        assert is_prime(10**12 + 39)
        assert not is_prime(10**12 + 37)


class TestFactorInt:
    def test_round_trip_soak(self):
        rng = random.Random(13)
        for _ in range(300):
            n = rng.randint(2, 10**12)
            f = factor_int(n)
            prod = 1
            for p, e in f.items():
                assert is_prime(p)
                prod *= p**e
            assert prod == n

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_int(0)


class TestClassifyRationalPrime:
    def test_inert(self):
        assert classify_rational_prime(5).tag == "inert"
        assert classify_rational_prime(2).tag == "inert"

    def test_ramified(self):
        assert classify_rational_prime(3).tag == "ramified"

    def test_split_7(self):
        cls = classify_rational_prime(7)
        assert cls.tag == "split"
        assert cls.pi == E(1, 3)  # = 2u - v, the primary factor with b > 0
        assert cls.pi.norm() == 7
        assert is_primary(cls.pi)

    def test_not_prime(self):
        with pytest.raises(ValueError):
            classify_rational_prime(6)

    def test_split_factor_properties(self):
        for p in (7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103):
            pi, pi_bar = split_prime(p)
            assert pi * pi_bar == E(p)
            assert pi.norm() == pi_bar.norm() == p
            assert is_primary(pi) and is_primary(pi_bar)
            assert pi.b > 0 > pi_bar.b
            # not associates: dividing them never gives a unit
            assert not any(pi == zeta * pi_bar for zeta in UNITS)

    def test_memo_is_a_pure_cache(self):
        warm = split_prime(151)
        split_prime.cache_clear()
        assert split_prime(151) == warm


class TestFactor:
    def test_eighteen_w(self):
        f = factor(E(0, 18))  # 18 = (2·beta)·beta³ times the unit w
        assert f.unit == W
        assert f.factors == ((BETA, 4), (E(2), 1))
        assert f.value() == E(0, 18)

    def test_unit_input(self):
        f = factor(W)
        assert f.unit == W and f.factors == ()

    def test_seven_splits(self):
        f = factor(E(7))
        assert f.unit == ONE
        assert len(f.factors) == 2
        (q1, e1), (q2, e2) = f.factors
        assert e1 == e2 == 1 and q1.norm() == q2.norm() == 7
        assert not any(q1 == zeta * q2 for zeta in UNITS)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(E(0))

    def test_round_trip_soak(self):
        rng = random.Random(14)
        checked = 0
        while checked < 500:
            x = E(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
            if x.is_zero():
                continue
            checked += 1
            f = factor(x)
            assert f.value() == x
            norms = [irr.norm() for irr, _ in f.factors]
            assert norms == sorted(norms)

    def test_canonical_under_unit_twist(self):
        rng = random.Random(15)
        for _ in range(200):
            x = E(rng.randint(-500, 500), rng.randint(-500, 500))
            if x.is_zero():
                continue
            base = factor(x).factors
            for zeta in UNITS:
                assert factor(zeta * x).factors == base

    def test_json_shape(self):
        doc = json.loads(factor(E(7)).to_json())
        assert set(doc) == {"unit", "factors"}
        assert all(set(f) == {"irr", "exp"} for f in doc["factors"])


class TestResidueSplit:
    def test_w_image_mod_7(self):
        c = residue_split(W, E(1, 3), 7)
        assert c == 2
        assert (c * c + c + 1) % 7 == 0

    def test_pi_and_one(self):
        for p in (7, 13, 61):
            pi, _ = split_prime(p)
            assert residue_split(pi, pi, p) == 0
            assert residue_split(ONE, pi, p) == 1

    def test_ring_homomorphism_soak(self):
        rng = random.Random(16)
        for p in (7, 13, 31, 61):
            pi, _ = split_prime(p)
            for _ in range(200):
                x = E(rng.randint(-99, 99), rng.randint(-99, 99))
                y = E(rng.randint(-99, 99), rng.randint(-99, 99))
                assert residue_split(x + y, pi, p) == (
                    residue_split(x, pi, p) + residue_split(y, pi, p)) % p
                assert residue_split(x * y, pi, p) == (
                    residue_split(x, pi, p) * residue_split(y, pi, p)) % p


class TestCubesModP:
    def test_known_values(self):
        assert is_cube_mod_p(3, 61)       # 3^20 = 1 mod 61
        assert not is_cube_mod_p(3, 79)   # 3^26 != 1 mod 79
        assert is_cube_mod_p(8, 13)       # a literal cube

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_cube_mod_p(61, 61)

    def test_wrong_residue_class_rejected(self):
        with pytest.raises(ValueError):
            is_cube_mod_p(2, 5)

    def test_literal_cubes_soak(self):
        rng = random.Random(17)
        for p in (7, 13, 31, 61, 73):
            for _ in range(100):
                x = rng.randint(1, p - 1)
                assert is_cube_mod_p(x**3 % p, p)


class TestInertResidueField:
    def test_unit_group_of_2(self):
        units = inert_units(2)
        assert len(units) == 3  # group of order 2² - 1
        for x in units:
            assert multiplicative_order(x, 2) in (1, 3)

    def test_no_order_nine_mod_5(self):
        units = inert_units(5)
        assert len(units) == 24
        assert all(multiplicative_order(x, 5) != 9 for x in units)

    def test_lagrange(self):
        for p in (2, 5, 11):
            assert inert_pow(W, p * p - 1, p) == ONE
