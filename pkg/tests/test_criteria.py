"""Condition (I) and the Exceptional A / B predicates, with dual paths."""

import json

import pytest

from cubesum.criteria import (
    condition_I,
    condition_I_table,
    exceptional_A,
    exceptional_A_set,
    exceptional_B,
    exceptional_B_set,
    first_exceptional_A_1mod9,
    prime_report,
    split_primes_upto,
)
from cubesum.eisenstein import UNITS
from cubesum.factorization import is_cube_mod_p, residue_split, split_prime


class TestConditionI:
    def test_easy_cases(self):
        # a+b is 1 for p = 7 and 61, -8 = (-2)³ for 43
        for p in (7, 43, 61):
            assert condition_I(p)

    def test_31_via_4_equals_minus_27(self):
        assert (4 + 27) % 31 == 0
        assert condition_I(31)

    def test_79_and_97(self):
        assert condition_I(79)
        assert condition_I(97)

    def test_requires_split_prime(self):
        with pytest.raises(ValueError):
            condition_I(5)
        with pytest.raises(ValueError):
            condition_I(3)

    def test_dual_paths_agree_below_5000(self):
        # the residue-field path and the a+b trace shortcut are asserted
        # equal inside condition_I; this drives both on every split prime
        for p in split_primes_upto(4999):
            assert condition_I(p), f"condition (I) ought to hold at {p}"


class TestExceptionalA:
    def test_61(self):
        assert exceptional_A(61) == (True, (1, 1))  # 244 = 1² + 243

    def test_193(self):
        assert exceptional_A(193) == (True, (23, 1))  # 772 = 23² + 243

    def test_79_and_97_negative(self):
        assert exceptional_A(79) == (False, None)
        assert exceptional_A(97) == (False, None)

    def test_witness_equation(self):
        for p in exceptional_A_set(600):
            flag, (x, y) = exceptional_A(p)
            assert flag and x**2 + 243 * y**2 == 4 * p

    def test_set_below_200(self):
        assert exceptional_A_set(200) == [61, 67, 73, 103, 151, 193]

    def test_mod9_path_uses_all_associates(self):
        # an associate congruent to a rational integer mod 9 exists exactly
        # for the Exceptional A primes
        for p in (61, 67, 73, 79, 97, 103):
            pi, _ = split_prime(p)
            any_assoc = any((zeta * pi).b % 9 == 0 for zeta in UNITS)
            assert any_assoc == exceptional_A(p)[0]


class TestExceptionalB:
    def test_61_67_73(self):
        assert exceptional_B(61)
        assert exceptional_B(67)
        assert exceptional_B(73)

    def test_7_is_not(self):
        # oracle: the cube subgroup of (Z/7)* is {1, 6}; 3 is outside
        cubes = {pow(x, 3, 7) for x in range(1, 7)}
        assert 3 not in cubes
        assert not exceptional_B(7)

    def test_set_below_100(self):
        assert exceptional_B_set(100) == [61, 67, 73]

    def test_equivalence_with_A_below_5000(self):
        for p in split_primes_upto(4999):
            assert exceptional_A(p)[0] == exceptional_B(p), p


class TestFirstFiveMod9:
    def test_values(self):
        assert first_exceptional_A_1mod9(5) == [73, 271, 307, 523, 577]


class TestConditionITable:
    def test_paper_range(self):
        rows = condition_I_table(73)
        assert [r["p"] for r in rows] == [7, 13, 19, 31, 37, 43, 61, 67, 73]
        assert [r["a+b"] for r in rows] == [1, -5, 7, 4, -11, -8, 1, -5, 7]
        assert all(r["cube"] for r in rows)

    def test_trace_consistency(self):
        # a + b must be a cube mod p exactly when conj(pi) reduces to a cube
        for row in condition_I_table(200):
            p = row["p"]
            pi, pi_bar = split_prime(p)
            via_residue = is_cube_mod_p(residue_split(pi_bar, pi, p), p)
            assert via_residue == is_cube_mod_p((row["a"] + row["b"]) % p, p)


class TestPrimeReport:
    def test_61(self):
        rep = prime_report(61)
        assert rep.mod9 == 7
        assert rep.condition_I and rep.exceptional_A and rep.exceptional_B
        assert rep.exceptional_A_witness == (1, 1)

    def test_19(self):
        rep = prime_report(19)
        assert rep.mod9 == 1
        assert rep.condition_I
        assert not rep.exceptional_A and not rep.exceptional_B

    def test_2_has_no_split_fields(self):
        rep = prime_report(2)
        assert rep.tag == "inert"
        assert rep.pi is None
        doc = json.loads(rep.to_json())
        assert set(doc) == {"p", "mod9"}

    def test_json_shape_split(self):
        doc = json.loads(prime_report(61).to_json())
        assert doc == {
            "p": 61,
            "mod9": 7,
            "conditionI": True,
            "excA": True,
            "excA_witness": [1, 1],
            "excB": True,
            "pi": "4+9*w",
        }
