"""Acceptance criteria, runnable end to end.

Each criterion regenerates its numbers from first principles and diffs them
against the expected constants below; nothing is read back from caches or
fixtures.  The `cubesum verify` command and the pytest acceptance module
both drive this registry, printing one pass/fail line per criterion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .classifier import classify, match_rule, canonicalize
from .constructors import (
    descent_step,
    is_cube,
    lucas_pair,
    lucas_witness,
    reduce_triple,
    triple_from_solution,
    Triple,
    cube_triple_structure,
)
from .criteria import (
    condition_I,
    condition_I_table,
    exceptional_A,
    exceptional_A_set,
    exceptional_B,
    exceptional_B_set,
    first_exceptional_A_1mod9,
    split_primes_upto,
)
from .eisenstein import BETA, EisensteinInt, KElement, V, W, mod9_class, ord_beta
from .factorization import factor
from .search import (
    SearchBudget,
    cube_ap_exhaust,
    flt3_exhaust,
    mordell_check,
    search_rational,
)


class VerificationError(AssertionError):
    """A criterion failed; the message carries the diff."""


# Expected constants: every value below is either classical bookkeeping or
# was computed by the independent oracles in the test suite and frozen.
EXPECTED = {
    "condition_I_a_plus_b": {7: 1, 13: -5, 19: 7, 31: 4, 37: -11, 43: -8, 61: 1, 67: -5, 73: 7},
    "excA_200": [61, 67, 73, 103, 151, 193],
    "excB_100": [61, 67, 73],
    "excA_1mod9_first5": [73, 271, 307, 523, 577],
    "lucas_64_m3": (190171, -295579),
    "witness_183": ("-190171/46956", "295579/46956"),
    "witness_6": ("37/21", "17/21"),
    "witness_18u": ("3+2*w", "1"),
    "witness_1_9w": ("(2-3*w)/2", "(-3-6*w)/2"),
    "mordell_rational": {("-1", "0"), ("0", "1"), ("0", "-1"), ("2", "3"), ("2", "-3")},
}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationError(message)


def _pair_strs(pair) -> tuple[str, str]:
    return (str(pair[0]), str(pair[1]))


# -- criterion bodies ---------------------------------------------------------


def criterion_1_euler_legendre() -> str:
    v = classify(2, "Q")
    _check(v.status == "OnlyTrivial", f"classify(2) gave {v.status}")
    _check([_pair_strs(p) for p in v.trivial_solutions] == [("1", "1")],
           f"classify(2) trivial list {v.trivial_solutions}")
    for m, rule in ((3, "Theorem 1.7"), (4, "Theorem 1.3"), (5, "Theorem 1.3")):
        v = classify(m, "Q")
        _check(v.status == "NoSolutions" and v.rule == rule,
               f"classify({m}) gave {v.status} [{v.rule}], wanted NoSolutions [{rule}]")
    v = classify(6, "Q", SearchBudget(denom=25))
    _check(v.status == "HasSolutions" and _pair_strs(v.witness) == EXPECTED["witness_6"],
           f"classify(6) gave {v.status} witness {v.witness}")
    hits = {_pair_strs(p) for p in search_rational(7, 5)}
    _check({("2", "-1"), ("4/3", "5/3")} <= hits, f"search_rational(7,5) = {hits}")
    return "2 -> OnlyTrivial{(1,1)}; 3,4,5 -> NoSolutions; 6 -> (37/21,17/21); 7 -> (2,-1),(4/3,5/3)"


def criterion_2_kummer_flt3() -> str:
    bad = flt3_exhaust(30)
    _check(bad == [], f"FLT(3) counterexample?! {bad}")
    v = classify(1, "K")
    _check(v.status == "OnlyTrivial" and len(v.trivial_solutions) == 6,
           f"classify(1, K) gave {v.status} with {v.trivial_solutions}")
    pairs = {_pair_strs(p) for p in v.trivial_solutions}
    axis = {("1", "0"), ("w", "0"), ("-1-w", "0"), ("0", "1"), ("0", "w"), ("0", "-1-w")}
    _check(pairs == axis, f"axis solutions {pairs}")
    return "flt3_exhaust(30) empty; classify(1, K) lists the six axis solutions"


def criterion_3_lucas() -> str:
    x, y = lucas_pair(64, -3)
    _check((x, y) == EXPECTED["lucas_64_m3"], f"lucas_pair(64,-3) = {(x, y)}")
    _check(x**3 + y**3 == -183 * 46956**3, "x³+y³ != (-183)·46956³")
    for (a, b), m in (((-3, -61), 183), ((-3, -64), 201), ((-8, -73), 219)):
        wx, wy = lucas_witness(a, b, m)
        _check(wx**3 + wy**3 == KElement(m), f"lucas witness for {m} fails")
    return "lucas_pair(64,-3)=(190171,-295579); witnesses for 183, 201, 219 re-verify"


def criterion_4_condition_I_table() -> str:
    rows = condition_I_table(73)
    got = {row["p"]: row["a+b"] for row in rows}
    _check(got == EXPECTED["condition_I_a_plus_b"],
           f"a+b table mismatch: {got} != {EXPECTED['condition_I_a_plus_b']}")
    _check(all(row["cube"] for row in rows), "condition (I) fails below 73?!")
    return "a+b rows for p <= 73 match: " + ", ".join(
        f"{p}:{s}" for p, s in sorted(got.items()))


def criterion_5_exceptional_sets() -> str:
    got_a = exceptional_A_set(200)
    _check(got_a == EXPECTED["excA_200"], f"ExcA<=200: {got_a}")
    got_b = exceptional_B_set(100)
    _check(got_b == EXPECTED["excB_100"], f"ExcB<=100: {got_b}")
    first5 = first_exceptional_A_1mod9(5)
    _check(first5 == EXPECTED["excA_1mod9_first5"], f"first five 1-mod-9 ExcA: {first5}")
    for p in got_a:
        flag, wit = exceptional_A(p)
        _check(flag and wit is not None and wit[0] ** 2 + 243 * wit[1] ** 2 == 4 * p,
               f"ExcA witness for {p}: {wit}")
    return f"ExcA<=200 {got_a}; ExcB<=100 {got_b}; first five 1 mod 9 {first5}; witnesses verified"


def criterion_6_reciprocity_instances() -> str:
    count = 0
    for p in split_primes_upto(4999):
        _check(condition_I(p), f"condition (I) fails at {p}?!")
        a, _ = exceptional_A(p)  # dual paths hard-assert agreement internally
        b = exceptional_B(p)
        _check(a == b, f"Exceptional A/B disagree at {p}: A={a} B={b}")
        count += 1
    return f"condition (I) and ExcA = ExcB for all {count} split primes below 5000"


THEOREM_GRID = (
    ("5", "K", "NoSolutions", "Theorem 1.3"),
    ("25", "K", "NoSolutions", "Theorem 1.3"),
    ("2*w", "K", "NoSolutions", "Theorem 1.3"),
    ("1+3*w", "K", "NoSolutions", "Theorem 1.4"),
    ("-8-3*w", "K", "NoSolutions", "Theorem 1.4"),      # (1+3w)²
    ("-3-2*w", "K", "NoSolutions", "Theorem 1.4"),      # w·(1+3w)
    ("w", "K", "NoSolutions", "Theorem 1.6"),
    ("3", "K", "NoSolutions", "Theorem 1.7"),
    ("-2-w", "K", "NoSolutions", "Theorem 1.7"),        # w·beta
    ("45", "K", "NoSolutions", "Theorem 2.1"),
    ("1089", "K", "NoSolutions", "Theorem 2.1"),        # 9·11²
    ("7*w", "K", "NoSolutions", "Theorem 2.2"),
    ("49*w", "K", "NoSolutions", "Theorem 2.2"),
    ("13*w", "K", "NoSolutions", "Theorem 2.2"),
    ("21", "K", "NoSolutions", "Theorem 2.3"),
    ("39", "K", "NoSolutions", "Theorem 2.3"),
    ("57", "K", "NoSolutions", "Theorem 2.3"),
    ("93", "K", "NoSolutions", "Theorem 2.3"),
    ("111", "K", "NoSolutions", "Theorem 2.3"),
    ("129", "K", "NoSolutions", "Theorem 2.3"),
    ("147", "K", "NoSolutions", "Theorem 2.3"),         # 3·7²
    ("-2+3*w", "K", "NoSolutions", "Theorem 2.4"),      # primary, norm 19
    ("7+3*w", "K", "NoSolutions", "Theorem 2.4"),       # primary, norm 37
)


def criterion_7_theorem_grid() -> str:
    from .eisenstein import parse_eisenstein

    for text, scope, status, rule in THEOREM_GRID:
        m = parse_eisenstein(text)
        v = classify(m, scope, None)
        _check((v.status, v.rule) == (status, rule),
               f"classify({text}) gave {v.status} [{v.rule}], wanted {status} [{rule}]")
        match_rule(canonicalize(m))  # asserts exactly one rule fires
    return f"{len(THEOREM_GRID)} canonical forms hit exactly the expected theorem"


def criterion_8_associate_asymmetries() -> str:
    v = classify(EisensteinInt(0, 18), "K")  # 18w
    _check(v.status == "HasSolutions" and _pair_strs(v.witness) == EXPECTED["witness_18u"],
           f"classify(18w): {v.status} {v.witness}")
    v = classify(18, "K")
    _check((v.status, v.rule) == ("NoSolutions", "Theorem 2.1"), f"classify(18): {v.status}")
    pi19 = EisensteinInt(-2, 3)
    for unit in (W, V):
        v = classify(unit * pi19, "K")
        _check(v.status == "HasSolutions", f"classify(unit·pi19): {v.status}")
    v = classify(pi19, "K")
    _check((v.status, v.rule) == ("NoSolutions", "Theorem 2.4"), f"classify(pi19): {v.status}")
    v = classify(EisensteinInt(1, 9), "K")
    _check(v.status == "HasSolutions" and _pair_strs(v.witness) == EXPECTED["witness_1_9w"],
           f"classify(1+9w): {v.status} {v.witness}")
    return "18w solvable at (3+2w, 1) while 18 is blocked; u·pi, v·pi solvable while pi is blocked; 1+9w solvable"


def criterion_9_corollary_exhausts() -> str:
    bad = cube_ap_exhaust(1000)
    _check(bad == [], f"cubes in arithmetic progression?! {bad}")
    report = mordell_check(SearchBudget(denom=6, coord=8, relation=1))
    rational = {_pair_strs(p) for p in report.rational_hits}
    _check(rational == EXPECTED["mordell_rational"], f"mordell rational hits {rational}")
    for x, _ in report.eisenstein_hits:
        _check(x**3 in (KElement(-1), KElement(0), KElement(8)), f"mordell K hit {x}")
    return (f"no cube progressions to 1000; y²=x³+1 rational hits "
            f"{sorted(rational)}; all {len(report.eisenstein_hits)} K-hits have x³ in {{-1,0,8}}")


def criterion_10_property_soak() -> str:
    rng = random.Random(20260809)

    def rand_eis(lo=-999, hi=999) -> EisensteinInt:
        return EisensteinInt(rng.randint(lo, hi), rng.randint(lo, hi))

    for _ in range(1000):  # Euclidean bound
        l, m = rand_eis(), rand_eis()
        if m.is_zero():
            continue
        q, r = divmod(l, m)
        _check(l == q * m + r and 3 * r.norm() <= m.norm(), f"divmod({l},{m})")

    for _ in range(500):  # factor round-trip, norms up to ~1e12
        x = EisensteinInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        if x.is_zero():
            continue
        _check(factor(x).value() == x, f"factor round-trip {x}")

    for _ in range(1000):  # ord_beta additivity
        x, y = rand_eis(), rand_eis()
        if x.is_zero() or y.is_zero():
            continue
        _check(ord_beta(x * y) == ord_beta(x) + ord_beta(y), f"ord_beta({x}·{y})")

    for _ in range(1000):  # Lucas polynomial identities (asserted inside)
        lucas_pair(rng.randint(-500, 500), rng.randint(-500, 500))

    count = 0  # classify invariances on a 200-case grid, searches disabled
    while count < 200:
        m = EisensteinInt(rng.randint(-9, 9), rng.randint(-9, 9))
        c = EisensteinInt(rng.randint(-3, 3), rng.randint(-3, 3))
        if m.is_zero() or c.is_zero():
            continue
        count += 1
        v = classify(m, "K", None)
        v2 = classify(m * c**3, "K", None)
        _check((v.status, v.rule) == (v2.status, v2.rule), f"cube-class invariance at {m}, {c}")
        v2 = classify(-m, "K", None)
        _check((v.status, v.rule) == (v2.status, v2.rule), f"sign invariance at {m}")
        v2 = classify(m.conj(), "K", None)
        _check((v.status, v.rule) == (v2.status, v2.rule), f"conjugation invariance at {m}")

    for _ in range(500):  # cubes are ±1 mod 9 away from beta
        wv = rand_eis(-200, 200)
        if wv.is_zero() or BETA.divides(wv):
            continue
        _check(mod9_class(wv**3) in (EisensteinInt(1, 0), EisensteinInt(8, 0)),
               f"cube mod 9 of {wv}")

    for _ in range(300):  # descent product identity A'·B'·C' = -C
        r, s = rand_eis(-20, 20), rand_eis(-20, 20)
        if r.is_zero() or s.is_zero() or (r**3 + s**3).is_zero() or r**3 == s**3:
            continue
        if r.is_unit() and s.is_unit():
            continue
        c = -(r**3) - s**3
        t = reduce_triple(Triple(r**3, s**3, c, c))
        if t.A.is_unit() and t.B.is_unit():
            continue
        stepped = descent_step(t)
        prod = stepped.A * stepped.B * stepped.C
        _check(prod == -t.C or prod * BETA**3 == -t.C, f"descent identity at r={r}, s={s}")

    structured = 0  # cube triples on the [-6,6]² box decompose as (c, cw, cv)
    for pa in range(-6, 7):
        for pb in range(-6, 7):
            a = EisensteinInt.from_uv(pa, pb)
            if a.is_zero():
                continue
            for qa in range(-6, 7):
                for qb in range(-6, 7):
                    b = EisensteinInt.from_uv(qa, qb)
                    c = -a - b
                    if b.is_zero() or c.is_zero():
                        continue
                    prod = a * b * c
                    n = prod.norm()
                    k = round(n ** (1 / 3))
                    if k**3 != n or not is_cube(prod):
                        continue
                    cube_triple_structure(a, b, c)  # raises if not decomposable
                    structured += 1
    _check(structured > 0, "no cube triples found in the box?!")
    return (f"euclidean/factor/ord/lucas/mod-9 soaks passed; classify invariances on 200 cases; "
            f"{structured} box cube-triples decomposed")


CRITERIA: tuple[tuple[int, str, str, Callable[[], str]], ...] = (
    (1, "euler-legendre-verdicts", "quick", criterion_1_euler_legendre),
    (2, "kummer-flt3", "quick", criterion_2_kummer_flt3),
    (3, "lucas-constructions", "quick", criterion_3_lucas),
    (4, "condition-I-table", "quick", criterion_4_condition_I_table),
    (5, "exceptional-sets", "quick", criterion_5_exceptional_sets),
    (6, "reciprocity-instances", "full", criterion_6_reciprocity_instances),
    (7, "theorem-grid", "quick", criterion_7_theorem_grid),
    (8, "associate-asymmetries", "quick", criterion_8_associate_asymmetries),
    (9, "corollary-exhausts", "full", criterion_9_corollary_exhausts),
    (10, "property-soak", "full", criterion_10_property_soak),
)


def run(level: str = "quick") -> list[CriterionResult]:
    """Run the acceptance criteria at the given level ("quick" or "full")."""
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    results = []
    for number, name, tier, fn in CRITERIA:
        if level == "quick" and tier != "quick":
            continue
        try:
            detail = fn()
            results.append(CriterionResult(number, name, True, detail))
        except Exception as exc:  # noqa: BLE001 - report, don't crash the runner
            results.append(CriterionResult(number, name, False, f"{type(exc).__name__}: {exc}"))
    return results
