"""Brute-force witness searches at desk scale.

Three searches feed the classifier, and two exhaustive scans back the
classical corollaries:

  * search_rational: complete per denominator.  For x = a/d, y = b/d the
    sum a³ + b³ = M·d³ factors as (a+b)(a² - ab + b²), so a + b runs over
    the divisors of M·d³ and each divisor leaves one quadratic in a whose
    discriminant is tested for squareness.  No numerator box, so spread
    witnesses like 17 = (18/7)³ - (1/7)³ appear at tiny budgets.
  * search_eisenstein: a box scan over numerators (documented incomplete:
    absence of hits is never evidence of non-existence).
  * relation_search: first (r, s, t) with w·r³ + v·s³ + M·t³ = 0.

Scan boxes are over the {w, v} coordinates; hit lists are ordered by
denominator ascending, then numerators descending lexicographically, so
identical budgets always yield identical ordered results regardless of how
the scan is scheduled.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .eisenstein import (
    EisensteinInt,
    KElement,
    V,
    W,
    coordinate_box,
    coordinate_spiral,
    in_coordinate_box,
    spiral,
)

_W_COMPLEX = complex(-0.5, 3**0.5 / 2)
_ROTATIONS3 = (complex(1, 0), _W_COMPLEX, _W_COMPLEX * _W_COMPLEX)
_ROTATIONS2 = (complex(1, 0),)


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the classifier's witness searches; results are exactly
    reproducible given a budget."""

    denom: int = 50
    coord: int = 30
    relation: int = 12

    def __post_init__(self) -> None:
        if min(self.denom, self.coord, self.relation) < 1:
            raise ValueError("budget bounds must be >= 1")


def _icbrt(n: int) -> int:
    """Largest-magnitude integer k with |k|³ <= |n|, carrying n's sign."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    a = abs(n)
    k = round(a ** (1.0 / 3.0))
    while k > 0 and k**3 > a:
        k -= 1
    while (k + 1) ** 3 <= a:
        k += 1
    return sign * k


def _roots_by_rounding(z: EisensteinInt, power: int) -> list[EisensteinInt]:
    """Exact solutions y of y^power = z for power in {2, 3}.

    Cheap rejection first: N(y)^power = N(z), so N(z) must be a perfect
    power.  Survivors are found by rounding the complex roots to the
    lattice (the roots landing in Z[w] are unit rotations of each other)
    and verified exactly; a 3x3 neighbourhood guards against rounding
    error.  No false positives are possible (everything is verified), and
    a root can only be missed when its magnitude exceeds the double-
    precision rounding horizon (~1e15) -- far beyond any root the box
    searches could accept, so the scans stay exactly equivalent to their
    naive counterparts.
    """
    if z.is_zero():
        return [EisensteinInt(0, 0)]
    n = z.norm()
    if power == 3:
        k = _icbrt(n)
        if k**3 != n:
            return []
        rotations = _ROTATIONS3
    else:
        k = isqrt(n)
        if k * k != n:
            return []
        rotations = _ROTATIONS2
    zc = complex(z.a, 0) + z.b * _W_COMPLEX
    r = abs(zc) ** (1.0 / power)
    theta = cmath.phase(zc) / power
    base = cmath.rect(r, theta)
    roots: list[EisensteinInt] = []
    for rot in rotations:
        c = base * rot
        b0 = c.imag / _W_COMPLEX.imag
        a0 = c.real - b0 * _W_COMPLEX.real
        a0, b0 = round(a0), round(b0)
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                cand = EisensteinInt(a0 + da, b0 + db)
                if cand.norm() != k:
                    continue
                if cand**power == z and cand not in roots:
                    roots.append(cand)
    if power == 2 and roots:
        r0 = roots[0]
        if -r0 not in roots:
            roots.append(-r0)
    roots.sort(key=lambda c: (c.a, c.b))
    return roots


def cube_roots(z: EisensteinInt) -> list[EisensteinInt]:
    """All y in Z[w] with y³ = z (zero or three of them, exactly verified)."""
    return _roots_by_rounding(z, 3)


def square_roots(z: EisensteinInt) -> list[EisensteinInt]:
    """All y in Z[w] with y² = z (zero or two of them)."""
    return _roots_by_rounding(z, 2)


def is_rational_cube(q: Fraction) -> bool:
    if q == 0:
        return True
    cn, cd = _icbrt(q.numerator), _icbrt(q.denominator)
    return cn**3 == q.numerator and cd**3 == q.denominator


def rational_cbrt(q: Fraction) -> Fraction:
    if not is_rational_cube(q):
        raise ValueError(f"{q} is not a rational cube")
    return Fraction(_icbrt(q.numerator), _icbrt(q.denominator))


def witness_sort_key(pair: tuple[KElement, KElement]):
    """Denominator ascending, then numerators descending lexicographically.

    This puts the conventional presentation first, e.g. (37/21, 17/21)
    rather than its swap, and (3+2w, 1) among the unit twists.
    """
    x, y = pair
    d = x.den * y.den // gcd(x.den, y.den)
    sx, sy = d // x.den, d // y.den
    return (d, -x.num.a * sx, -x.num.b * sx, -y.num.a * sy, -y.num.b * sy)


def search_rational(m: int, denom_bound: int) -> list[tuple[KElement, KElement]]:
    """All rational solutions of x³ + y³ = m with common denominator <= bound.

    Complete for every denominator d <= denom_bound (tested against a naive
    double loop on small instances); an empty list is a valid result.
    """
    if m == 0:
        raise ValueError("target must be nonzero")
    hits: set[tuple[int, int, int]] = set()
    for d in range(1, denom_bound + 1):
        n = m * d**3
        for e in _signed_divisors(n):
            f = n // e
            if f <= 0:
                continue
            disc = 12 * f - 3 * e * e
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for num in (3 * e + s, 3 * e - s):
                if num % 6:
                    continue
                a = num // 6
                b = e - a
                if gcd(gcd(abs(a), abs(b)), d) == 1:
                    hits.add((a, b, d))
    pairs = [
        (KElement.from_rational(a, d), KElement.from_rational(b, d))
        for a, b, d in hits
    ]
    for x, y in pairs:
        assert x**3 + y**3 == KElement(m)
    pairs.sort(key=witness_sort_key)
    return pairs


def _signed_divisors(n: int) -> list[int]:
    """Divisors of n carrying n's sign (so that n/e > 0)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(sign * i)
            if i != n // i:
                large.append(sign * (n // i))
        i += 1
    return small + large[::-1]


def search_eisenstein(
    m: EisensteinInt,
    coord_bound: int,
    denom_bound: int,
    stop_at_first_denominator: bool = False,
) -> list[tuple[KElement, KElement]]:
    """Solutions of x³ + y³ = m with both numerators in the coordinate box.

    Equivalent to the naive double box scan, but the inner loop recovers y
    from y³ = m·d³ - x³ by exact cube-root extraction, so the cost is one
    box per denominator instead of a box squared.

    With stop_at_first_denominator the scan returns after the smallest
    denominator that yields hits; since the result order is denominator-
    major, the leading hit is the same either way.
    """
    if m.is_zero():
        raise ValueError("target must be nonzero")
    box_cubes = [(xi, xi.cube()) for xi in coordinate_box(coord_bound)]
    hits: list[tuple[KElement, KElement]] = []
    seen: set[tuple[int, int, int, int, int]] = set()
    for d in range(1, denom_bound + 1):
        target = m * d**3
        for xi, xi3 in box_cubes:
            z = target - xi3
            for eta in cube_roots(z):
                if not in_coordinate_box(eta, coord_bound):
                    continue
                if gcd(gcd(abs(xi.a), abs(xi.b)), gcd(gcd(abs(eta.a), abs(eta.b)), d)) != 1:
                    continue
                key = (xi.a, xi.b, eta.a, eta.b, d)
                if key in seen:
                    continue
                seen.add(key)
                x, y = KElement(xi, d), KElement(eta, d)
                assert x**3 + y**3 == KElement(m)
                hits.append((x, y))
        if hits and stop_at_first_denominator:
            break
    hits.sort(key=witness_sort_key)
    return hits


def relation_search(
    m: EisensteinInt, bound: int
) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt] | None:
    """First (r, s, t), all nonzero, with w·r³ + v·s³ + m·t³ = 0.

    Fixed scan order: r over the coordinate box by growing radius, t over
    the rational integers by magnitude; s is recovered by exact cube-root
    extraction (v·s³ = -(w·r³ + m·t³), and v⁻¹ = w), the lexicographically
    least root winning.  The t slot scans rational integers only: t enters
    the relation through t³ alone, and the classical small relations all
    carry rational t.  Returns None when the box is exhausted.
    """
    if m.is_zero():
        raise ValueError("target must be nonzero")
    for r in coordinate_spiral(bound):
        wr3 = W * r.cube()
        for t in spiral(bound):
            rhs = -(wr3 + m * t**3) * W
            for s in cube_roots(rhs):
                if s.is_zero() or not in_coordinate_box(s, bound):
                    continue
                assert (wr3 + V * s**3 + m * t**3).is_zero()
                return r, s, EisensteinInt(t, 0)
    return None


def flt3_exhaust(bound: int) -> list[tuple[EisensteinInt, EisensteinInt, EisensteinInt]]:
    """Scan for nonzero x, y, z in the box with x³ + y³ + z³ = 0.

    Returns the (necessarily empty) list of counterexamples.  The scan
    restricts to pairs with index(x) <= index(y); the equation is symmetric
    in x and y, so any counterexample has a representative of that shape.
    """
    cubes: list[tuple[tuple[int, int], tuple[int, int]]] = []
    cube_index: dict[tuple[int, int], tuple[int, int]] = {}
    for z in coordinate_box(bound):
        if z.is_zero():
            continue
        c = z.cube()
        cubes.append(((z.a, z.b), (c.a, c.b)))
        cube_index[(c.a, c.b)] = (z.a, z.b)
    bad = []
    lookup = cube_index.get
    for i, (x, (cxa, cxb)) in enumerate(cubes):
        for y, (cya, cyb) in cubes[i:]:
            z = lookup((-cxa - cya, -cxb - cyb))
            if z is not None:
                bad.append(
                    (EisensteinInt(*x), EisensteinInt(*y), EisensteinInt(*z))
                )
    return bad


def cube_ap_exhaust(bound: int) -> list[tuple[int, int, int]]:
    """Scan for three distinct nonzero integer cubes in arithmetic progression.

    Looks for x³ < z³ < y³ with x³ + y³ = 2z³ and 0 < |x|,|y|,|z| <= bound;
    returns the (necessarily empty) list of counterexamples (x, z, y).
    """
    bad = []
    for x in range(-bound, bound + 1):
        if x == 0:
            continue
        x3 = x**3
        for y in range(x + 1, bound + 1):
            if y == 0 or (x + y) % 2:
                continue
            s = x3 + y**3
            z = _icbrt(s // 2)
            if z == 0 or abs(z) > bound or 2 * z**3 != s:
                continue
            if x3 < z**3 < y**3:
                bad.append((x, z, y))
    return bad


@dataclass(frozen=True)
class MordellReport:
    """Hits of y² = x³ + 1 found inside a budgeted scan of K²."""

    rational_hits: tuple[tuple[KElement, KElement], ...]
    eisenstein_hits: tuple[tuple[KElement, KElement], ...]


def mordell_check(budget: SearchBudget) -> MordellReport:
    """Scan y² = x³ + 1 and assert every hit satisfies x³ in {-1, 0, 8}.

    The rational scan runs numerators |a| <= budget.coord over denominators
    d <= budget.denom; the field scan runs the coordinate box.  A hit with
    x³ outside {-1, 0, 8} (equivalently y² outside {0, 1, 9}) raises
    AssertionError, which no budget can trigger if the classification is
    right.
    """
    allowed_x3 = {KElement(-1), KElement(0), KElement(8)}
    allowed_y2 = {KElement(0), KElement(1), KElement(9)}

    rational: list[tuple[KElement, KElement]] = []
    for d in range(1, budget.denom + 1):
        for a in range(-budget.coord, budget.coord + 1):
            if gcd(abs(a), d) != 1:
                continue
            x = KElement.from_rational(a, d)
            w = x**3 + 1
            n = w.num.a * w.den
            if n < 0:
                continue
            s = isqrt(n)
            if s * s != n:
                continue
            y = KElement.from_rational(s, w.den)
            for yy in ((y,) if y.is_zero() else (y, -y)):
                _assert_mordell(x, yy, allowed_x3, allowed_y2)
                rational.append((x, yy))

    field_hits: list[tuple[KElement, KElement]] = []
    seen: set[tuple[KElement, KElement]] = set()
    for d in range(1, budget.denom + 1):
        for xi in coordinate_box(budget.coord):
            if gcd(gcd(abs(xi.a), abs(xi.b)), d) != 1:
                continue
            x = KElement(xi, d)
            w = x**3 + 1
            for root in square_roots(w.num * w.den):
                y = KElement(root, w.den)
                if y**2 != w:
                    continue
                _assert_mordell(x, y, allowed_x3, allowed_y2)
                if (x, y) not in seen:
                    seen.add((x, y))
                    field_hits.append((x, y))

    rational.sort(key=witness_sort_key)
    field_hits.sort(key=witness_sort_key)
    return MordellReport(tuple(rational), tuple(field_hits))


def _assert_mordell(x: KElement, y: KElement, allowed_x3, allowed_y2) -> None:
    assert y**2 == x**3 + 1
    if x**3 not in allowed_x3 or y**2 not in allowed_y2:
        raise AssertionError(
            f"counterexample to the y² = x³ + 1 classification: ({x}, {y})"
        )
