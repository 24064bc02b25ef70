"""Explicit solution builders and the executable 3-descent step.

The central objects are triples (A, B, C) in Z[w]³ with A + B + C = 0 and
A·B·C equal to the target M times a nonzero cube.  Any solution of
x³ + y³ = M yields one (clear denominators of x³, y³, -M); conversely a
triple whose entries are unit·cube, unit·cube, rest steps down to
(w·r + v·s, v·r + w·s, r + s), whose product is -C and whose norm product
is strictly smaller.  Iterating gives the descent trace; the classical
non-existence proofs are exactly the statement that for blocked targets the
structure extraction can never keep succeeding.

Also here: the linear construction that turns a relation
w·r³ + v·s³ + M·t³ = 0 into a solution, the Lucas polynomial identity for
targets 3p, and the tangent/secant constructions for generating new points
from old ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .eisenstein import (
    BETA,
    EisensteinInt,
    KElement,
    ONE,
    V,
    W,
    eis_gcd,
    unit_inverse,
)
from .factorization import factor
from .search import is_rational_cube, rational_cbrt


def _as_k(m) -> KElement:
    return m if isinstance(m, KElement) else KElement(m)


class TripleStructureError(ValueError):
    """A triple entry is not of the unit-times-cube shape the step needs."""


class DescentTerminal(Exception):
    """Descent has reached the units case and stops."""


def is_cube(x: EisensteinInt) -> bool:
    """Whether x is a cube in Z[w]: all exponents divisible by 3 and the
    leftover unit equal to 1 or -1 (the only unit cubes)."""
    if x.is_zero():
        return False
    f = factor(x)
    return all(e % 3 == 0 for _, e in f.factors) and f.unit in (ONE, -ONE)


def is_cube_in_K(x: KElement) -> bool:
    """Cubes of K: num·den² must be a cube of Z[w] (O is integrally closed,
    so an integral cube root of an integral element is integral)."""
    if x.is_zero():
        return False
    return is_cube(x.num * x.den**2)


@dataclass(frozen=True)
class Triple:
    """Descent state: A + B + C = 0 and A·B·C = target · (nonzero cube)."""

    A: EisensteinInt
    B: EisensteinInt
    C: EisensteinInt
    target: EisensteinInt

    def __post_init__(self) -> None:
        if self.A.is_zero() or self.B.is_zero() or self.C.is_zero():
            raise ValueError("triple entries must be nonzero")
        if not (self.A + self.B + self.C).is_zero():
            raise ValueError("triple does not sum to zero")
        if not is_cube_in_K(KElement(self.A * self.B * self.C) / KElement(self.target)):
            raise ValueError("product is not the target times a cube")

    def norm_product(self) -> int:
        return self.A.norm() * self.B.norm() * self.C.norm()

    def entries(self) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
        return self.A, self.B, self.C


def solution_from_relation(
    r: EisensteinInt, s: EisensteinInt, t: EisensteinInt, m: EisensteinInt
) -> tuple[KElement, KElement]:
    """Turn a relation w·r³ + v·s³ + m·t³ = 0 into a solution of x³ + y³ = m.

    Solves the linear system w·x + v·y = w·r³, v·x + w·y = v·s³ (determinant
    w² - v² = -beta) and rescales by 1/(r·s·t); the three linear forms then
    multiply out to x³ + y³ = m exactly, which is re-verified.
    """
    rst = r * s * t
    if rst.is_zero():
        raise ValueError("not a valid relation: r·s·t = 0")
    if not (W * r**3 + V * s**3 + m * t**3).is_zero():
        raise ValueError("not a valid relation: w·r³ + v·s³ + m·t³ != 0")
    # Cramer against determinant w² - v² = v - w = -beta; 1/beta = -beta/3.
    x_num = (W * s**3 - V * r**3) * -BETA  # 3·x before division
    y_num = (r**3 - s**3) * -BETA
    scale = KElement(rst * 3, 1)
    x = KElement(x_num, 1) / scale
    y = KElement(y_num, 1) / scale
    assert x**3 + y**3 == KElement(m), "constructed pair fails the curve equation"
    return x, y


def lucas_pair(a: int, b: int) -> tuple[int, int]:
    """The Lucas polynomials x = a³ - b³ + 6a²b + 3ab², y = b³ - a³ + 3a²b + 6ab².

    Both classical identities are asserted exactly:
        x + y = 9ab(a + b)     and     x² - xy + y² = 3(a² + ab + b²)³,
    whence x³ + y³ = -27·a·b·c·(a² + ab + b²)³ with c = -a - b.
    """
    x = a**3 - b**3 + 6 * a * a * b + 3 * a * b * b
    y = b**3 - a**3 + 3 * a * a * b + 6 * a * b * b
    assert x + y == 9 * a * b * (a + b)
    assert x * x - x * y + y * y == 3 * (a * a + a * b + b * b) ** 3
    return x, y


def lucas_witness(a: int, b: int, m: int) -> tuple[KElement, KElement]:
    """Rational witness for x³ + y³ = m from an integer triple (a, b, -a-b).

    Requires a·b·(-a-b) = m·(rational cube); then with (x, y) the Lucas pair
    and d = -3·cbrt(abc/m)·(a² + ab + b²), the pair (x/d, y/d) lands on the
    curve, is reduced, and re-verifies exactly.
    """
    c = -a - b
    if a == 0 or b == 0 or c == 0 or m == 0:
        raise ValueError("degenerate triple")
    q = Fraction(a * b * c, m)
    if q == 0 or not is_rational_cube(q):
        raise ValueError("triple does not match target: a·b·(-a-b)/m is not a cube")
    root = rational_cbrt(q)
    x, y = lucas_pair(a, b)
    d = -3 * root * (a * a + a * b + b * b)
    wx = KElement.from_rational(x * d.denominator, d.numerator)
    wy = KElement.from_rational(y * d.denominator, d.numerator)
    assert wx**3 + wy**3 == KElement(m)
    return wx, wy


def lucas_triple_search(m: int, bound: int) -> tuple[int, int] | None:
    """Smallest integer pair (a, b), by |a| + |b| then |a|, with
    a·b·(-a-b)/m a nonzero rational cube; None if the bound is exhausted.

    Within one magnitude class the negative candidate is scanned first.
    """
    if m == 0:
        raise ValueError("target must be nonzero")
    for s in range(2, 2 * bound + 1):
        for abs_a in range(1, min(s - 1, bound) + 1):
            abs_b = s - abs_a
            if abs_b > bound:
                continue
            for a in (-abs_a, abs_a):
                for b in (-abs_b, abs_b):
                    c = -a - b
                    if c == 0:
                        continue
                    if is_rational_cube(Fraction(a * b * c, m)):
                        return a, b
    return None


def tangent_step(m: KElement, point: tuple[KElement, KElement]) -> tuple[KElement, KElement]:
    """Duplication on x³ + y³ = m: intersect the tangent line at the point
    with the curve.

        (x, y) -> ( x(x³ + 2y³)/(x³ - y³),  -y(2x³ + y³)/(x³ - y³) )

    The formula is validated only by exact substitution, never trusted.
    """
    m = _as_k(m)
    x, y = point
    x3, y3 = x**3, y**3
    if x3 + y3 != m:
        raise ValueError("point is not on the curve")
    den = x3 - y3
    if den.is_zero():
        raise ValueError("tangent degenerate: x³ = y³")
    nx = x * (x3 + 2 * y3) / den
    ny = -(y * (2 * x3 + y3)) / den
    assert nx**3 + ny**3 == m
    return nx, ny


def secant_step(
    m: KElement, p1: tuple[KElement, KElement], p2: tuple[KElement, KElement]
) -> tuple[KElement, KElement]:
    """Third intersection of the line through two known points with the curve.

    With slope t = (y2-y1)/(x2-x1) and intercept c = y1 - t·x1, substituting
    y = t·x + c into x³ + y³ = m leaves a cubic whose roots are x1, x2 and
    the returned coordinate (Vieta on the quadratic cofactor).  Vertical or
    coincident configurations error out.
    """
    m = _as_k(m)
    (x1, y1), (x2, y2) = p1, p2
    for x, y in (p1, p2):
        if x**3 + y**3 != m:
            raise ValueError("point is not on the curve")
    if x1 == x2:
        raise ValueError("secant degenerate: vertical or coincident points")
    t = (y2 - y1) / (x2 - x1)
    c = y1 - t * x1
    t3 = t**3
    lead = t3 + 1
    if lead.is_zero():
        raise ValueError("secant degenerate: line meets the curve twice only")
    # x³(1 + t³) + 3t²c·x² + 3tc²·x + c³ - m = 0, roots x1, x2, x3
    x3 = -(3 * t**2 * c) / lead - x1 - x2
    y3 = t * x3 + c
    assert x3**3 + y3**3 == m
    return x3, y3


def triple_from_solution(x: KElement, y: KElement, m: EisensteinInt) -> Triple:
    """Clear denominators of (x³, y³, -m) into a descent triple.

    With D = lcm of the denominators of x³ and y³, the entries x³D, y³D,
    -mD multiply to m·(-x·y·D)³... more precisely their product is m times
    the nonzero cube (x·y)³·D³·(-1), so the triple invariant holds.
    """
    if x.is_zero() or y.is_zero():
        raise ValueError("degenerate solution: x·y = 0")
    x3, y3 = x**3, y**3
    if x3 + y3 != KElement(m):
        raise ValueError("not a solution of x³ + y³ = m")
    if x3 == y3:
        raise ValueError("degenerate solution: x³ = y³")
    d = x3.den * y3.den // gcd(x3.den, y3.den)
    return Triple(x3.num * (d // x3.den), y3.num * (d // y3.den), -m * d, m)


def reduce_triple(t: Triple) -> Triple:
    """Divide out common factors until the entries are pairwise coprime.

    A common factor of any two entries divides the third (the entries sum
    to zero), so repeatedly dividing all three by their gcd changes the
    product by a cube and lands on a pairwise coprime triple; the Triple
    invariant is re-verified by construction.
    """
    a, b, c = t.A, t.B, t.C
    while True:
        g = eis_gcd(eis_gcd(a, b), c)
        if g.is_unit():
            break
        a, b, c = a / g, b / g, c / g
    return Triple(a, b, c, t.target)


def _unit_cube_parts(x: EisensteinInt, label: str) -> tuple[EisensteinInt, EisensteinInt]:
    """Write x = i·r³ with i in {1, w, v}; raise naming the obstruction."""
    f = factor(x)
    r = ONE
    for irr, e in f.factors:
        if e % 3 != 0:
            raise TripleStructureError(
                f"triple not in descent form: {label} carries ({irr})^{e} "
                f"(exponent not divisible by 3)"
            )
        r = r * irr ** (e // 3)
    i = f.unit
    if i in (-ONE, -W, -V):
        i, r = -i, -r
    return i, r


def descent_step(t: Triple) -> Triple:
    """One step of 3-descent on a reduced triple whose A and B are
    unit-times-cube.

    After normalising the unit on A away, A = r³ and B = s³ (a unit mismatch
    between A and B is an obstruction and raises).  s may be replaced by
    w·s or v·s without changing B; the first choice in the fixed order
    (s, w·s, v·s) making the non-cube part of C divide r + s is taken, else
    s itself.  The new triple is (w·r + v·s, v·r + w·s, r + s), whose
    product is exactly -C; when the whole triple consists of cubes with
    beta dividing the third root, the three new entries are additionally
    divisible by beta and are divided through, giving product -C/beta³.

    Raises DescentTerminal when A and B are units (the descent has
    bottomed out) and TripleStructureError when extraction fails.
    """
    t = reduce_triple(t)
    a, b, c = t.entries()
    if a.is_unit() and b.is_unit():
        raise DescentTerminal("A and B are units")
    i, r = _unit_cube_parts(a, "A")
    j, s = _unit_cube_parts(b, "B")
    if i != ONE:
        # divide the whole triple by the unit i (changes the product by a
        # unit cube = ±1, harmless)
        inv = unit_inverse(i)
        a, b, c = inv * a, inv * b, inv * c
        j = inv * j
        if j in (-ONE, -W, -V):
            j, s = -j, -s
        i = ONE
    if j != ONE:
        raise TripleStructureError(
            f"triple not in descent form: unit mismatch i != j (j/i = {j})"
        )

    m_core = _non_cube_part(c)
    for cand in (s, W * s, V * s):
        if m_core.divides(r + cand):
            s = cand
            break

    a2, b2, c2 = W * r + V * s, V * r + W * s, r + s
    if a2.is_zero() or b2.is_zero() or c2.is_zero():
        raise TripleStructureError("descent step degenerates: r³ = s³ collision")
    assert (a2 * b2 * c2) == -c, "product identity A'·B'·C' = -C failed"

    # beta-variant: all three entries are cubes and beta divides the third
    # root; then r, s can be normalised to 1, -1 mod 3 and the new entries
    # are all divisible by beta.
    try:
        k, tt = _unit_cube_parts(c, "C")
        beta_case = k == ONE and BETA.divides(tt)
    except TripleStructureError:
        beta_case = False
    if beta_case:
        pair = _arrange_plus_minus(r, s)
        if pair is None:
            pair = _arrange_plus_minus(s, r)
        if pair is not None:
            r, s = pair
            a2, b2, c2 = (W * r + V * s) / BETA, (V * r + W * s) / BETA, (r + s) / BETA
            assert a2 * b2 * c2 * BETA**3 == -c
            return Triple(a2, b2, c2, t.target)

    return Triple(a2, b2, c2, t.target)


def _arrange_plus_minus(r: EisensteinInt, s: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt] | None:
    """Twist r to 1 mod 3 and s to -1 mod 3 by cube roots of unity, if possible."""
    r1 = _primary_twist(r)
    s1 = _primary_twist(-s)
    if r1 is None or s1 is None:
        return None
    return r1, -s1


def _primary_twist(x: EisensteinInt) -> EisensteinInt | None:
    """The twist zeta·x, zeta in {1, w, v}, congruent to 1 mod 3 (if any).
    Cube-root-of-unity twists leave x³ unchanged."""
    for zeta in (ONE, W, V):
        y = zeta * x
        if y.a % 3 == 1 and y.b % 3 == 0:
            return y
    return None


def _non_cube_part(c: EisensteinInt) -> EisensteinInt:
    """Product of the irreducibles of c to their exponents mod 3."""
    out = ONE
    for irr, e in factor(c).factors:
        out = out * irr ** (e % 3)
    return out


@dataclass(frozen=True)
class DescentTrace:
    """The triples visited by iterated descent, with the stop reason."""

    steps: tuple[Triple, ...]
    terminal: str

    def norms(self) -> tuple[int, ...]:
        return tuple(t.norm_product() for t in self.steps)


def descent_trace(
    x: KElement, y: KElement, m: EisensteinInt, max_steps: int = 64
) -> DescentTrace:
    """Iterate descent_step from a solution until it stops.

    Norm products strictly decrease, so termination is guaranteed; the trace
    records whether it stopped at the units case or at structure absence
    (with the obstruction message).  max_steps is a safety net only.
    """
    t = reduce_triple(triple_from_solution(x, y, m))
    steps = [t]
    for _ in range(max_steps):
        try:
            nxt = descent_step(t)
        except DescentTerminal as stop:
            return DescentTrace(tuple(steps), f"units: {stop}")
        except TripleStructureError as stop:
            return DescentTrace(tuple(steps), f"structure-absent: {stop}")
        assert nxt.norm_product() < t.norm_product(), "descent failed to shrink"
        nxt = reduce_triple(nxt)
        steps.append(nxt)
        t = nxt
    raise ArithmeticError("descent exceeded max_steps despite decreasing norms")


def cube_triple_structure(
    a: EisensteinInt, b: EisensteinInt, c: EisensteinInt
) -> tuple[EisensteinInt, tuple[int, int, int]]:
    """Decompose a zero-sum cube-product triple as (d, d·w, d·v) in some order.

    Returns (d, perm) with perm indices such that (entries)[perm[0]] = d,
    [perm[1]] = d·w, [perm[2]] = d·v.  Raises when the hypotheses fail or
    (equivalently, by the classification) no decomposition exists.
    """
    entries = (a, b, c)
    if any(e.is_zero() for e in entries):
        raise ValueError("not a cube triple: zero entry")
    if not (a + b + c).is_zero():
        raise ValueError("not a cube triple: nonzero sum")
    if not is_cube(a * b * c):
        raise ValueError("not a cube triple: product is not a cube")
    found: list[tuple[EisensteinInt, tuple[int, int, int]]] = []
    for i0 in range(3):
        d = entries[i0]
        for i1 in range(3):
            if i1 == i0:
                continue
            i2 = 3 - i0 - i1
            if entries[i1] == d * W and entries[i2] == d * V:
                found.append((d, (i0, i1, i2)))
    if not found:
        raise ValueError("not a cube triple: no unit decomposition")  # unreachable per the classification
    # decompositions rotate; prefer a rational base element when one exists
    found.sort(key=lambda t: (0 if t[0].is_rational() else 1, t[1]))
    return found[0]
