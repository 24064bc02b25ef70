"""Exact arithmetic in the ring of Eisenstein integers and its fraction field.

The ring O = Z[w] where w is a primitive cube root of unity (w² + w + 1 = 0).
Elements are stored on the integral basis {1, w}: the pair (a, b) denotes
a + b·w.  The other root of z² + z + 1 is v = w² = -1 - w, and the ramified
element is beta = w - v = 1 + 2w, with beta² = -3.

Everything here is exact integer arithmetic; there is no floating point.
All values are immutable and all operations are pure functions, so they may
be shared freely across threads.

Inputs written on the {w, v} basis convert via  a·w + b·v = -b + (a - b)·w;
output is always on the {1, w} basis.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterator


class EisensteinInt:
    """An element a + b·w of Z[w], with arbitrary-precision coordinates.

    Multiplication uses w² = -1 - w:
        (a1 + b1·w)(a2 + b2·w) = (a1·a2 - b1·b2) + (a1·b2 + a2·b1 - b1·b2)·w

    The norm N(a + b·w) = a² - ab + b² is multiplicative and non-negative,
    vanishing only at 0.
    """

    __slots__ = ("a", "b")

    a: int
    b: int

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = a
        self.b = b

    @classmethod
    def from_uv(cls, a: int, b: int) -> "EisensteinInt":
        """Build a·w + b·v from {w, v}-basis coordinates."""
        return cls(-b, a - b)

    def to_uv(self) -> tuple[int, int]:
        """Coordinates (a, b) such that self = a·w + b·v."""
        return (self.b - self.a, -self.a)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: int) -> "EisensteinInt":
        return _coerce(other).__sub__(self)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EisensteinInt":
        """Repeated squaring; n must be >= 0."""
        if n < 0:
            raise ValueError("negative exponent on a ring element")
        result = EisensteinInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> "EisensteinInt":
        """Complex conjugation, which swaps w and v:  a + b·w -> (a-b) - b·w."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """N(a + b·w) = a² - ab + b², a non-negative rational integer."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def cube(self) -> "EisensteinInt":
        # closed form of (a+bw)^3, handy in hot scan loops
        a, b = self.a, self.b
        return EisensteinInt(a**3 - 3 * a * b * b + b**3, 3 * a * b * (a - b))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.b == 0

    # -- Euclidean division ----------------------------------------------

    def __divmod__(self, other: "EisensteinInt | int") -> tuple["EisensteinInt", "EisensteinInt"]:
        """Division with remainder satisfying 3·N(r) <= N(m).

        The exact quotient self·conj(m)/N(m) is rounded coordinatewise to
        the nearest integer (ties away from zero); coordinate rounding alone
        only guarantees N(r) < N(m), so the 3x3 offset neighbourhood of the
        rounded point is scanned and the candidate minimising N(r) wins,
        ties broken by lexicographic (q.a, q.b).
        """
        m = _coerce(other)
        if m is NotImplemented:
            return NotImplemented
        n = m.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        num = self * m.conj()
        qa0 = _round_nearest(num.a, n)
        qb0 = _round_nearest(num.b, n)
        best_q = best_r = None
        best_key = None
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                q = EisensteinInt(qa0 + da, qb0 + db)
                r = self - q * m
                key = (r.norm(), q.a, q.b)
                if best_key is None or key < best_key:
                    best_key, best_q, best_r = key, q, r
        assert 3 * best_r.norm() <= n, "Euclidean bound violated"
        return best_q, best_r

    def __floordiv__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        return divmod(self, other)[0]

    def __mod__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        return divmod(self, other)[1]

    def __truediv__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        """Exact division; raises ValueError if other does not divide self."""
        q, r = divmod(self, _coerce(other))
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "EisensteinInt") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    # -- comparisons / hashing / display ----------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_eisenstein(self)


def _coerce(x: "EisensteinInt | int"):
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    return NotImplemented


def _round_nearest(a: int, b: int) -> int:
    """Round a/b (b > 0) to the nearest integer, ties away from zero."""
    if a >= 0:
        return (2 * a + b) // (2 * b)
    return -((-2 * a + b) // (2 * b))


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
W = EisensteinInt(0, 1)            # primitive cube root of unity
V = EisensteinInt(-1, -1)          # the other root, v = w²
BETA = EisensteinInt(1, 2)         # w - v; the ramified element, beta² = -3
UNITS = (ONE, -ONE, W, -W, V, -V)  # the full unit group, order 6

_UNIT_INVERSE = {ONE: ONE, -ONE: -ONE, W: V, V: W, -W: -V, -V: -W}


def unit_inverse(zeta: EisensteinInt) -> EisensteinInt:
    try:
        return _UNIT_INVERSE[zeta]
    except KeyError:
        raise ValueError(f"{zeta} is not a unit") from None


def gcd_ext(l: EisensteinInt, m: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Extended Euclidean algorithm: returns (g, A, B) with g = A·l + B·m.

    g divides both arguments and is returned in distinguished-associate form
    (see canonical_associate).  Raises ValueError when both arguments are 0.
    """
    if l.is_zero() and m.is_zero():
        raise ValueError("gcd of zeros")
    r0, r1 = l, m
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    zeta, g = canonical_associate(r0)
    inv = unit_inverse(zeta)
    return g, inv * s0, inv * t0


def eis_gcd(l: EisensteinInt, m: EisensteinInt) -> EisensteinInt:
    return gcd_ext(l, m)[0]


def ord_beta(d: EisensteinInt) -> int:
    """The largest n such that beta^n divides d.  d must be nonzero."""
    if d.is_zero():
        raise ValueError("ord of zero")
    n = 0
    while True:
        q, r = divmod(d, BETA)
        if not r.is_zero():
            return n
        d = q
        n += 1


def canonical_associate(x: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Split x into (unit, distinguished associate) with x = unit · associate.

    The distinguished representative of each class of six associates:

      * associates of a rational integer: the positive integer (so the
        distinguished inert primes are the positive primes p);
      * otherwise, coprime to beta: the unique associate congruent to
        1 mod 3 (the six units are pairwise incongruent mod 3);
      * a beta part is pulled out first and kept as a literal power of
        beta = 1 + 2w, the coprime cofactor normalised as above.

    Idempotent: canonicalising a distinguished element returns (1, itself).
    """
    if x.is_zero():
        raise ValueError("zero has no associates")
    k = 0
    w = x
    while True:
        q, r = divmod(w, BETA)
        if not r.is_zero():
            break
        w = q
        k += 1
    w0 = None
    for zeta in UNITS:
        t = zeta * w
        if t.b == 0 and t.a > 0:
            w0 = t
            break
    if w0 is None:
        for zeta in UNITS:
            t = zeta * w
            if t.a % 3 == 1 and t.b % 3 == 0:
                w0 = t
                break
    assert w0 is not None, "every class coprime to beta has a primary member"
    x0 = BETA**k * w0
    unit = x / x0
    assert unit.is_unit()
    return unit, x0


def is_primary(x: EisensteinInt) -> bool:
    """True when x = 1 mod 3."""
    return x.a % 3 == 1 and x.b % 3 == 0


def mod9_class(x: EisensteinInt) -> EisensteinInt:
    """Representative of x mod 9 with both coordinates reduced into [0, 9)."""
    return EisensteinInt(x.a % 9, x.b % 9)


# -- parsing and formatting ---------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coeff>\d+)\s*\*?\s*(?P<sym1>[wuv])   # 3*w, 3w
          | (?P<sym2>[wuv])                          # bare symbol
          | (?P<int>\d+)                             # plain integer
        )""",
    re.VERBOSE,
)


def parse_eisenstein(text: str) -> EisensteinInt:
    """Parse "a+b*w" (internal basis) or "a*u+b*v" (the w,v basis).

    Grammar: eint ::= term (('+'|'-') term)*;
             term ::= integer | [integer '*'] ('w'|'u'|'v').
    'w' and 'u' both denote the primitive cube root of unity.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty element")
    pos = 0
    total = ZERO
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (not first and m.group("sign") == ""):
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("int") is not None:
            total = total + sign * int(m.group("int"))
        else:
            coeff = sign * int(m.group("coeff") or 1)
            sym = m.group("sym1") or m.group("sym2")
            total = total + coeff * (V if sym == "v" else W)
        pos = m.end()
        first = False
    if s[pos:].strip():
        raise ValueError(f"trailing input in {text!r}")
    return total


def format_eisenstein(x: EisensteinInt) -> str:
    """Render on the {1, w} basis; round-trips through parse_eisenstein."""
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    if b == 1:
        wterm = "w"
    elif b == -1:
        wterm = "-w"
    else:
        wterm = f"{b}*w"
    if a == 0:
        return wterm
    if b > 0:
        return f"{a}+{wterm}"
    return f"{a}{wterm}"


class KElement:
    """An element of the field K = Q(w), as num/den in lowest terms.

    num is an EisensteinInt and den a positive rational integer (every
    element of K has such a form: multiply through by the conjugate).
    Reduction removes gcd(den, num.a, num.b), so equal values always have
    identical representations.
    """

    __slots__ = ("num", "den")

    num: EisensteinInt
    den: int

    def __init__(self, num: "EisensteinInt | int" = 0, den: int = 1) -> None:
        num = _coerce(num)
        if den == 0:
            raise ZeroDivisionError("division by zero")
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(abs(num.a), abs(num.b)), den)
        if g > 1:
            num = EisensteinInt(num.a // g, num.b // g)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def from_rational(cls, p: int, q: int = 1) -> "KElement":
        return cls(EisensteinInt(p, 0), q)

    # -- field operations ------------------------------------------------

    def __add__(self, other: "KElement | EisensteinInt | int") -> "KElement":
        other = _coerce_k(other)
        if other is NotImplemented:
            return NotImplemented
        return KElement(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "KElement | EisensteinInt | int") -> "KElement":
        other = _coerce_k(other)
        if other is NotImplemented:
            return NotImplemented
        return KElement(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other) -> "KElement":
        return _coerce_k(other).__sub__(self)

    def __neg__(self) -> "KElement":
        return KElement(-self.num, self.den)

    def __mul__(self, other: "KElement | EisensteinInt | int") -> "KElement":
        other = _coerce_k(other)
        if other is NotImplemented:
            return NotImplemented
        return KElement(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "KElement | EisensteinInt | int") -> "KElement":
        other = _coerce_k(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        n = other.num.norm()
        return KElement(self.num * other.den * other.num.conj(), self.den * n)

    def __rtruediv__(self, other) -> "KElement":
        return _coerce_k(other).__truediv__(self)

    def __pow__(self, n: int) -> "KElement":
        if n < 0:
            return (KElement(1) / self) ** (-n)
        return KElement(self.num**n, self.den**n)

    def conj(self) -> "KElement":
        return KElement(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_rational(self) -> bool:
        return self.num.b == 0

    def is_integral(self) -> bool:
        return self.den == 1

    def as_eisenstein(self) -> EisensteinInt:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.num

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num.a, self.den)

    def __eq__(self, other: object) -> bool:
        other = _coerce_k(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"KElement({self.num!r}, {self.den})"

    def __str__(self) -> str:
        return format_k(self)


def _coerce_k(x):
    if isinstance(x, KElement):
        return x
    if isinstance(x, (EisensteinInt, int)):
        return KElement(x, 1)
    return NotImplemented


def parse_k(text: str) -> KElement:
    """Parse "eint", "eint/den" or "(eint)/den"."""
    s = text.strip()
    m = re.fullmatch(r"\(\s*(?P<num>[^()]+?)\s*\)\s*/\s*(?P<den>\d+)", s)
    if not m:
        m = re.fullmatch(r"(?P<num>[^/]+?)\s*/\s*(?P<den>\d+)", s)
    if m:
        return KElement(parse_eisenstein(m.group("num")), int(m.group("den")))
    return KElement(parse_eisenstein(s), 1)


def format_k(x: KElement) -> str:
    num = format_eisenstein(x.num)
    if x.den == 1:
        return num
    if x.num.a != 0 and x.num.b != 0:
        return f"({num})/{x.den}"
    return f"{num}/{x.den}"


def coordinate_box(bound: int) -> Iterator[EisensteinInt]:
    """All lattice points a·w + b·v with |a|, |b| <= bound, in a fixed order.

    Scan boxes throughout the package are on the {w, v} coordinates.
    """
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            yield EisensteinInt.from_uv(a, b)


def in_coordinate_box(x: EisensteinInt, bound: int) -> bool:
    a, b = x.to_uv()
    return abs(a) <= bound and abs(b) <= bound


def spiral(bound: int) -> Iterator[int]:
    """Nonzero integers ordered by magnitude: 1, -1, 2, -2, ..."""
    for k in range(1, bound + 1):
        yield k
        yield -k


def coordinate_spiral(bound: int) -> Iterator[EisensteinInt]:
    """Nonzero box points ordered by growing radius max(|a|, |b|)."""
    for r in range(1, bound + 1):
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if max(abs(a), abs(b)) == r:
                    yield EisensteinInt.from_uv(a, b)
