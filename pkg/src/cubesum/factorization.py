"""Prime splitting and unique factorization in Z[w].

A rational prime p behaves in one of three ways:

  * p = 3 ramifies:  3 = (-1)·beta²  with beta = 1 + 2w;
  * p = 2 mod 3 stays inert (p itself is irreducible, O/p has p² elements);
  * p = 1 mod 3 splits as pi·conj(pi) with non-associate factors, and
    O/pi is the field with p elements.

factor() reduces everything to rational integer factoring: factor the norm
over Z, then split each rational prime and assign exponents between pi and
conj(pi) by exact divisibility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .eisenstein import (
    BETA,
    EisensteinInt,
    UNITS,
    canonical_associate,
    format_eisenstein,
    is_primary,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin: this witness set is exact for n < 3.3·10²⁴,
# far beyond anything this library factors.  Above that it degrades to a
# (very strong) probabilistic test with the same witnesses.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for desk-scale integers."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n; deterministic parameters."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # unreachable at desk scale


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero.

    Trial division over a short initial range, then Pollard rho.  Intended
    for norms up to roughly 10¹⁸; nothing here targets cryptographic sizes.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in range(2, 1000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class PrimeClass:
    """How a rational prime sits in Z[w].

    tag is one of "ramified" (p = 3), "inert" (p = 2 mod 3) or "split"
    (p = 1 mod 3).  For split primes, pi and pi_bar are the two distinguished
    non-associate irreducible factors, each primary (= 1 mod 3), with
    N(pi) = N(pi_bar) = p and pi the one with positive w-coordinate.
    """

    p: int
    tag: str
    pi: EisensteinInt | None = None
    pi_bar: EisensteinInt | None = None


@lru_cache(maxsize=None)
def split_prime(p: int) -> tuple[EisensteinInt, EisensteinInt]:
    """The distinguished factor pair (pi, pi_bar) of a split prime p.

    Solves a² - ab + b² = p by enumerating b up to 2·sqrt(p/3) and testing
    the discriminant 4p - 3b² for squareness (a Cornacchia-style upgrade is
    a straightforward extension point).  The result is cached; the cache is
    a pure memo and safe under concurrent use.
    """
    if p % 3 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a split prime")
    for b in range(1, isqrt(4 * p // 3) + 2):
        d = 4 * p - 3 * b * b
        if d < 0:
            break
        s = isqrt(d)
        if s * s != d or (b + s) % 2:
            continue
        a = (b + s) // 2
        cand = EisensteinInt(a, b)
        assert cand.norm() == p
        _, pi = canonical_associate(cand)
        _, pi_conj = canonical_associate(cand.conj())
        if pi.b < 0:
            pi, pi_conj = pi_conj, pi
        assert pi.b > 0 and is_primary(pi) and is_primary(pi_conj)
        return pi, pi_conj
    raise ArithmeticError(f"no norm representation found for {p}")  # unreachable


def classify_rational_prime(p: int) -> PrimeClass:
    """Ramified / inert / split classification of a rational prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return PrimeClass(p, "ramified")
    if p % 3 == 2:
        return PrimeClass(p, "inert")
    pi, pi_bar = split_prime(p)
    return PrimeClass(p, "split", pi, pi_bar)


@dataclass(frozen=True)
class Factorization:
    """unit · product of powers of distinguished irreducibles.

    Factors are sorted by (norm, a, b) and no two entries are associates;
    value() reconstructs the original element exactly.
    """

    unit: EisensteinInt
    factors: tuple[tuple[EisensteinInt, int], ...]

    def value(self) -> EisensteinInt:
        out = self.unit
        for irr, e in self.factors:
            out = out * irr**e
        return out

    def exponent(self, irr: EisensteinInt) -> int:
        for q, e in self.factors:
            if q == irr:
                return e
        return 0

    def __str__(self) -> str:
        parts = [format_eisenstein(self.unit)]
        for irr, e in self.factors:
            term = format_eisenstein(irr)
            if irr.a != 0 and irr.b != 0:
                term = f"({term})"
            parts.append(f"{term}^{e}" if e > 1 else term)
        return " * ".join(parts)

    def to_json(self) -> str:
        return json.dumps(
            {
                "unit": format_eisenstein(self.unit),
                "factors": [
                    {"irr": format_eisenstein(irr), "exp": e} for irr, e in self.factors
                ],
            }
        )


def factor(x: EisensteinInt) -> Factorization:
    """Canonical factorization of a nonzero element of Z[w].

    Method: factor N(x) over Z; the exponent of 3 in the norm is the beta
    multiplicity, inert primes contribute half their (even) norm exponent,
    and split prime exponents are distributed between pi and conj(pi) by
    exact division.  The unit left over at the end is recorded.
    """
    if x.is_zero():
        raise ValueError("cannot factor zero")
    factors: list[tuple[EisensteinInt, int]] = []
    rest = x
    for p, e in factor_int(x.norm()).items():
        if p == 3:
            for _ in range(e):
                rest = rest / BETA
            factors.append((BETA, e))
        elif p % 3 == 2:
            assert e % 2 == 0, "inert primes enter the norm to even exponents"
            k = e // 2
            rest = rest / EisensteinInt(p**k, 0)
            factors.append((EisensteinInt(p, 0), k))
        else:
            pi, pi_bar = split_prime(p)
            for irr in (pi, pi_bar):
                k = 0
                while True:
                    q, r = divmod(rest, irr)
                    if not r.is_zero():
                        break
                    rest = q
                    k += 1
                if k:
                    factors.append((irr, k))
    assert rest.is_unit(), f"leftover {rest} is not a unit"
    factors.sort(key=lambda t: (t[0].norm(), t[0].a, t[0].b))
    f = Factorization(rest, tuple(factors))
    assert f.value() == x
    return f


def residue_split(x: EisensteinInt, pi: EisensteinInt, p: int) -> int:
    """Image of x in the residue field O/pi identified with Z/p.

    For pi = a + b·w the identification sends w to c = -a·b⁻¹ mod p, the
    root of z² + z + 1 carried by pi.  Ring homomorphism: addition and
    multiplication commute with reduction.
    """
    if pi.norm() != p:
        raise ValueError("pi must have norm p")
    if pi.b % p == 0:
        raise ArithmeticError("not a split irreducible")  # cannot happen
    c = (-pi.a * pow(pi.b, -1, p)) % p
    return (x.a + x.b * c) % p


def is_cube_mod_p(x: int, p: int) -> bool:
    """Whether x is a cube in (Z/p)*, for p = 1 mod 3: x^((p-1)/3) = 1."""
    if p % 3 != 1:
        raise ValueError("p must be 1 mod 3 (otherwise every residue is a cube)")
    if x % p == 0:
        raise ValueError("zero residue")
    return pow(x, (p - 1) // 3, p) == 1


# -- arithmetic in the residue field O/p of an inert prime ----------------
#
# Used by the property tests behind the order-9 obstruction: for inert p the
# unit group has p² - 1 = 3 or 6 mod 9 elements, so it never contains an
# element of multiplicative order 9.


def inert_reduce(x: EisensteinInt, p: int) -> EisensteinInt:
    return EisensteinInt(x.a % p, x.b % p)


def inert_pow(x: EisensteinInt, n: int, p: int) -> EisensteinInt:
    result = EisensteinInt(1, 0)
    base = inert_reduce(x, p)
    while n:
        if n & 1:
            result = inert_reduce(result * base, p)
        n >>= 1
        if n:
            base = inert_reduce(base * base, p)
    return result


def inert_units(p: int) -> list[EisensteinInt]:
    """All invertible elements of O/p (norm prime to p)."""
    return [
        EisensteinInt(a, b)
        for a in range(p)
        for b in range(p)
        if (a * a - a * b + b * b) % p != 0
    ]


def multiplicative_order(x: EisensteinInt, p: int) -> int:
    acc = inert_reduce(x, p)
    if acc.norm() % p == 0:
        raise ValueError("not a unit mod p")
    n = 1
    cur = acc
    one = EisensteinInt(1, 0)
    while cur != one:
        cur = inert_reduce(cur * acc, p)
        n += 1
    return n
