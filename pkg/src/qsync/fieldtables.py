"""Cyclotomic cosets, minimal polynomials and the factorization of x^N - 1.

Field elements of GF(2^m) are ints in the polynomial basis modulo a fixed
irreducible polynomial of degree m (the least one, as an integer).  The n-th
root of unity is the first power x^((2^m-1)/n), (x+1)^(...), ... that has
multiplicative order exactly n, so every table here is deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from sympy import factorint

from .polyring import BinPoly, _divmod, _gcd, _mod, _mul, _mulmod, _powmod, xn1


def ord_mod(n: int, base: int = 2) -> int:
    """Multiplicative order of ``base`` modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 1
    if _int_gcd(base, n) != 1:
        raise ValueError(f"{base} is not invertible modulo {n}")
    e, x = 1, base % n
    while x != 1:
        x = x * base % n
        e += 1
    return e


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class CosetTable:
    """2-cyclotomic cosets modulo an odd n, ordered by leader (least element)."""

    n: int
    cosets: tuple[tuple[int, ...], ...]
    leader_of: dict[int, int] = field(repr=False, compare=False)

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def coset(self, s: int) -> tuple[int, ...]:
        return self.cosets[self.index(s)]

    def index(self, s: int) -> int:
        return self._pos[self.leader_of[s % self.n]]

    @functools.cached_property
    def _pos(self) -> dict[int, int]:
        return {c[0]: i for i, c in enumerate(self.cosets)}

    def __len__(self):
        return len(self.cosets)

    def __iter__(self):
        return iter(self.cosets)


@functools.lru_cache(maxsize=None)
def cosets(n: int) -> CosetTable:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"cyclotomic cosets need an odd positive modulus, got {n}")
    seen: dict[int, int] = {}
    out = []
    for s in range(n):
        if s in seen:
            continue
        orbit = []
        x = s
        while x not in orbit:
            orbit.append(x)
            x = 2 * x % n
        for x in orbit:
            seen[x] = s
        out.append(tuple(sorted(orbit)))
    return CosetTable(n, tuple(out), seen)


# ---------------------------------------------------------------------------
# GF(2^m)


def _is_irreducible(p: int) -> bool:
    # Rabin's test.
    m = p.bit_length() - 1
    if m < 1:
        return False
    h = 2
    powers = [2]
    for _ in range(m):
        h = _mulmod(h, h, p)
        powers.append(h)
    if powers[m] != _mod(2, p):
        return False
    for q in factorint(m):
        if _gcd(p, powers[m // q] ^ 2) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def field_modulus(m: int) -> int:
    """Least irreducible polynomial of degree m (as an int bitmask)."""
    p = (1 << m) | 1
    while not _is_irreducible(p):
        p += 2
    return p


@dataclass(frozen=True)
class FieldTower:
    """GF(2^m) with m = ord_n(2), and a fixed element ``alpha`` of order n."""

    n: int
    m: int
    modulus: int
    alpha: int

    def mul(self, a: int, b: int) -> int:
        return _mulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        return _powmod(a, e, self.modulus)

    def root(self, j: int) -> int:
        """alpha^j."""
        return self.pow(self.alpha, j % self.n)

    def element_order(self, a: int) -> int:
        e = (1 << self.m) - 1
        for q in factorint(e):
            while e % q == 0 and self.pow(a, e // q) == 1:
                e //= q
        return e


@functools.lru_cache(maxsize=None)
def field_tower(n: int) -> FieldTower:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"field tower needs an odd positive n, got {n}")
    m = ord_mod(n)
    mod = field_modulus(m)
    cof = ((1 << m) - 1) // n
    primes = list(factorint(n))
    beta = 2 if m > 1 else 1
    while True:
        a = _powmod(beta, cof, mod)
        if a != 0 and all(_powmod(a, n // q, mod) != 1 for q in primes):
            return FieldTower(n, m, mod, a)
        beta += 1


def _poly_mul_ext(a: list[int], b: list[int], tower: FieldTower) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= tower.mul(x, y)
    return out


@functools.lru_cache(maxsize=None)
def _minimal_poly_bits(s: int, n: int) -> int:
    if n == 1 or s % n == 0:
        return 0b11
    tower = field_tower(n)
    poly = [1]  # coefficients in GF(2^m), index 0 = constant
    for j in cosets(n).coset(s):
        poly = _poly_mul_ext(poly, [tower.root(j), 1], tower)
    bits = 0
    for i, c in enumerate(poly):
        if c not in (0, 1):
            raise ArithmeticError(f"M_{s} mod {n} has a coefficient outside GF(2)")
        bits |= c << i
    return bits


def minimal_poly(s: int, n: int) -> BinPoly:
    """Minimal polynomial over GF(2) of alpha^s, alpha the fixed n-th root of unity."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    return BinPoly(_minimal_poly_bits(cosets(n).leader_of[s % n], n))


def minimal_polys(n: int) -> dict[int, BinPoly]:
    """{leader: M_leader} for every coset modulo odd n."""
    return {c[0]: minimal_poly(c[0], n) for c in cosets(n)}


def split_length(N: int) -> tuple[int, int]:
    """Write N = 2^a * m with m odd; return (a, m)."""
    if N < 1:
        raise ValueError("length must be positive")
    a = (N & -N).bit_length() - 1
    return a, N >> a


def factor_cycl(N: int) -> list[tuple[BinPoly, int]]:
    """Irreducible factorization of x^N - 1 as [(M_i, 2^a)], ordered by coset leader."""
    a, m = split_length(N)
    return [(p, 1 << a) for p in minimal_polys(m).values()]


def product(factors) -> BinPoly:
    bits = 1
    for p, e in factors:
        for _ in range(e):
            bits = _mul(bits, int(p))
    return BinPoly(bits)


def negated_leader(s: int, n: int) -> int:
    return cosets(n).leader_of[(-s) % n]


def nonreciprocal_split(m: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Classify nonzero coset leaders modulo odd m.

    Returns (self-reciprocal leaders, reciprocal pairs (i, j)) where
    M_j = M_i^* and i < j.  Leader 0 is left out of both lists.
    """
    table = cosets(m)
    selfrec: list[int] = []
    pairs: list[tuple[int, int]] = []
    for lead in table.leaders:
        if lead == 0:
            continue
        neg = negated_leader(lead, m)
        if neg == lead:
            selfrec.append(lead)
        elif lead < neg:
            pairs.append((lead, neg))
    return selfrec, pairs


def multiplicity(f: int, p: int) -> int:
    """Largest e with p^e | f (f nonzero, p of positive degree)."""
    e = 0
    while True:
        q, r = _divmod(f, p)
        if r:
            return e
        f = q
        e += 1


def factor_divisor(g, N: int) -> dict[int, int]:
    """Exponents {leader: e} of a divisor g of x^N - 1 over the M_i of the odd part."""
    g = int(BinPoly(g) if not isinstance(g, int) else g)
    if g == 0 or _mod(xn1(N), g):
        raise ValueError("not a divisor of x^N - 1")
    _, m = split_length(N)
    out = {}
    for lead, p in minimal_polys(m).items():
        e = multiplicity(g, int(p))
        out[lead] = e
        for _ in range(e):
            g = _divmod(g, int(p))[0]
    if g != 1:
        raise ArithmeticError("leftover factor after dividing out minimal polynomials")
    return out


def iter_divisors(N: int):
    """Every monic divisor of x^N - 1, as (BinPoly, {leader: exponent})."""
    a, m = split_length(N)
    polys = list(minimal_polys(m).items())
    top = 1 << a

    def rec(i, bits, exps):
        if i == len(polys):
            yield BinPoly(bits), dict(exps)
            return
        lead, p = polys[i]
        cur = bits
        for e in range(top + 1):
            exps.append((lead, e))
            yield from rec(i + 1, cur, exps)
            exps.pop()
            cur = _mul(cur, int(p))

    yield from rec(0, 1, [])


def dump(n_or_N: int, what: str = "factor") -> dict:
    """JSON-ready view of cosets (odd n) or of the factorization of x^N - 1."""
    if what == "cosets":
        table = cosets(n_or_N)
        return {
            "n": table.n,
            "cosets": {
                str(c[0]): {
                    "elements": list(c),
                    "minimal_poly": {
                        "text": minimal_poly(c[0], table.n).text(),
                        "hex": minimal_poly(c[0], table.n).hex(),
                    },
                }
                for c in table
            },
        }
    a, m = split_length(n_or_N)
    return {
        "N": n_or_N,
        "factors": {
            str(lead): {"text": p.text(), "hex": p.hex(), "multiplicity": 1 << a}
            for lead, p in minimal_polys(m).items()
        },
    }
