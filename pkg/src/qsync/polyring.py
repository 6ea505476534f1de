"""Polynomials over GF(2) and the order of a polynomial.

A polynomial b_n x^n + ... + b_1 x + b_0 is stored as the nonnegative
integer with bit i equal to b_i, so addition is XOR and the zero
polynomial is 0.  The module-level ``_mul``/``_divmod``/... helpers work on
raw ints and are what the hot loops elsewhere in the package use;
:class:`BinPoly` wraps them with operators and parsing.
"""

from __future__ import annotations

import functools
import math
import re

from sympy import factorint

ZERO_DEGREE = float("-inf")
DEFAULT_ORDER_CAP = 1 << 16


# ---------------------------------------------------------------------------
# raw int arithmetic


def _deg(a: int) -> int:
    return a.bit_length() - 1


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while True:
        da = a.bit_length()
        if da < db:
            return a
        a ^= b << (da - db)


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while True:
        da = a.bit_length()
        if da < db:
            return q, a
        s = da - db
        q |= 1 << s
        a ^= b << s


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    # Interleaved reduction keeps operands near deg m.
    dm = m.bit_length() - 1
    a = _mod(a, m)
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        a <<= 1
        if (a >> dm) & 1:
            a ^= m
    return c


def _powmod(a: int, e: int, m: int) -> int:
    r = _mod(1, m)
    a = _mod(a, m)
    while e:
        if e & 1:
            r = _mulmod(r, a, m)
        e >>= 1
        if e:
            a = _mulmod(a, a, m)
    return r


def _square(a: int) -> int:
    # Frobenius: spread bits apart.
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return r


def _sqrt(a: int) -> int:
    # Inverse of _square for polynomials with only even exponents.
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 2
        i += 1
    return r


def _derivative(a: int) -> int:
    # d/dx x^i = i x^(i-1); only odd exponents survive in characteristic 2.
    return (a >> 1) & _even_bits(a.bit_length())


@functools.lru_cache(maxsize=None)
def _even_bits(nbits: int) -> int:
    # bit j of (a >> 1) is the coefficient of x^(j+1); keep even j
    return int("01" * (nbits // 2 + 1), 2)


def _reciprocal(a: int) -> int:
    if a == 0:
        return 0
    return int(format(a, "b")[::-1], 2)


def _strip_x(a: int) -> int:
    if a == 0:
        raise ValueError("the zero polynomial has no order")
    return a >> ((a & -a).bit_length() - 1)


def xn1(n: int) -> int:
    """Bitmask of x^n - 1 (= x^n + 1 over GF(2))."""
    return (1 << n) | 1


# ---------------------------------------------------------------------------
# the wrapped type


class BinPoly:
    """Immutable polynomial over GF(2).

    ``BinPoly(0b1011)`` is x^3 + x + 1.  Operators ``+ - * // % divmod``,
    ``==`` and ``hash`` behave as expected; ``deg`` of the zero polynomial
    is ``-inf`` so that ``deg(a*b) == deg(a) + deg(b)`` always holds.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if isinstance(bits, BinPoly):
            bits = bits.bits
        if bits < 0:
            raise ValueError("coefficient bitmask must be nonnegative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BinPoly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> BinPoly:
        """Build from a coefficient sequence, index 0 = constant term."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_exponents(cls, exps) -> BinPoly:
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> BinPoly:
        """Parse sparse text ("x^3+x+1") or compact hex ("b", "0xb")."""
        return cls(parse_bits(text))

    @classmethod
    def from_hex(cls, text: str) -> BinPoly:
        return cls(int(text, 16))

    # -- properties

    @property
    def deg(self):
        return _deg(self.bits) if self.bits else ZERO_DEGREE

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def __call__(self, x: int) -> int:
        """Evaluate at x in GF(2)."""
        if x & 1:
            return self.bits.bit_count() & 1
        return self.bits & 1

    # -- arithmetic

    def __add__(self, other):
        return BinPoly(self.bits ^ _as_bits(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return BinPoly(_mul(self.bits, _as_bits(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        r, a = 1, self.bits
        while e:
            if e & 1:
                r = _mul(r, a)
            e >>= 1
            if e:
                a = _mul(a, a)
        return BinPoly(r)

    def __divmod__(self, other):
        q, r = _divmod(self.bits, _as_bits(other))
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other):
        return BinPoly(_divmod(self.bits, _as_bits(other))[0])

    def __mod__(self, other):
        return BinPoly(_mod(self.bits, _as_bits(other)))

    def divides(self, other) -> bool:
        """True if self | other."""
        return _mod(_as_bits(other), self.bits) == 0

    # -- comparison and printing

    def __eq__(self, other):
        if isinstance(other, BinPoly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self):
        return hash(("BinPoly", self.bits))

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def __repr__(self):
        return f"BinPoly({self.text()!r})"

    def __str__(self):
        return self.text()

    def text(self) -> str:
        return format_text(self.bits)

    def hex(self) -> str:
        return format(self.bits, "x")

    def reciprocal(self) -> BinPoly:
        return reciprocal(self)


def _as_bits(p) -> int:
    if isinstance(p, BinPoly):
        return p.bits
    if isinstance(p, int):
        return p
    raise TypeError(f"cannot use {type(p).__name__} as a GF(2) polynomial")


ONE = BinPoly(1)
ZERO = BinPoly(0)
X = BinPoly(2)


# ---------------------------------------------------------------------------
# text forms

_TERM = re.compile(r"^(?:1|0|x|x\^(\d+))$")


def format_text(bits: int) -> str:
    if bits == 0:
        return "0"
    terms = []
    for e in range(bits.bit_length() - 1, -1, -1):
        if (bits >> e) & 1:
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return "+".join(terms)


def parse_bits(text: str) -> int:
    s = text.strip().replace(" ", "").lower()
    if not s:
        raise ValueError("empty polynomial")
    if "x" in s and not s.startswith("0x"):
        bits = 0
        for term in s.replace("-", "+").split("+"):
            m = _TERM.match(term)
            if m is None:
                raise ValueError(f"bad polynomial term {term!r} in {text!r}")
            if term == "0":
                continue
            e = 0 if term == "1" else 1 if term == "x" else int(m.group(1))
            bits ^= 1 << e
        return bits
    if s.startswith("0x"):
        s = s[2:]
    try:
        return int(s, 16)
    except ValueError:
        raise ValueError(f"cannot parse polynomial {text!r}") from None


def as_poly(p) -> BinPoly:
    """Coerce an int, string or BinPoly to BinPoly."""
    if isinstance(p, BinPoly):
        return p
    if isinstance(p, str):
        return BinPoly.parse(p)
    return BinPoly(p)


# ---------------------------------------------------------------------------
# the public operations


def add(a, b) -> BinPoly:
    return as_poly(a) + as_poly(b)


def mul(a, b) -> BinPoly:
    return as_poly(a) * as_poly(b)


def poly_divmod(a, b) -> tuple[BinPoly, BinPoly]:
    return divmod(as_poly(a), as_poly(b))


def gcd(a, b) -> BinPoly:
    a, b = as_poly(a), as_poly(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    return BinPoly(_gcd(a.bits, b.bits))


def lcm(a, b) -> BinPoly:
    a, b = as_poly(a), as_poly(b)
    if not a or not b:
        raise ValueError("lcm needs nonzero arguments")
    g = _gcd(a.bits, b.bits)
    return BinPoly(_mul(_divmod(a.bits, g)[0], b.bits))


def reciprocal(f) -> BinPoly:
    """x^deg(f) f(1/x): the coefficient sequence reversed."""
    return BinPoly(_reciprocal(as_poly(f).bits))


# ---------------------------------------------------------------------------
# order of a polynomial


def squarefree_decomposition(a: int) -> dict[int, int]:
    """Return {multiplicity: squarefree part} with a = prod part**mult.

    Characteristic-2 variant of Yun's algorithm; ``a`` must be nonzero.
    """
    if a == 0:
        raise ValueError("zero polynomial")
    out: dict[int, int] = {}
    _sqf(a, 1, out)
    return out


def _sqf(a: int, scale: int, out: dict[int, int]) -> None:
    if a == 1:
        return
    d = _derivative(a)
    if d == 0:
        _sqf(_sqrt(a), 2 * scale, out)
        return
    c = _gcd(a, d)
    w = _divmod(a, c)[0]
    i = 1
    while w != 1:
        y = _gcd(w, c)
        z = _divmod(w, y)[0]
        if z != 1:
            key = i * scale
            out[key] = _mul(out.get(key, 1), z)
        w = y
        c = _divmod(c, y)[0]
        i += 1
    if c != 1:
        _sqf(_sqrt(c), 2 * scale, out)


def distinct_degree_factorization(a: int) -> dict[int, int]:
    """Split a squarefree polynomial with a(0) != 0 by irreducible-factor degree.

    Returns {d: product of all irreducible factors of degree d}.
    """
    out: dict[int, int] = {}
    h = 2  # x^(2^d) mod a
    d = 0
    while a.bit_length() - 1 >= 2 * (d + 1):
        d += 1
        h = _mulmod(h, h, a)
        g = _gcd(a, h ^ 2)
        if g != 1:
            out[d] = g
            a = _divmod(a, g)[0]
            h = _mod(h, a)
    if a != 1:
        out[_deg(a)] = a
    return out


@functools.lru_cache(maxsize=None)
def _mersenne_primes(d: int) -> tuple[int, ...]:
    return tuple(sorted(factorint((1 << d) - 1)))


@functools.lru_cache(maxsize=4096)
def _order_same_degree(s: int, d: int) -> int:
    # Every irreducible factor of s has degree d, so ord(s) | 2^d - 1.
    if s == 3:  # x + 1
        return 1
    e = (1 << d) - 1
    for q in _mersenne_primes(d):
        while e % q == 0 and _powmod(2, e // q, s) == 1:
            e //= q
    return e


def _order_squarefree(s: int) -> int:
    e = 1
    for d, part in distinct_degree_factorization(s).items():
        e = math.lcm(e, _order_same_degree(part, d))
    return e


def order(f) -> int:
    """Least e >= 1 with f | x^e - 1 (after removing any factor x^h).

    Uses the factored rule ord(p^t) = ord(p) * 2^ceil(log2 t) and takes the
    lcm over irreducible powers; the order of an irreducible p is found among
    the divisors of 2^deg(p) - 1.
    """
    a = _strip_x(as_poly(f).bits)
    if a == 1:
        return 1
    e = 1
    for mult, part in squarefree_decomposition(a).items():
        lift = 1 << (mult - 1).bit_length()
        e = math.lcm(e, _order_squarefree(part) * lift)
    return e


def order_bruteforce(f, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Reference order: walk x, x^2, x^3, ... mod f until hitting 1."""
    a = _strip_x(as_poly(f).bits)
    if a == 1:
        return 1
    da = _deg(a)
    r = 1
    for e in range(1, cap + 1):
        r <<= 1
        if (r >> da) & 1:
            r ^= a
        if r == 1:
            return e
    raise ValueError(f"order exceeds the cap {cap}")
