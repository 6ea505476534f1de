"""Repeated-root binary cyclic codes of length 2^a * m.

Includes Castagnoli's formula for the minimum distance and the code pairs of
length 2n, 4n and 2^i m used by the synchronizable-code constructions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .codes import CodeError, CyclicCode, contains, is_dual_containing, min_distance
from .families import mu_minus1_splitting, odd_like_pair
from .fieldtables import factor_divisor, minimal_polys, split_length
from .polyring import BinPoly, _mod, _mul, as_poly, xn1


@dataclass(frozen=True)
class RepeatedRootProfile:
    """g = prod M_i^e_i over the minimal polynomials of x^m - 1, length 2^a m."""

    m: int
    a: int
    multiplicities: dict[int, int]

    @property
    def n(self) -> int:
        return self.m << self.a

    def generator(self) -> BinPoly:
        polys = minimal_polys(self.m)
        g = 1
        for lead, e in self.multiplicities.items():
            for _ in range(e):
                g = _mul(g, polys[lead].bits)
        return BinPoly(g)

    def radical_above(self, t: int) -> BinPoly:
        """Product of the M_i with multiplicity strictly greater than t."""
        polys = minimal_polys(self.m)
        g = 1
        for lead, e in self.multiplicities.items():
            if e > t:
                g = _mul(g, polys[lead].bits)
        return BinPoly(g)


def profile(C: CyclicCode) -> RepeatedRootProfile:
    a, m = split_length(C.n)
    return RepeatedRootProfile(m, a, factor_divisor(C.g.bits, C.n))


@functools.lru_cache(maxsize=None)
def castagnoli_weights(a: int) -> dict[int, int]:
    """{t: P_t} for the admissible t of a length-2^a repeated part.

    t = 2^(a-1) + ... + 2^(a-(j-1)) + r 2^(a-j) with 1 <= j <= a, r in {0, 1},
    and P_t = 2^(j-1) (r + 1); t = 0 carries P_0 = 1.
    """
    out = {0: 1}
    for j in range(1, a + 1):
        head = sum(1 << (a - i) for i in range(1, j))
        for r in (0, 1):
            t = head + r * (1 << (a - j))
            P = (1 << (j - 1)) * (r + 1)
            if out.setdefault(t, P) != P:
                raise ArithmeticError("inconsistent P_t expansion")
    return out


@dataclass(frozen=True)
class CastagnoliTerm:
    t: int
    P: int
    subcode: CyclicCode  # simple-root code of length m
    d: int | None


def castagnoli_terms(C: CyclicCode, budget: int | None = None) -> list[CastagnoliTerm]:
    prof = profile(C)
    terms = []
    for t, P in sorted(castagnoli_weights(prof.a).items()):
        sub = CyclicCode(prof.m, prof.radical_above(t))
        terms.append(CastagnoliTerm(t, P, sub, min_distance(sub, budget)))
    return terms


def castagnoli_distance(C: CyclicCode, budget: int | None = None) -> int | None:
    """min over admissible t of P_t * d(subcode_t); None for the zero code."""
    vals = [term.P * term.d for term in castagnoli_terms(C, budget) if term.d is not None]
    return min(vals) if vals else None


# ---------------------------------------------------------------------------
# code pairs


def _check_divisor(f: BinPoly, n: int):
    if n % 2 == 0 or n < 1:
        raise ValueError(f"n must be odd, got {n}")
    if not f or _mod(xn1(n), f.bits):
        raise CodeError(f"{f.text()} does not divide x^{n}-1")


def dual_containing_2n(f, n: int) -> CyclicCode:
    """<f> of length 2n for a divisor f of x^n - 1; always dual-containing."""
    f = as_poly(f)
    _check_divisor(f, n)
    C = CyclicCode(2 * n, f)
    if not is_dual_containing(C):
        raise ArithmeticError(f"<{f.text()}> of length {2 * n} is not dual-containing")
    return C


@dataclass(frozen=True)
class Pair4n:
    C: CyclicCode  # <f^2>, length 4n
    D: CyclicCode  # <f>, length 4n
    base: CyclicCode  # <f>, length n
    d: int | None


def pair_4n(f, n: int, budget: int | None = None, d: int | None = None) -> Pair4n:
    """C = <f^2> inside D = <f>, both of length 4n.

    ``d`` is the distance of <f> of length n; computed exhaustively when not
    supplied.
    """
    f = as_poly(f)
    _check_divisor(f, n)
    if f == BinPoly(1):
        raise CodeError("f = 1 gives C = D (k1 = k2)")
    C = CyclicCode(4 * n, f * f)
    D = CyclicCode(4 * n, f)
    if not is_dual_containing(C):
        raise ArithmeticError("<f^2> of length 4n is not dual-containing")
    if not contains(D, C):
        raise ArithmeticError("<f^2> is not inside <f>")
    base = CyclicCode(n, f)
    if d is None:
        d = min_distance(base, budget)
    return Pair4n(C, D, base, d)


@dataclass(frozen=True)
class DuadicRRPair:
    C: CyclicCode  # <(x-1) f1>, length 2^i m
    D: CyclicCode  # <f1>, length 2^i m
    f1: BinPoly
    f2: BinPoly
    m: int
    i: int


def duadic_rr_pair(m: int, i: int) -> DuadicRRPair:
    if i < 1:
        raise ValueError("exponent i must be at least 1")
    split = mu_minus1_splitting(m)
    D1, D2 = odd_like_pair(split)
    f1, f2 = D1.g, D2.g
    N = m << i
    C = CyclicCode(N, f1 * BinPoly(3))
    D = CyclicCode(N, f1)
    if not is_dual_containing(C) or not contains(D, C):
        raise ArithmeticError("duadic repeated-root chain fails")
    expected = dual_generator_form(f1, f2, i)
    if C.dual().g != expected:
        raise ArithmeticError("dual generator differs from (x+1)^(2^i-1) f1^(2^i) f2^(2^i-1)")
    return DuadicRRPair(C, D, f1, f2, m, i)


def dual_generator_form(f1: BinPoly, f2: BinPoly, i: int) -> BinPoly:
    """(x+1)^(2^i - 1) f1^(2^i) f2^(2^i - 1): the dual of <(x+1) f1> at length 2^i m."""
    e = 1 << i
    return BinPoly(3) ** (e - 1) * f1**e * f2 ** (e - 1)
