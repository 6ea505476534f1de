"""BCH and duadic code families."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from sympy import factorint

from .codes import CodeError, CyclicCode, is_dual_containing
from .distance import DistanceBudgetExceeded, _span_table, _to_words, _weights, default_budget
from .fieldtables import cosets, minimal_poly, nonreciprocal_split, ord_mod
from .polyring import BinPoly, _mul, xn1


# ---------------------------------------------------------------------------
# BCH


@dataclass(frozen=True)
class BCHCode:
    code: CyclicCode
    delta: int
    offset: int
    defining_set: frozenset[int]


def bch(n: int, delta: int, b: int = 1) -> BCHCode:
    """BCH code with generator lcm{M_b, ..., M_(b+delta-2)}."""
    if n % 2 == 0:
        raise ValueError("BCH length must be odd")
    if not 2 <= delta <= n:
        raise ValueError(f"design distance {delta} outside [2, {n}]")
    table = cosets(n)
    leaders: list[int] = []
    Z: set[int] = set()
    for i in range(b, b + delta - 1):
        lead = table.leader_of[i % n]
        if lead not in leaders:
            leaders.append(lead)
            Z.update(table.coset(lead))
    g = 1
    for lead in leaders:
        g = _mul(g, minimal_poly(lead, n).bits)
    return BCHCode(CyclicCode(n, BinPoly(g)), delta, b, frozenset(Z))


def odd_bch(n: int, top: int) -> CyclicCode:
    """<M_1 M_3 ... M_top> with repeated minimal polynomials taken once."""
    return bch(n, top + 1, 1).code if top >= 1 else CyclicCode(n, BinPoly(1))


def kappa(n: int) -> float:
    m = ord_mod(n)
    return n * (2 ** math.ceil(m / 2) - 1) / (2**m - 1)


def aly_delta_max(n: int) -> int:
    """Largest design distance for which narrow-sense BCH is dual-containing."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    m = ord_mod(n)
    return n * (2 ** math.ceil(m / 2) - 1) // (2**m - 1)


def in_coset_regime(n: int) -> bool:
    m = ord_mod(n)
    return 2 ** (m // 2) < n <= 2**m - 1


def coset_range(n: int) -> tuple[int, int]:
    """Upper limits of the full-size range and of the disjoint odd range."""
    m = ord_mod(n)
    full = n * 2 ** math.ceil(m / 2) // (2**m - 1)
    disjoint = min(math.floor(n * 2 ** math.ceil(m / 2) / (2**m - 1) - 1), n - 1)
    return full, disjoint


@dataclass(frozen=True)
class CosetReport:
    n: int
    x: int
    cardinality: int
    m: int
    full_size: bool
    in_range: bool
    y: int | None = None
    disjoint: bool | None = None
    pair_in_range: bool | None = None


def coset_regime(n: int, x: int, y: int | None = None) -> CosetReport:
    """Coset sizes and disjointness in the narrow-sense BCH regime."""
    if n % 2 == 0 or not in_coset_regime(n):
        raise ValueError(f"n = {n} is outside 2^floor(m/2) < n <= 2^m - 1")
    m = ord_mod(n)
    table = cosets(n)
    full, disjoint_top = coset_range(n)
    size = len(table.coset(x))
    rep = dict(n=n, x=x, cardinality=size, m=m, full_size=size == m, in_range=1 <= x <= full)
    if y is not None:
        rep.update(
            y=y,
            disjoint=table.leader_of[x % n] != table.leader_of[y % n],
            pair_in_range=(
                x != y
                and x % 2 == 1
                and y % 2 == 1
                and 1 <= min(x, y)
                and max(x, y) <= disjoint_top
            ),
        )
    return CosetReport(**rep)


# ---------------------------------------------------------------------------
# duadic


def is_qr(a: int, p: int) -> bool:
    """Euler's criterion for an odd prime p not dividing a."""
    return pow(a, (p - 1) // 2, p) == 1


def duadic_exists(m: int) -> bool:
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and at least 3")
    return all(is_qr(2, p) for p in factorint(m))


def all_primes_minus1_mod8(m: int) -> bool:
    return m > 1 and all(p % 8 == 7 for p in factorint(m))


@dataclass(frozen=True)
class Splitting:
    m: int
    a: int
    S1: frozenset[int]
    S2: frozenset[int]

    def check(self) -> list[tuple[str, bool]]:
        m, a = self.m, self.a
        table = cosets(m)
        nonzero = set(range(1, m))
        unions = all(
            set(table.coset(s)) <= S for S in (self.S1, self.S2) for s in S
        )
        return [
            ("partition", self.S1 | self.S2 == nonzero and not (self.S1 & self.S2)),
            ("coset_unions", unions),
            ("multiplier_swaps", {a * s % m for s in self.S1} == set(self.S2)
             and {a * s % m for s in self.S2} == set(self.S1)),
            ("equal_halves", len(self.S1) == len(self.S2) == (m - 1) // 2),
            ("multiplier_unit", math.gcd(a, m) == 1),
        ]

    def is_valid(self) -> bool:
        return all(ok for _, ok in self.check())

    def to_json(self) -> dict:
        return {"m": self.m, "a": self.a, "S1": sorted(self.S1), "S2": sorted(self.S2)}


def iter_splittings(m: int, a: int | None = None):
    """All splittings modulo m, by multiplier then by coset assignment.

    With ``a`` given only that multiplier is tried.
    """
    table = cosets(m)
    nonzero = [c for c in table if c[0] != 0]
    half = (m - 1) // 2
    mults = [a % m] if a is not None else [u for u in range(2, m) if math.gcd(u, m) == 1]
    for u in mults:
        for mask in range(1 << len(nonzero)):
            S1 = set()
            for i, c in enumerate(nonzero):
                if (mask >> i) & 1:
                    S1.update(c)
            if len(S1) != half:
                continue
            S2 = set(range(1, m)) - S1
            if {u * s % m for s in S1} == S2:
                yield Splitting(m, u, frozenset(S1), frozenset(S2))


def mu_minus1_splitting(m: int) -> Splitting:
    """Canonical splitting given by the multiplier -1.

    Each reciprocal coset pair {C, -C} is assigned whole; assignments are
    tried in lexicographic order (C into S1 first) and the first valid one
    is returned.
    """
    if not all_primes_minus1_mod8(m):
        raise ValueError(f"some prime factor of {m} is not -1 mod 8")
    selfrec, pairs = nonreciprocal_split(m)
    table = cosets(m)
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        S1, S2 = set(), set()
        for flip, (i, j) in zip(choice, pairs):
            lo, hi = (j, i) if flip else (i, j)
            S1.update(table.coset(lo))
            S2.update(table.coset(hi))
        for s in selfrec:  # cannot occur when every prime is -1 mod 8
            S1.update(table.coset(s))
        sp = Splitting(m, m - 1, frozenset(S1), frozenset(S2))
        if sp.is_valid():
            return sp
    raise ArithmeticError(f"no mu_-1 splitting found modulo {m}")


def _product_over(S, m: int) -> BinPoly:
    table = cosets(m)
    leaders = sorted({table.leader_of[s] for s in S})
    g = 1
    for lead in leaders:
        g = _mul(g, minimal_poly(lead, m).bits)
    return BinPoly(g)


def splitting_leaders(split: Splitting) -> tuple[list[int], list[int]]:
    table = cosets(split.m)
    return (
        sorted({table.leader_of[s] for s in split.S1}),
        sorted({table.leader_of[s] for s in split.S2}),
    )


def odd_like_pair(split: Splitting) -> tuple[CyclicCode, CyclicCode]:
    """Codes with defining sets S1 and S2."""
    m = split.m
    f1, f2 = _product_over(split.S1, m), _product_over(split.S2, m)
    if f1 * f2 * BinPoly(3) != BinPoly(xn1(m)):
        raise ArithmeticError("odd-like generators do not factor x^m - 1")
    return CyclicCode(m, f1), CyclicCode(m, f2)


def even_like_pair(split: Splitting) -> tuple[CyclicCode, CyclicCode]:
    """Codes with defining sets {0} u S1 and {0} u S2."""
    D1, D2 = odd_like_pair(split)
    x1 = BinPoly(3)
    return CyclicCode(split.m, D1.g * x1), CyclicCode(split.m, D2.g * x1)


def square_root_bound(m: int) -> int:
    """Least d with d^2 - d + 1 >= m."""
    d = 1
    while d * d - d + 1 < m:
        d += 1
    return d


def min_odd_weight(C: CyclicCode, budget: int | None = None) -> int:
    """Least weight of an odd-weight codeword (exhaustive over 2^k codewords)."""
    budget = default_budget() if budget is None else budget
    if (1 << C.k) > budget:
        raise DistanceBudgetExceeded("odd-weight search over budget")
    # odd-weight words of C = words of C off the even-weight subcode; weigh the
    # coset (x+1)C + g directly
    even = CyclicCode(C.n, C.g * BinPoly(3)) if C.g(1) else C
    if even is C:
        raise ValueError("code has no odd-weight codewords")
    rows = even.generator_rows()
    n_words = max(1, -(-C.n // 64))
    table = _span_table(_to_words(rows, n_words))
    shift = _to_words([C.g.bits], n_words)[0]
    best = C.n + 1
    step = max(1, (1 << 22) // n_words)
    for s in range(0, table.shape[0], step):
        best = min(best, int(_weights(table[s : s + step] ^ shift).min()))
    return best


def subset_code(m: int, T) -> CyclicCode:
    """<prod_{j in T} M_j> for T picking at most one leader of each reciprocal pair."""
    if not all_primes_minus1_mod8(m):
        raise ValueError(f"some prime factor of {m} is not -1 mod 8")
    table = cosets(m)
    T = sorted({table.leader_of[t % m] for t in T})
    if 0 in T:
        raise CodeError("T may not contain the leader 0")
    _, pairs = nonreciprocal_split(m)
    partner = {i: j for i, j in pairs} | {j: i for i, j in pairs}
    for t in T:
        if t not in partner:
            raise CodeError(f"{t} is not a leader of a reciprocal pair")
        if partner[t] in T:
            raise CodeError(f"T contains the reciprocal pair {t}, {partner[t]}")
    g = 1
    for t in T:
        g = _mul(g, minimal_poly(t, m).bits)
    C = CyclicCode(m, BinPoly(g))
    if not is_dual_containing(C):
        raise ArithmeticError("subset code is not dual-containing")
    return C


def valid_subsets(m: int):
    """Every T choosing at most one leader per reciprocal pair."""
    _, pairs = nonreciprocal_split(m)
    for choice in itertools.product((None, 0, 1), repeat=len(pairs)):
        yield [p[c] for p, c in zip(pairs, choice) if c is not None]
