"""Binary cyclic codes, generator matrices and product codes.

Containment convention used throughout: ``contains(C, D)`` is True when
D is a subcode of C.  For cyclic codes of the same length this holds exactly
when the generator of C divides the generator of D.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass

from . import gf2
from .distance import DistanceBudgetExceeded, search
from .fieldtables import cosets, minimal_polys
from .polyring import BinPoly, _divmod, _gcd, _mod, _mul, _reciprocal, as_poly, xn1

__all__ = [
    "CyclicCode",
    "GeneratorMatrix",
    "ProductCode",
    "DistanceBudgetExceeded",
    "cyclic",
    "full_space",
    "zero_code",
    "dual",
    "code_sum",
    "intersect",
    "contains",
    "is_dual_containing",
    "is_self_orthogonal",
    "min_distance",
    "defining_set",
    "bch_bound",
    "kronecker",
    "product_code",
]


class CodeError(ValueError):
    """Invalid code construction or incompatible operands."""


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length n generated by g, where g | x^n - 1.

    Repeated-root lengths (even n) are allowed.  ``g = x^n - 1`` gives the
    zero code, ``g = 1`` the full space.
    """

    n: int
    g: BinPoly

    def __post_init__(self):
        g = as_poly(self.g)
        object.__setattr__(self, "g", g)
        if self.n < 1:
            raise CodeError("length must be positive")
        if not g or _mod(xn1(self.n), g.bits):
            raise CodeError(f"{g.text()} does not divide x^{self.n}-1")

    @property
    def k(self) -> int:
        return self.n - (self.g.bits.bit_length() - 1)

    @property
    def check_poly(self) -> BinPoly:
        """h = (x^n - 1) / g."""
        return BinPoly(_divmod(xn1(self.n), self.g.bits)[0])

    def generator_rows(self) -> list[int]:
        g = self.g.bits
        return [g << i for i in range(self.k)]

    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix(self.n, tuple(self.generator_rows()))

    def syndrome_columns(self) -> list[int]:
        """Syndrome x^j mod g of each unit vector; a parity check of the code."""
        g = self.g.bits
        dg = g.bit_length() - 1
        out = []
        r = 1 if dg > 0 else 0
        for _ in range(self.n):
            out.append(r)
            if dg > 0:
                r <<= 1
                if (r >> dg) & 1:
                    r ^= g
        return out

    def is_codeword(self, word: int) -> bool:
        return word < (1 << self.n) and _mod(word, self.g.bits) == 0

    def random_codeword(self, rng: random.Random) -> int:
        m = rng.getrandbits(self.k) if self.k else 0
        return _mul(m, self.g.bits)

    def __contains__(self, word: int) -> bool:
        return self.is_codeword(int(word))

    # thin wrappers so codes read naturally
    def dual(self) -> CyclicCode:
        return dual(self)

    def min_distance(self, budget: int | None = None, method: str = "auto"):
        return min_distance(self, budget, method)

    def to_json(self, d=None, d_source=None) -> dict:
        return {
            "n": self.n,
            "g_hex": self.g.hex(),
            "g_text": self.g.text(),
            "k": self.k,
            "d": d,
            "d_source": d_source,
        }

    @classmethod
    def from_json(cls, obj: dict) -> CyclicCode:
        return cls(int(obj["n"]), BinPoly(int(obj["g_hex"], 16)))

    def __repr__(self):
        return f"CyclicCode(n={self.n}, k={self.k}, g={self.g.text()!r})"


def cyclic(n: int, g) -> CyclicCode:
    return CyclicCode(n, as_poly(g))


def full_space(n: int) -> CyclicCode:
    return CyclicCode(n, BinPoly(1))


def zero_code(n: int) -> CyclicCode:
    return CyclicCode(n, BinPoly(xn1(n)))


def dual(C: CyclicCode) -> CyclicCode:
    """Generator (x^n - 1) / g*(x)."""
    return CyclicCode(C.n, BinPoly(_divmod(xn1(C.n), _reciprocal(C.g.bits))[0]))


def _same_length(C: CyclicCode, D: CyclicCode):
    if C.n != D.n:
        raise CodeError(f"length mismatch: {C.n} vs {D.n}")


def code_sum(C1: CyclicCode, C2: CyclicCode) -> CyclicCode:
    _same_length(C1, C2)
    return CyclicCode(C1.n, BinPoly(_gcd(C1.g.bits, C2.g.bits)))


def intersect(C1: CyclicCode, C2: CyclicCode) -> CyclicCode:
    _same_length(C1, C2)
    a, b = C1.g.bits, C2.g.bits
    return CyclicCode(C1.n, BinPoly(_mul(_divmod(a, _gcd(a, b))[0], b)))


def contains(C: CyclicCode, D: CyclicCode) -> bool:
    """True when D is a subcode of C (g_C divides g_D)."""
    _same_length(C, D)
    return _mod(D.g.bits, C.g.bits) == 0


def is_dual_containing(C: CyclicCode) -> bool:
    return contains(C, dual(C))


def is_self_orthogonal(C: CyclicCode) -> bool:
    return contains(dual(C), C)


# ---------------------------------------------------------------------------
# generator matrices


@dataclass(frozen=True)
class GeneratorMatrix:
    """Full-row-rank binary matrix; row i is an int with bit j = column j."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r >> self.n for r in rows):
            raise CodeError("row longer than the code length")
        if gf2.rank(rows) != len(rows):
            raise CodeError("generator matrix rows are linearly dependent")

    @classmethod
    def spanning(cls, n: int, rows) -> GeneratorMatrix:
        """Basis of the row space of possibly dependent ``rows``."""
        return cls(n, tuple(gf2.rref(rows)))

    @property
    def k(self) -> int:
        return len(self.rows)

    def to_array(self):
        import numpy as np

        return np.array([[(r >> j) & 1 for j in range(self.n)] for r in self.rows], dtype=np.uint8)

    def parity_columns(self) -> list[int]:
        h = gf2.nullspace(self.rows, self.n)
        return [sum(((row >> j) & 1) << i for i, row in enumerate(h)) for j in range(self.n)]

    def dual(self) -> GeneratorMatrix:
        return GeneratorMatrix(self.n, tuple(gf2.nullspace(self.rows, self.n)))

    def contains(self, other: GeneratorMatrix) -> bool:
        """Row space of ``other`` is inside this one."""
        return self.n == other.n and gf2.span_contains(self.rows, other.rows)

    def permuted(self, perm: list[int]) -> GeneratorMatrix:
        """Move column j to position perm[j]."""
        return GeneratorMatrix(self.n, tuple(_permute(r, perm) for r in self.rows))

    def min_distance(self, budget: int | None = None, method: str = "auto"):
        return min_distance(self, budget, method)


def _permute(v: int, perm: list[int]) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out |= 1 << perm[j]
        v >>= 1
        j += 1
    return out


def kronecker(G1: GeneratorMatrix, G2: GeneratorMatrix) -> GeneratorMatrix:
    """Rows (r1, r2) -> r1 (x) r2 with column index i*n2 + j."""
    n2 = G2.n
    rows = []
    for a in G1.rows:
        for b in G2.rows:
            v = 0
            i = 0
            x = a
            while x:
                if x & 1:
                    v |= b << (i * n2)
                x >>= 1
                i += 1
            rows.append(v)
    return GeneratorMatrix(G1.n * n2, tuple(rows))


def crt_permutation(n1: int, n2: int) -> list[int]:
    """perm[i*n2 + j] = the l in Z_{n1 n2} with l = i mod n1 and l = j mod n2."""
    if math.gcd(n1, n2) != 1:
        raise CodeError(f"lengths {n1} and {n2} are not coprime")
    N = n1 * n2
    perm = [0] * N
    for l in range(N):
        perm[(l % n1) * n2 + (l % n2)] = l
    return perm


def cyclic_generator_of(G: GeneratorMatrix) -> BinPoly:
    """Generator polynomial of a row space that is closed under cyclic shift.

    The lowest-degree nonzero word of a cyclic code is its generator; it is
    the last row of the high-pivot echelon form.  Raises CodeError if the
    space is not cyclic.
    """
    if G.k == 0:
        return BinPoly(xn1(G.n))
    ech = gf2.rref(G.rows)
    g = ech[-1]
    code = CyclicCode(G.n, BinPoly(g)) if not _mod(xn1(G.n), g) else None
    if code is None or code.k != G.k:
        raise CodeError("row space is not a cyclic code")
    if not all(gf2.in_span(r, ech) for r in code.generator_rows()):
        raise CodeError("row space is not a cyclic code")
    return code.g


@dataclass(frozen=True)
class ProductCode:
    """C1 (x) C2 with its Kronecker generator matrix.

    When the lengths are coprime, ``cyclic`` holds the product as a cyclic
    code after the CRT reordering of coordinates given by ``perm``.
    """

    n1: int
    n2: int
    matrix: GeneratorMatrix
    perm: list[int] | None
    cyclic: CyclicCode | None

    @property
    def n(self) -> int:
        return self.n1 * self.n2

    @property
    def k(self) -> int:
        return self.matrix.k


def product_code(C1, C2) -> ProductCode:
    G1 = C1 if isinstance(C1, GeneratorMatrix) else C1.generator_matrix()
    G2 = C2 if isinstance(C2, GeneratorMatrix) else C2.generator_matrix()
    G = kronecker(G1, G2)
    perm = cyc = None
    if math.gcd(G1.n, G2.n) == 1:
        perm = crt_permutation(G1.n, G2.n)
        g = cyclic_generator_of(G.permuted(perm))
        cyc = CyclicCode(G.n, g)
        if g.deg != G.n - G.k:
            raise ArithmeticError("extracted product generator has the wrong degree")
    return ProductCode(G1.n, G2.n, G, perm, cyc)


def row_array(word: int, n1: int, n2: int) -> list[list[int]]:
    """View a Kronecker-ordered word of length n1*n2 as an n1 x n2 array."""
    return [[(word >> (i * n2 + j)) & 1 for j in range(n2)] for i in range(n1)]


def tensor_inner_products(G1: GeneratorMatrix, G2: GeneratorMatrix):
    """Yield (direct, factored) inner products of every pair of Kronecker rows.

    ``direct`` is computed on the length n1*n2 vectors; ``factored`` is the
    product <v_i|v_j><w_k|w_l> of the component inner products.
    """
    K = kronecker(G1, G2)
    idx = [(a, b) for a in G1.rows for b in G2.rows]
    for p, (a1, b1) in enumerate(idx):
        for q in range(p, len(idx)):
            a2, b2 = idx[q]
            yield gf2.dot(K.rows[p], K.rows[q]), gf2.dot(a1, a2) * gf2.dot(b1, b2)


def tensor_self_orthogonal(G1: GeneratorMatrix, G2: GeneratorMatrix) -> bool:
    ok = True
    for direct, factored in tensor_inner_products(G1, G2):
        if direct != factored:
            raise ArithmeticError("tensor inner product does not factor")
        ok = ok and direct == 0
    return ok


# ---------------------------------------------------------------------------
# distance


def min_distance(C, budget: int | None = None, method: str = "auto") -> int | None:
    """Exact minimum distance; None for the zero code.

    Raises DistanceBudgetExceeded when neither exhaustive route fits.
    """
    return min_distance_with_method(C, budget, method)[0]


def min_distance_with_method(C, budget=None, method="auto"):
    if isinstance(C, CyclicCode):
        return _cyclic_distance(C.n, C.g.bits, budget, method)
    if isinstance(C, ProductCode):
        C = C.matrix
    if isinstance(C, GeneratorMatrix):
        return search(lambda: C.rows, C.parity_columns, C.n, C.k, budget, method)
    raise TypeError(f"no distance for {type(C).__name__}")


@functools.lru_cache(maxsize=4096)
def _cyclic_distance(n: int, g: int, budget, method):
    C = CyclicCode(n, BinPoly(g))
    return search(C.generator_rows, C.syndrome_columns, n, C.k, budget, method)


# ---------------------------------------------------------------------------
# defining sets


def defining_set(C: CyclicCode) -> frozenset[int]:
    """Exponents i with M_i | g (simple-root codes only)."""
    if C.n % 2 == 0:
        raise CodeError("defining sets are only defined for odd lengths")
    g = C.g.bits
    table = cosets(C.n)
    Z: set[int] = set()
    for lead, p in minimal_polys(C.n).items():
        if _mod(g, p.bits) == 0:
            Z.update(table.coset(lead))
    return frozenset(Z)


def bch_bound(Z, n: int) -> int:
    """1 + longest cyclic run of consecutive residues in Z (n + 1 if Z is everything)."""
    Z = {z % n for z in Z}
    if len(Z) >= n:
        return n + 1
    best = 0
    for start in Z:
        if (start - 1) % n in Z:
            continue
        run = 0
        while (start + run) % n in Z:
            run += 1
        best = max(best, run)
    return best + 1
