"""Dense GF(2) linear algebra on rows stored as int bitmasks (bit j = column j)."""

from __future__ import annotations


def rref(rows, pivot_high: bool = True) -> list[int]:
    """Reduced row echelon form; zero rows dropped.

    With ``pivot_high`` the pivot of each row is its highest set bit, so the
    result is sorted by decreasing leading bit and every pivot column is
    cleared in all other rows.
    """
    basis: dict[int, int] = {}  # pivot column -> row
    for r in rows:
        r = int(r)
        for col in sorted(basis, reverse=pivot_high):
            if (r >> col) & 1:
                r ^= basis[col]
        if r == 0:
            continue
        col = r.bit_length() - 1 if pivot_high else (r & -r).bit_length() - 1
        for c in basis:
            if (basis[c] >> col) & 1:
                basis[c] ^= r
        basis[col] = r
    return [basis[c] for c in sorted(basis, reverse=True)]


def rank(rows) -> int:
    return len(rref(rows))


def reduce(vec: int, echelon: list[int]) -> int:
    """Reduce ``vec`` against rows from ``rref`` (high pivots)."""
    for r in echelon:
        if (vec >> (r.bit_length() - 1)) & 1:
            vec ^= r
    return vec


def in_span(vec: int, echelon: list[int]) -> bool:
    return reduce(vec, echelon) == 0


def span_contains(big, small) -> bool:
    """Row space of ``small`` is inside the row space of ``big``."""
    ech = rref(big)
    return all(in_span(int(v), ech) for v in small)


def nullspace(rows, n: int) -> list[int]:
    """Basis of {v : <v, r> = 0 for every row r}, vectors of length n."""
    ech = rref(rows)
    pivots = {r.bit_length() - 1: r for r in ech}
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for p, r in pivots.items():
            # row r reads x_p + sum_{free c in r} x_c = 0
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1
