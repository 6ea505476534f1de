"""Exact minimum distance of binary linear codes.

Two exhaustive routes are available:

* ``enumerate`` walks all 2^k codewords.  The rows are split into two
  halves, each half's span is tabulated, and the XOR of every pair of table
  entries is weighed with numpy, so memory stays near 2^(k/2) words.
* ``syndrome`` looks for the smallest w such that two distinct sets of
  ceil(w/2) and floor(w/2) columns of a parity-check matrix have equal
  syndromes.  It costs roughly sum_j C(n, j) for j up to ceil(d/2), which is
  cheap for high-rate codes with small distance.

``auto`` runs the syndrome search while it is clearly cheaper than
enumeration and switches over otherwise.  Both routes count work in "weight computations"
and refuse to exceed the caller's budget.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

DEFAULT_BUDGET = 1 << 26
_CHUNK_ELEMS = 1 << 22


class DistanceBudgetExceeded(RuntimeError):
    """The exhaustive search would need more work than the budget allows."""


def default_budget() -> int:
    env = os.environ.get("QSC_BUDGET")
    if env:
        return 1 << int(env)
    return DEFAULT_BUDGET


def _to_words(vecs, n_words: int) -> np.ndarray:
    out = np.zeros((len(vecs), n_words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(vecs):
        for w in range(n_words):
            out[i, w] = (v >> (64 * w)) & mask
    return out


def _span_table(rows: np.ndarray) -> np.ndarray:
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r])
    return table


def _weights(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).sum(axis=-1, dtype=np.int64)


def enumerate_distance(rows, n: int) -> int | None:
    """Minimum weight over the nonzero span of ``rows`` (independent int rows)."""
    rows = [int(r) for r in rows]
    k = len(rows)
    if k == 0:
        return None
    n_words = max(1, math.ceil(n / 64))
    words = _to_words(rows, n_words)
    kb = k // 2
    ka = k - kb
    left = _span_table(words[:ka])
    right = _span_table(words[ka:])
    best = n + 1
    chunk = max(1, _CHUNK_ELEMS // (right.shape[0] * n_words))
    for start in range(0, left.shape[0], chunk):
        block = left[start : start + chunk, None, :] ^ right[None, :, :]
        w = _weights(block)
        if start == 0:
            w[0, 0] = n + 1
        best = min(best, int(w.min()))
        if best == 1:
            break
    return best


def _levels(columns: list[int]):
    """Yield (j, syndromes of all j-subsets as a list) for j = 0, 1, 2, ..."""
    n = len(columns)
    yield 0, [0]
    j = 1
    while j <= n:
        syn = []
        for combo in itertools.combinations(columns, j):
            s = 0
            for c in combo:
                s ^= c
            syn.append(s)
        yield j, syn
        j += 1


def syndrome_distance(columns: list[int], budget: int, k: int | None = None) -> int | None:
    """Minimum distance of the code {v : sum_j v_j columns[j] = 0}.

    ``columns[j]`` is the syndrome (an int) of the j-th unit vector.  Raises
    :class:`DistanceBudgetExceeded` once the subsets tabulated would exceed
    ``budget``.
    """
    n = len(columns)
    if k == 0:
        return None
    spent = 0
    levels: dict[int, list[int]] = {}
    sets: dict[int, set[int]] = {}
    dup: dict[int, bool] = {}
    gen = _levels(columns)
    for w in range(1, n + 1):
        a = (w + 1) // 2
        b = w // 2
        while a not in levels:
            j = len(levels)
            cost = math.comb(n, j)
            if spent + cost > budget:
                raise DistanceBudgetExceeded(
                    f"syndrome search needs more than {budget} subsets"
                )
            spent += cost
            _, syn = next(gen)
            levels[j] = syn
            s = set(syn)
            sets[j] = s
            dup[j] = len(s) < len(syn)
        if a == b:
            if dup[a]:
                return w
        elif not sets[a].isdisjoint(sets[b]):
            return w
    return None


def search(rows, columns, n: int, k: int, budget: int | None = None, method: str = "auto"):
    """Dispatch between the two exact searches; returns (d, method_used)."""
    budget = default_budget() if budget is None else budget
    if k == 0:
        return None, "trivial"
    enum_cost = 1 << k
    if method == "enumerate":
        if enum_cost > budget:
            raise DistanceBudgetExceeded(f"2^{k} codewords exceed the budget {budget}")
        return enumerate_distance(rows(), n), "enumerate"
    if method == "syndrome":
        return syndrome_distance(columns(), budget, k), "syndrome"
    if method != "auto":
        raise ValueError(f"unknown distance method {method!r}")
    # a tabulated subset costs a Python-level XOR, a codeword a numpy lane:
    # give the syndrome route 1/64 of the enumeration cost when both fit
    cap = min(max(enum_cost >> 6, 1 << 10), budget) if enum_cost <= budget else budget
    try:
        return syndrome_distance(columns(), cap, k), "syndrome"
    except DistanceBudgetExceeded:
        if enum_cost > budget:
            raise
    return enumerate_distance(rows(), n), "enumerate"
