import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsync import gf2
from qsync.codes import (
    CodeError,
    CyclicCode,
    GeneratorMatrix,
    bch_bound,
    code_sum,
    contains,
    crt_permutation,
    defining_set,
    dual,
    full_space,
    intersect,
    is_dual_containing,
    is_self_orthogonal,
    kronecker,
    min_distance,
    min_distance_with_method,
    product_code,
    tensor_inner_products,
    tensor_self_orthogonal,
    zero_code,
)
from qsync.distance import DistanceBudgetExceeded, enumerate_distance, syndrome_distance
from qsync.fieldtables import iter_divisors
from qsync.polyring import BinPoly, xn1

P = BinPoly.parse
HAMMING = CyclicCode(7, P("x^3+x+1"))


def naive_distance(rows):
    best = None
    for coeffs in itertools.product((0, 1), repeat=len(rows)):
        if not any(coeffs):
            continue
        w = 0
        for c, r in zip(coeffs, rows):
            if c:
                w ^= r
        wt = bin(w).count("1")
        best = wt if best is None else min(best, wt)
    return best


def naive_words(C):
    out = set()
    for coeffs in itertools.product((0, 1), repeat=C.k):
        w = 0
        for c, r in zip(coeffs, C.generator_rows()):
            if c:
                w ^= r
        out.add(w)
    return out


def small_codes(max_n=21):
    for n in range(1, max_n + 1):
        for g, _ in iter_divisors(n):
            yield CyclicCode(n, g)


@st.composite
def cyclic_codes(draw, max_n=24):
    n = draw(st.integers(1, max_n))
    divs = sorted(g.bits for g, _ in iter_divisors(n))
    return CyclicCode(n, BinPoly(draw(st.sampled_from(divs))))


def test_hamming():
    assert HAMMING.k == 4
    assert HAMMING.check_poly == P("x^4+x^2+x+1")
    assert min_distance(HAMMING) == 3
    assert is_dual_containing(HAMMING)
    assert not is_self_orthogonal(HAMMING)
    assert dual(HAMMING) == CyclicCode(7, P("x^4+x^3+x^2+1"))
    assert defining_set(HAMMING) == {1, 2, 4}
    assert bch_bound(defining_set(HAMMING), 7) == 3


def test_rejects_non_divisor():
    with pytest.raises(CodeError):
        CyclicCode(7, P("x^2+1"))
    with pytest.raises(CodeError):
        CyclicCode(7, BinPoly(0))


def test_trivial_codes():
    assert full_space(9).k == 9 and min_distance(full_space(9)) == 1
    assert zero_code(9).k == 0 and min_distance(zero_code(9)) is None
    assert dual(full_space(5)) == zero_code(5)


@given(cyclic_codes())
def test_dual_is_orthogonal_complement(C):
    D = dual(C)
    assert C.k + D.k == C.n
    for a in C.generator_rows():
        for b in D.generator_rows():
            assert gf2.dot(a, b) == 0
    assert dual(D) == C


@given(cyclic_codes(max_n=15), st.data())
def test_sum_and_intersection_match_sets(C1, data):
    divs = sorted(g.bits for g, _ in iter_divisors(C1.n))
    C2 = CyclicCode(C1.n, BinPoly(data.draw(st.sampled_from(divs))))
    W1, W2 = naive_words(C1), naive_words(C2)
    assert naive_words(intersect(C1, C2)) == W1 & W2
    assert naive_words(code_sum(C1, C2)) == {a ^ b for a in W1 for b in W2}
    assert contains(C1, C2) == (W2 <= W1)


@given(cyclic_codes(max_n=14))
def test_distance_matches_naive(C):
    assert min_distance(C) == naive_distance(C.generator_rows())


@pytest.mark.parametrize("method", ["enumerate", "syndrome", "auto"])
def test_distance_methods_agree_small(method):
    for C in small_codes(17):
        if C.k == 0:
            continue
        assert min_distance(C, method=method) == naive_distance(C.generator_rows())


def test_golay_distance():
    # [23,12] Golay code
    g = P("x^11+x^9+x^7+x^6+x^5+x+1")
    C = CyclicCode(23, g)
    assert C.k == 12
    assert min_distance(C, method="enumerate") == 7
    assert min_distance(C, method="syndrome") == 7


def test_budget_is_enforced():
    C = CyclicCode(47, P("x^23+x^19+x^18+x^14+x^13+x^12+x^10+x^9+x^7+x^6+x^5+x^3+x^2+x+1"))
    with pytest.raises(DistanceBudgetExceeded):
        min_distance(C, budget=1 << 10)
    d, method = min_distance_with_method(C)
    assert (d, method) == (11, "enumerate")


def test_syndrome_distance_direct():
    cols = HAMMING.syndrome_columns()
    assert syndrome_distance(cols, 1 << 10) == 3
    assert enumerate_distance(HAMMING.generator_rows(), 7) == 3


@given(cyclic_codes(max_n=20), st.integers(0, 2**32))
def test_random_codeword_is_codeword(C, seed):
    w = C.random_codeword(random.Random(seed))
    assert C.is_codeword(w)
    if C.k < C.n:
        assert not C.is_codeword(w ^ 1) or C.g == BinPoly(1)


def test_json_roundtrip():
    obj = HAMMING.to_json(d=3, d_source="exhaustive")
    assert obj == {"n": 7, "g_hex": "b", "g_text": "x^3+x+1", "k": 4, "d": 3, "d_source": "exhaustive"}
    assert CyclicCode.from_json(obj) == HAMMING


@pytest.mark.parametrize("Z, n, bound", [({1, 2, 3, 4}, 15, 5), (set(), 7, 1), ({0, 6}, 7, 3), (set(range(5)), 5, 6)])
def test_bch_bound(Z, n, bound):
    assert bch_bound(Z, n) == bound


@given(cyclic_codes(max_n=25))
def test_bch_bound_is_a_lower_bound(C):
    if C.n % 2 == 0 or C.k == 0:
        return
    assert min_distance(C) >= bch_bound(defining_set(C), C.n)


# -- generator matrices and products


def test_generator_matrix_validation():
    with pytest.raises(CodeError):
        GeneratorMatrix(3, (0b011, 0b110, 0b101))
    G = GeneratorMatrix.spanning(3, (0b011, 0b110, 0b101))
    assert G.k == 2
    assert G.dual().rows == (0b111,)
    assert G.to_array().shape == (2, 3)


def test_crt_permutation():
    perm = crt_permutation(3, 5)
    assert sorted(perm) == list(range(15))
    assert perm[1 * 5 + 2] == 7  # 7 = 1 mod 3, 2 mod 5
    with pytest.raises(CodeError):
        crt_permutation(3, 9)


def _is_cyclic_space(G):
    ech = gf2.rref(G.rows)
    mask = (1 << G.n) - 1
    for r in G.rows:
        shifted = ((r << 1) | (r >> (G.n - 1))) & mask
        if not gf2.in_span(shifted, ech):
            return False
    return True


@pytest.mark.parametrize(
    "C1, C2",
    [
        (HAMMING, CyclicCode(9, P("x^7+x^6+x^4+x^3+x+1"))),
        (HAMMING, CyclicCode(5, P("x+1"))),
        (CyclicCode(3, P("x+1")), CyclicCode(5, P("x^4+x^3+x^2+x+1"))),
    ],
)
def test_product_code_is_cyclic(C1, C2):
    P12 = product_code(C1, C2)
    assert P12.k == C1.k * C2.k
    assert not _is_cyclic_space(P12.matrix) or C1.k in (0, C1.n)
    permuted = P12.matrix.permuted(P12.perm)
    assert _is_cyclic_space(permuted)
    assert P12.cyclic.g.deg == P12.n - P12.k
    assert gf2.span_contains(P12.cyclic.generator_rows(), permuted.rows)
    assert gf2.span_contains(permuted.rows, P12.cyclic.generator_rows())
    assert min_distance(P12.cyclic) == min_distance(C1) * min_distance(C2)


def test_product_7_9_values():
    C2 = CyclicCode(9, P("x^7+x^6+x^4+x^3+x+1"))
    P12 = product_code(HAMMING, C2)
    assert (P12.k, P12.cyclic.g.deg) == (8, 55)
    assert min_distance(P12.matrix) == 18


def test_tensor_inner_product_factors():
    C1 = CyclicCode(7, P("x^4+x^2+x+1"))  # [7,3,4] simplex, self-orthogonal
    C3 = CyclicCode(5, P("x+1"))
    assert is_self_orthogonal(C1)
    pairs = list(tensor_inner_products(C1.generator_matrix(), C3.generator_matrix()))
    assert all(direct == factored for direct, factored in pairs)
    assert tensor_self_orthogonal(C1.generator_matrix(), C3.generator_matrix())
    rep = CyclicCode(7, P("x^6+x^5+x^4+x^3+x^2+x+1"))
    assert not tensor_self_orthogonal(rep.generator_matrix(), full_space(3).generator_matrix())


def test_kronecker_layout():
    G = kronecker(GeneratorMatrix(2, (0b01,)), GeneratorMatrix(3, (0b101,)))
    assert G.rows == (0b000101,)


def test_xn1_is_zero_code_generator():
    assert CyclicCode(6, BinPoly(xn1(6))).k == 0
