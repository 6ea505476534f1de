import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsync.polyring import (
    ONE,
    X,
    ZERO,
    BinPoly,
    distinct_degree_factorization,
    format_text,
    gcd,
    lcm,
    order,
    order_bruteforce,
    parse_bits,
    reciprocal,
    squarefree_decomposition,
    xn1,
)

polys = st.integers(min_value=0, max_value=(1 << 40) - 1).map(BinPoly)
nonzero = st.integers(min_value=1, max_value=(1 << 40) - 1).map(BinPoly)
with_const = st.integers(min_value=0, max_value=(1 << 14) - 1).map(lambda b: BinPoly(2 * b + 1))


def _mul_reference(a: int, b: int) -> int:
    # schoolbook over coefficient lists
    ca = [(a >> i) & 1 for i in range(a.bit_length())]
    cb = [(b >> i) & 1 for i in range(b.bit_length())]
    out = [0] * (len(ca) + len(cb))
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            out[i + j] ^= x & y
    return sum(c << i for i, c in enumerate(out))


def test_basic_values():
    f = BinPoly(0b1011)
    assert f.text() == "x^3+x+1"
    assert f.hex() == "b"
    assert f.deg == 3
    assert ZERO.deg == float("-inf")
    assert (f * f).text() == "x^6+x^2+1"
    assert BinPoly(xn1(7)) == BinPoly.parse("x^7+1")
    assert f.reciprocal() == BinPoly.parse("x^3+x^2+1")
    assert f(0) == 1 and f(1) == 1
    assert BinPoly.parse("x^2+1")(1) == 0


@pytest.mark.parametrize(
    "text, bits",
    [("x^3+x+1", 0b1011), ("b", 0b1011), ("0xb", 0b1011), ("1", 1), ("x", 2), ("0", 0), ("x^4 + x + 1", 0b10011)],
)
def test_parse(text, bits):
    assert parse_bits(text) == bits


@pytest.mark.parametrize("bad", ["x^", "y+1", "x^-1", "", "2x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_bits(bad)


def test_binpoly_is_immutable():
    f = BinPoly(7)
    with pytest.raises(AttributeError):
        f.bits = 3


@given(polys)
def test_text_roundtrip(a):
    assert parse_bits(format_text(a.bits)) == a.bits
    assert BinPoly.from_hex(a.hex()) == a


@given(polys, polys)
def test_mul_matches_schoolbook(a, b):
    assert (a * b).bits == _mul_reference(a.bits, b.bits)


@given(polys, nonzero)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


@given(nonzero, nonzero)
def test_gcd_lcm(a, b):
    g = gcd(a, b)
    assert g.divides(a) and g.divides(b)
    assert lcm(a, b) * g == a * b


@given(nonzero)
def test_reciprocal_involution_when_constant_term(a):
    if a.bits & 1:
        assert reciprocal(reciprocal(a)) == a
        assert reciprocal(a).deg == a.deg


@given(nonzero)
def test_squarefree_decomposition_reconstructs(a):
    parts = squarefree_decomposition(a.bits)
    prod = ONE
    for mult, part in parts.items():
        prod = prod * BinPoly(part) ** mult
    assert prod == a
    for part in parts.values():
        p = BinPoly(part)
        # the part itself is squarefree: coprime with its derivative's content
        assert squarefree_decomposition(part) == {1: part} or p == ONE


@given(with_const)
def test_ddf_splits_by_degree(a):
    sqf = squarefree_decomposition(a.bits).get(1)
    if sqf is None:
        return
    parts = distinct_degree_factorization(sqf)
    prod = ONE
    for d, part in parts.items():
        assert BinPoly(part).deg % d == 0
        prod = prod * BinPoly(part)
    assert prod == BinPoly(sqf)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^3+x+1", 7),  # primitive
        ("x^2+x+1", 3),
        ("x+1", 1),
        ("1", 1),
        ("x^6+x^2+1", 14),  # (x^3+x+1)^2
        ("x^4+x^3+x^2+x+1", 5),
        ("x^4+x^2+x", 7),  # x (x^3+x+1)
        ("x^2+1", 2),
        ("x^3+x^2+x+1", 4),  # (x+1)^3
    ],
)
def test_order_known(text, expected):
    f = BinPoly.parse(text)
    assert order(f) == expected
    assert order_bruteforce(f) == expected


@settings(max_examples=300)
@given(with_const)
def test_order_matches_bruteforce(f):
    assert order(f) == order_bruteforce(f)


@given(st.integers(1, 40))
def test_order_of_xn1_divides_n(n):
    assert n % order(BinPoly(xn1(n))) == 0
    assert order(BinPoly(xn1(n))) == n


def test_order_power_rule():
    p = BinPoly.parse("x^4+x+1")  # primitive, order 15
    for t in range(1, 10):
        lift = 1 << math.ceil(math.log2(t)) if t > 1 else 1
        assert order(p**t) == 15 * lift


def test_order_bruteforce_cap():
    with pytest.raises(ValueError, match="cap"):
        order_bruteforce(BinPoly.parse("x^17+x^3+1"), cap=100)


def test_x_constant():
    assert X.bits == 2 and ONE.bits == 1 and not ZERO


@pytest.mark.parametrize("a", [0, 1, 2])
def test_order_matches_bruteforce_on_divisors(a):
    from qsync.fieldtables import iter_divisors

    for n in range(1, 26, 2):
        N = n << a
        for g, _ in iter_divisors(N):
            assert order(g) == order_bruteforce(g, cap=N)
