"""Quantum synchronizable code (QSC) constructors.

Every constructor checks its hypotheses mechanically, then hands the final
code pair (C, D) with C^perp <= C < D to :func:`qsc_pair`, which applies the
generic pair construction:

* logical dimension 2 k_C - n,
* tolerance a_l + a_r < k_D - k_C, improved to a_l + a_r < ord(g_C / g_D),
* phase capability from d(C), bit capability from d(D).

A record carries both the value claimed by the family formula
(``*_stated``) and the value obtained by running that machinery on the actual
code pair (``*_derived``).  The two are kept side by side and never merged.

Certificates are lists of named predicates over the generators stored in the
record, so :func:`verify_record` can re-run every one of them from a JSON file.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .codes import (
    CodeError,
    CyclicCode,
    DistanceBudgetExceeded,
    bch_bound,
    code_sum,
    contains,
    defining_set,
    dual,
    intersect,
    is_dual_containing,
    is_self_orthogonal,
    kronecker,
    min_distance,
    product_code,
    tensor_self_orthogonal,
)
from .families import (
    all_primes_minus1_mod8,
    bch,
    in_coset_regime,
    kappa,
    mu_minus1_splitting,
    splitting_leaders,
    square_root_bound,
)
from .fieldtables import cosets, minimal_poly, nonreciprocal_split, ord_mod
from .polyring import BinPoly, _divmod, _gcd, _mod, as_poly, order, xn1
from .rrcc import castagnoli_distance, dual_generator_form, duadic_rr_pair, pair_4n


class HypothesisError(ValueError):
    """A construction's hypotheses do not hold; ``failed`` names them."""

    def __init__(self, failed: list[str], context: str = ""):
        self.failed = list(failed)
        msg = ", ".join(self.failed)
        super().__init__(f"{context}: {msg}" if context else msg)


@dataclass(frozen=True)
class Distance:
    """A minimum distance with provenance.

    ``source`` is "exhaustive" (computed here), "claimed" (certified input),
    "bound" (``value`` is only a lower bound) or "undefined".
    """

    value: int | None
    source: str

    @property
    def exact(self) -> bool:
        return self.source in ("exhaustive", "claimed")

    def to_json(self) -> dict:
        return {"value": self.value, "source": self.source}

    @classmethod
    def from_json(cls, obj) -> Distance | None:
        if obj is None:
            return None
        return cls(obj["value"], obj["source"])


def capability(d: Distance | None, doubled: bool = False) -> int | None:
    """floor((d-1)/2), or floor((2d-1)/2) when ``doubled``."""
    if d is None or d.value is None:
        return None
    return (2 * d.value - 1) // 2 if doubled else (d.value - 1) // 2


@dataclass(frozen=True)
class Check:
    name: str
    args: tuple[str, ...]
    passed: bool

    def label(self) -> str:
        return f"{self.name}({', '.join(self.args)})"

    def to_json(self) -> dict:
        return {"name": self.name, "args": list(self.args), "pass": self.passed}


@dataclass
class QscRecord:
    construction: str
    n: int
    k_stated: int
    k_derived: int
    tol_stated: int
    tol_derived: int
    d1: Distance
    d2: Distance
    phase: int | None
    bit: int | None
    certificate: list[Check]
    gC: BinPoly
    gD: BinPoly
    d1_actual: Distance | None = None
    d2_actual: Distance | None = None
    generators: dict[str, tuple[int, BinPoly]] = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def block(self) -> str:
        return f"{self.n}+al+ar"

    @property
    def phase_derived(self) -> int | None:
        return capability(self.d1_actual)

    @property
    def bit_derived(self) -> int | None:
        return capability(self.d2_actual)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificate)

    def sort_key(self):
        return (self.construction, json.dumps(self.params, sort_keys=True), self.gC.bits, self.gD.bits)

    def to_json(self) -> dict:
        return {
            "construction": self.construction,
            "n": self.n,
            "block": self.block,
            "tol_stated": self.tol_stated,
            "tol_derived": self.tol_derived,
            "k_stated": self.k_stated,
            "k_derived": self.k_derived,
            "d1": self.d1.to_json(),
            "d2": self.d2.to_json(),
            "d1_actual": self.d1_actual.to_json() if self.d1_actual else None,
            "d2_actual": self.d2_actual.to_json() if self.d2_actual else None,
            "phase": self.phase,
            "bit": self.bit,
            "phase_derived": self.phase_derived,
            "bit_derived": self.bit_derived,
            "capability_qualifier": ">=",
            "certificate": [c.to_json() for c in self.certificate],
            "gC_hex": self.gC.hex(),
            "gD_hex": self.gD.hex(),
            "generators": {
                name: {"n": n, "hex": g.hex()} for name, (n, g) in sorted(self.generators.items())
            },
            "params": self.params,
            "notes": self.notes,
        }

    @classmethod
    def from_json(cls, obj: dict) -> QscRecord:
        return cls(
            construction=obj["construction"],
            n=int(obj["n"]),
            k_stated=obj["k_stated"],
            k_derived=obj["k_derived"],
            tol_stated=obj["tol_stated"],
            tol_derived=obj["tol_derived"],
            d1=Distance.from_json(obj["d1"]),
            d2=Distance.from_json(obj["d2"]),
            phase=obj["phase"],
            bit=obj["bit"],
            certificate=[
                Check(c["name"], tuple(c.get("args", ())), bool(c["pass"])) for c in obj["certificate"]
            ],
            gC=BinPoly(int(obj["gC_hex"], 16)),
            gD=BinPoly(int(obj["gD_hex"], 16)),
            d1_actual=Distance.from_json(obj.get("d1_actual")),
            d2_actual=Distance.from_json(obj.get("d2_actual")),
            generators={
                name: (int(v["n"]), BinPoly(int(v["hex"], 16)))
                for name, v in obj.get("generators", {}).items()
            },
            params=obj.get("params", {}),
            notes=list(obj.get("notes", [])),
        )


# ---------------------------------------------------------------------------
# predicates
#
# A predicate takes the record's code table {name: (n, g_bits)} plus its
# params and returns a bool.  Generators that no longer divide x^n - 1 make
# every predicate touching them false instead of raising.

PREDICATES = {}


def predicate(name):
    def deco(fn):
        PREDICATES[name] = fn
        return fn

    return deco


def _code(table, name) -> CyclicCode:
    n, g = table[name]
    return CyclicCode(n, BinPoly(g))


@predicate("divides_xn1")
def _p_divides(table, params, X):
    n, g = table[X]
    return g != 0 and _mod(xn1(n), g) == 0


@predicate("dual_containing")
def _p_dual_containing(table, params, X):
    return is_dual_containing(_code(table, X))


@predicate("self_orthogonal")
def _p_self_orthogonal(table, params, X):
    return is_self_orthogonal(_code(table, X))


@predicate("contains")
def _p_contains(table, params, X, Y):
    """Y is a subcode of X."""
    return contains(_code(table, X), _code(table, Y))


@predicate("k_lt")
def _p_k_lt(table, params, X, Y):
    return _code(table, X).k < _code(table, Y).k


@predicate("gcd_degree_lt")
def _p_gcd_degree_lt(table, params, A, B, C, D):
    """deg gcd(g_A, g_B) < deg gcd(g_C, g_D)."""
    lhs = _gcd(table[A][1], table[B][1]).bit_length()
    rhs = _gcd(table[C][1], table[D][1]).bit_length()
    return lhs < rhs


@predicate("is_sum")
def _p_is_sum(table, params, X, A, B):
    return _code(table, X) == code_sum(_code(table, A), _code(table, B))


@predicate("is_dual_of_intersection")
def _p_is_dual_of_intersection(table, params, X, A, B):
    return _code(table, X) == dual(intersect(_code(table, A), _code(table, B)))


@predicate("dual_strictly_between")
def _p_dual_strictly_between(table, params, C3, A, B):
    """{0} < C3^perp < A n B, both strict."""
    d3 = dual(_code(table, C3))
    inter = intersect(_code(table, A), _code(table, B))
    return d3.k > 0 and contains(inter, d3) and d3.k < inter.k


@predicate("same_as")
def _p_same_as(table, params, X, Y):
    return table[X] == table[Y]


@predicate("odd_length")
def _p_odd_length(table, params, X):
    n = table[X][0]
    return n % 2 == 1 and n >= 3


@predicate("bch_generator")
def _p_bch_generator(table, params, X, top):
    """g_X = M_1 M_3 ... M_top (narrow-sense BCH, design distance top + 1)."""
    n = table[X][0]
    return table[X][1] == bch(n, int(params[top]) + 1).code.g.bits


@predicate("coset_regime")
def _p_coset_regime(table, params):
    return in_coset_regime(int(params["n"]))


@predicate("odd_chain_below_r")
def _p_odd_chain(table, params, *names):
    """Named params are odd, strictly increasing, >= the first bound and < r."""
    n = int(params["n"])
    vals = [int(params[x]) for x in names]
    m = ord_mod(n)
    r = min(math.floor(n * 2 ** math.ceil(m / 2) / (2**m - 1) - 1), n - 1, math.floor(kappa(n)))
    lo = 2 if params.get("construction") == "bch-sum" else 1
    return (
        all(v % 2 == 1 for v in vals)
        and all(a < b for a, b in zip(vals, vals[1:]))
        and vals[0] >= lo
        and vals[-1] < r
    )


@predicate("primes_minus1_mod8")
def _p_primes(table, params):
    return all_primes_minus1_mod8(int(params["m"]))


@predicate("leader_product")
def _p_leader_product(table, params, X, key):
    m = int(params["m"])
    g = 1
    for t in params[key]:
        g = BinPoly(g) * minimal_poly(t, m)
    return table[X][1] == int(g)


@predicate("one_per_reciprocal_pair")
def _p_one_per_pair(table, params, key):
    m = int(params["m"])
    _, pairs = nonreciprocal_split(m)
    partner = {i: j for i, j in pairs} | {j: i for i, j in pairs}
    T = set(params[key])
    return all(t in partner and partner[t] not in T for t in T)


@predicate("strict_subset")
def _p_strict_subset(table, params, small, big):
    return set(params[small]) < set(params[big])


@predicate("joint_gcd_one")
def _p_joint_gcd(table, params, key):
    """gcd(m, i_1, ..., i_t) = 1 over the leaders in T (joint reading)."""
    return math.gcd(int(params["m"]), *params[key]) == 1


@predicate("reciprocal_of")
def _p_reciprocal_of(table, params, X, Y):
    return BinPoly(table[X][1]).reciprocal() == BinPoly(table[Y][1])


@predicate("rr_duadic_dual_form")
def _p_rr_dual_form(table, params, X, F1, F2):
    i = int(params["i"])
    want = dual_generator_form(BinPoly(table[F1][1]), BinPoly(table[F2][1]), i)
    return dual(_code(table, X)).g == want


@predicate("squared")
def _p_squared(table, params, X, F):
    g = BinPoly(table[F][1])
    return table[X][1] == (g * g).bits


@predicate("coprime_odd_lengths")
def _p_coprime(table, params, X, Y):
    a, b = table[X][0], table[Y][0]
    return a % 2 == 1 and b % 2 == 1 and math.gcd(a, b) == 1


@predicate("tensor_self_orthogonal")
def _p_tensor_so(table, params, A, B):
    return tensor_self_orthogonal(
        _code(table, A).generator_matrix(), _code(table, B).generator_matrix()
    )


@predicate("product_dual_generator")
def _p_product_dual(table, params, X, A, B):
    P = product_code(_code(table, A), _code(table, B)).cyclic
    return _code(table, X) == dual(P)


@predicate("product_generator")
def _p_product_gen(table, params, X, A, B):
    P = product_code(_code(table, A), _code(table, B)).cyclic
    return _code(table, X) == P


@predicate("product_inclusion_strict")
def _p_product_inclusion(table, params, A, B, C, D):
    """(A (x) B)^perp strictly inside C (x) D, checked on Kronecker matrices."""
    G_ab = kronecker(_code(table, A).generator_matrix(), _code(table, B).generator_matrix())
    G_cd = kronecker(_code(table, C).generator_matrix(), _code(table, D).generator_matrix())
    perp = G_ab.dual()
    return G_cd.contains(perp) and perp.k < G_cd.k


def _table_of(rec: QscRecord) -> dict:
    table = {name: (n, g.bits) for name, (n, g) in rec.generators.items()}
    table["C"] = (rec.n, rec.gC.bits)
    table["D"] = (rec.n, rec.gD.bits)
    return table


def run_check(name: str, args, table, params) -> bool:
    fn = PREDICATES[name]
    try:
        return bool(fn(table, params, *args))
    except (CodeError, ZeroDivisionError, KeyError, ArithmeticError, ValueError):
        return False


class _Certifier:
    def __init__(self, table: dict, params: dict):
        self.table = table
        self.params = params
        self.checks: list[Check] = []

    def __call__(self, name: str, *args: str) -> bool:
        ok = run_check(name, args, self.table, self.params)
        self.checks.append(Check(name, tuple(args), ok))
        return ok

    def require(self, context: str):
        failed = [c.label() for c in self.checks if not c.passed]
        if failed:
            raise HypothesisError(failed, context)


def _derive(rec_n: int, gC: BinPoly, gD: BinPoly) -> tuple[int, int, int]:
    """(k_derived, k_D - k_C tolerance, ord of the quotient)."""
    kC = rec_n - gC.deg
    kD = rec_n - gD.deg
    q, r = _divmod(gC.bits, gD.bits)
    if r:
        raise ArithmeticError("g_D does not divide g_C")
    return 2 * kC - rec_n, kD - kC, order(BinPoly(q))


def verify_record(rec: QscRecord) -> list[str]:
    """Re-run every certificate predicate; return the names that disagree."""
    table = _table_of(rec)
    bad = []
    for chk in rec.certificate:
        if chk.name not in PREDICATES:
            bad.append(f"unknown predicate {chk.label()}")
            continue
        if run_check(chk.name, chk.args, table, rec.params) != chk.passed or not chk.passed:
            bad.append(chk.label())
    try:
        k_der, _, tol_der = _derive(rec.n, rec.gC, rec.gD)
    except (ArithmeticError, ValueError):
        bad.append("quotient g_C/g_D")
    else:
        if k_der != rec.k_derived:
            bad.append("k_derived")
        if tol_der != rec.tol_derived:
            bad.append("tol_derived")
    return bad


# ---------------------------------------------------------------------------
# distances


def _exhaustive(C: CyclicCode, budget) -> Distance | None:
    try:
        d = min_distance(C, budget)
    except DistanceBudgetExceeded:
        return None
    return Distance(d, "exhaustive" if d is not None else "undefined")


def _distance_or_bound(C: CyclicCode, budget) -> Distance:
    got = _exhaustive(C, budget)
    if got is not None:
        return got
    if C.n % 2 == 1:
        return Distance(bch_bound(defining_set(C), C.n), "bound")
    try:
        return Distance(castagnoli_distance(C, budget), "exhaustive")
    except DistanceBudgetExceeded:
        return Distance(1, "bound")


# ---------------------------------------------------------------------------
# the constructors


def qsc_pair(
    C: CyclicCode,
    D: CyclicCode,
    *,
    budget: int | None = None,
    construction: str = "pair",
    d1: Distance | None = None,
    d2: Distance | None = None,
    generators: dict | None = None,
    params: dict | None = None,
    extra_checks=(),
) -> QscRecord:
    """Generic pair: C dual-containing, C strictly inside D, same length."""
    if C.n != D.n:
        raise HypothesisError(["same_length(C, D)"], construction)
    gens = dict(generators or {})
    params = dict(params or {})
    params.setdefault("construction", construction)
    table = {name: (n, as_poly(g).bits) for name, (n, g) in gens.items()}
    table["C"] = (C.n, C.g.bits)
    table["D"] = (D.n, D.g.bits)
    cert = _Certifier(table, params)
    for chk in extra_checks:
        cert(*chk)
    cert("divides_xn1", "C")
    cert("divides_xn1", "D")
    cert("dual_containing", "C")
    cert("contains", "D", "C")
    cert("k_lt", "C", "D")
    cert.require(construction)

    k_der, tol_thm1, tol_der = _derive(C.n, C.g, D.g)
    a1 = _distance_or_bound(C, budget)
    a2 = _distance_or_bound(D, budget)
    d1 = d1 or a1
    d2 = d2 or a2
    return QscRecord(
        construction=construction,
        n=C.n,
        k_stated=k_der,
        k_derived=k_der,
        tol_stated=tol_thm1,
        tol_derived=tol_der,
        d1=d1,
        d2=d2,
        phase=capability(d1),
        bit=capability(d2),
        certificate=cert.checks,
        gC=C.g,
        gD=D.g,
        d1_actual=a1,
        d2_actual=a2,
        generators={name: (n, as_poly(g)) for name, (n, g) in gens.items()},
        params=params,
    )


def _codes(*named):
    return {name: (code.n, code.g) for name, code in named}


def qsc_sum(C1, C2, C3, C4, *, budget=None, construction="sum", params=None) -> QscRecord:
    """Pair (C1 + C3, C2 + C4) under C1 dual-containing, C1 <= C2, C3 <= C4."""
    n = C1.n
    if not all(c.n == n for c in (C2, C3, C4)):
        raise HypothesisError(["same_length(C1, C2, C3, C4)"], construction)
    S13 = code_sum(C1, C3)
    S24 = code_sum(C2, C4)
    g13 = _gcd(C1.g.bits, C3.g.bits).bit_length() - 1
    g24 = _gcd(C2.g.bits, C4.g.bits).bit_length() - 1
    checks = [
        ("odd_length", "C1"),
        ("dual_containing", "C1"),
        ("contains", "C2", "C1"),
        ("contains", "C4", "C3"),
        ("gcd_degree_lt", "C2", "C4", "C1", "C3"),
        ("is_sum", "C", "C1", "C3"),
        ("is_sum", "D", "C2", "C4"),
    ]
    gens = _codes(("C1", C1), ("C2", C2), ("C3", C3), ("C4", C4))
    # hypotheses first, so a failure names them rather than the derived pair
    cert = _Certifier(
        {k: (v[0], v[1].bits) for k, v in gens.items()} | {"C": (n, S13.g.bits), "D": (n, S24.g.bits)},
        dict(params or {}),
    )
    for chk in checks:
        cert(*chk)
    cert.require(construction)
    rec = qsc_pair(
        S13, S24, budget=budget, construction=construction, generators=gens,
        params=params, extra_checks=checks,
    )
    rec.k_stated = n - 2 * g13
    rec.tol_stated = g13 - g24
    return rec


def qsc_intersection(C1, C2, C3, *, budget=None) -> QscRecord:
    """Pair ((C1 n C2)^perp, C3) under C1 self-orthogonal, {0} < C3^perp < C1 n C2."""
    n = C1.n
    if not all(c.n == n for c in (C2, C3)):
        raise HypothesisError(["same_length(C1, C2, C3)"], "intersection")
    inter = intersect(C1, C2)
    C = dual(inter)
    gens = _codes(("C1", C1), ("C2", C2), ("C3", C3))
    checks = [
        ("odd_length", "C1"),
        ("self_orthogonal", "C1"),
        ("dual_strictly_between", "C3", "C1", "C2"),
        ("is_dual_of_intersection", "C", "C1", "C2"),
        ("same_as", "D", "C3"),
    ]
    cert = _Certifier(
        {k: (v[0], v[1].bits) for k, v in gens.items()} | {"C": (n, C.g.bits), "D": (n, C3.g.bits)}, {}
    )
    for chk in checks:
        cert(*chk)
    cert.require("intersection")
    rec = qsc_pair(C, C3, budget=budget, construction="intersection", generators=gens, extra_checks=checks)
    dl = inter.g.deg
    rec.k_stated = 2 * dl - n
    rec.tol_stated = n - C3.g.deg - dl
    return rec


def _bch_r(n: int) -> int:
    m = ord_mod(n)
    return min(math.floor(n * 2 ** math.ceil(m / 2) / (2**m - 1) - 1), n - 1, math.floor(kappa(n)))


def _bch_regime_failures(n: int, values: dict[str, int], lower: int) -> list[str]:
    failed = []
    if n < 3 or n % 2 == 0:
        return [f"n = {n} must be odd and >= 3"]
    if not in_coset_regime(n):
        m = ord_mod(n)
        failed.append(f"coset regime 2^{m // 2} < n <= 2^{m} - 1")
    r = _bch_r(n)
    names = list(values)
    for x in names:
        if values[x] % 2 == 0:
            failed.append(f"{x} = {values[x]} must be odd")
    if values[names[0]] < lower:
        failed.append(f"{names[0]} >= {lower}")
    for a, b in zip(names, names[1:]):
        if not values[a] < values[b]:
            failed.append(f"{a} < {b}")
    if not values[names[-1]] < r:
        failed.append(f"{names[-1]} < r = {r}")
    return failed


def qsc_bch(n: int, a: int, b: int, *, budget=None, exact_distances: bool = False) -> QscRecord:
    """C = <M_1 M_3 ... M_b> inside D = <M_1 M_3 ... M_a>."""
    failed = _bch_regime_failures(n, {"a": a, "b": b}, 1)
    if failed:
        raise HypothesisError(failed, f"qsc_bch({n}, {a}, {b})")
    m = ord_mod(n)
    t, u = (b - 1) // 2, (a - 1) // 2
    C = bch(n, b + 1).code
    D = bch(n, a + 1).code
    params = {"n": n, "a": a, "b": b}
    checks = [
        ("coset_regime",),
        ("odd_chain_below_r", "a", "b"),
        ("bch_generator", "C", "b"),
        ("bch_generator", "D", "a"),
    ]
    rec = qsc_pair(
        C, D, budget=budget if exact_distances else 0, construction="bch",
        d1=Distance(b + 1, "bound"), d2=Distance(a + 1, "bound"),
        params=params, extra_checks=checks,
    )
    rec.k_stated = n - 2 * m * (t + 1)
    rec.tol_stated = m * (t - u)
    return rec


def qsc_bch_sum(n: int, e: int, a: int, b: int, f: int, *, budget=None, exact_distances=False) -> QscRecord:
    """Sum construction on four narrow-sense BCH codes."""
    failed = _bch_regime_failures(n, {"e": e, "a": a, "b": b, "f": f}, 2)
    if failed:
        raise HypothesisError(failed, f"qsc_bch_sum({n}, {e}, {a}, {b}, {f})")
    m = ord_mod(n)
    t, w = (b - 1) // 2, (e - 1) // 2
    C1, C2, C3, C4 = (bch(n, x + 1).code for x in (b, a, f, e))
    params = {"n": n, "e": e, "a": a, "b": b, "f": f}
    rec = qsc_sum(C1, C2, C3, C4, budget=budget if exact_distances else 0,
                  construction="bch-sum", params=params)
    for name, top in (("C1", "b"), ("C2", "a"), ("C3", "f"), ("C4", "e")):
        ok = run_check("bch_generator", (name, top), _table_of(rec), rec.params)
        rec.certificate.append(Check("bch_generator", (name, top), ok))
    for chk in (("coset_regime",), ("odd_chain_below_r", "e", "a", "b", "f")):
        rec.certificate.append(Check(chk[0], chk[1:], run_check(chk[0], chk[1:], _table_of(rec), rec.params)))
    rec.d1 = Distance(b + 1, "bound")
    rec.d2 = Distance(e + 1, "bound")
    rec.phase, rec.bit = capability(rec.d1), capability(rec.d2)
    rec.k_stated = n - 2 * m * (t + 1)
    rec.tol_stated = m * (t - w)
    return rec


def _leader_product(m: int, leaders) -> BinPoly:
    g = BinPoly(1)
    for t in leaders:
        g = g * minimal_poly(t, m)
    return g


def qsc_duadic(m: int, T, T_prime, *, budget=None, corollary: bool = False) -> QscRecord:
    """C = <prod_T M_j> inside D = <prod_T' M_j>, T' strictly inside T."""
    table = cosets(m)
    T = sorted({table.leader_of[t % m] for t in T})
    Tp = sorted({table.leader_of[t % m] for t in T_prime})
    params = {"m": m, "T": T, "T_prime": Tp, "gcd_reading": "joint gcd(m, i_1, ..., i_t)"}
    C = CyclicCode(m, _leader_product(m, T))
    D = CyclicCode(m, _leader_product(m, Tp))
    checks = [
        ("primes_minus1_mod8",),
        ("one_per_reciprocal_pair", "T"),
        ("strict_subset", "T_prime", "T"),
        ("joint_gcd_one", "T"),
        ("leader_product", "C", "T"),
        ("leader_product", "D", "T_prime"),
    ]
    cert = _Certifier({"C": (m, C.g.bits), "D": (m, D.g.bits)}, params)
    for chk in checks:
        cert(*chk)
    cert.require(f"qsc_duadic({m})")
    quotient = _leader_product(m, [t for t in T if t not in Tp])
    if corollary:
        d1 = Distance(square_root_bound(m), "bound")
        d2 = Distance((m - 1) // 2, "bound")
    else:
        d1 = d2 = Distance(3, "bound")
    rec = qsc_pair(
        C, D, budget=budget, construction="duadic-corollary" if corollary else "duadic",
        d1=d1, d2=d2, params=params, extra_checks=checks,
    )
    if corollary:
        rec.k_stated = 1
        rec.tol_stated = ord_mod(m)
        rec.notes.append("stated tolerance ord_m(2) = deg M_1; the quotient M_1 has order m")
    else:
        rec.k_stated = m - 2 * sum(minimal_poly(t, m).deg for t in Tp)
        rec.tol_stated = order(quotient)
    return rec


def qsc_duadic_corollary(m: int, *, budget=None) -> QscRecord:
    """T = leaders of S1 from the canonical mu_-1 splitting, T' = T minus {1}."""
    split = mu_minus1_splitting(m)
    T, _ = splitting_leaders(split)
    if 1 not in T:
        raise ArithmeticError("canonical splitting does not put 1 in S1")
    return qsc_duadic(m, T, [t for t in T if t != 1], budget=budget, corollary=True)


def qsc_rr4n(f, n: int, *, d: int | None = None, d_source: str | None = None, budget=None) -> QscRecord:
    """C = <f^2> inside D = <f> at length 4n, with the stated values alongside."""
    f = as_poly(f)
    pair = pair_4n(f, n, budget=budget, d=d)
    src = d_source or ("exhaustive" if d is None else "claimed")
    if pair.d is None:  # f = x^n - 1: the base code is zero
        d_base = Distance(None, "undefined")
        d_double = d_base
    else:
        d_base = Distance(pair.d, src)
        d_double = Distance(2 * pair.d, "claimed")
    # d1 = 2d is the claim attached to <f^2>; the actual value sits in d1_actual
    checks = [
        ("odd_length", "base"),
        ("divides_xn1", "base"),
        ("squared", "C", "base"),
        ("same_as", "D", "base4n"),
    ]
    gens = {"base": (n, f), "base4n": (4 * n, f)}
    rec = qsc_pair(
        pair.C, pair.D, budget=budget, construction="rr4n",
        d1=d_double, d2=d_base,
        generators=gens, params={"n": n, "deg_f": f.deg, "d": pair.d}, extra_checks=checks,
    )
    rec.k_stated = 4 * n - 2 * f.deg
    rec.tol_stated = 4 * n
    rec.phase = capability(d_base, doubled=True)
    rec.bit = capability(d_base)
    rec.notes.append("stated k = 4n - 2 deg f; generic pair on <f^2>, <f> gives 4n - 4 deg f")
    rec.notes.append(f"d2 is the distance of <f> at length {n}")
    return rec


def qsc_rr_duadic(m: int, i: int, *, budget=None) -> QscRecord:
    """C = <(x+1) f1> inside D = <f1> at length 2^i m."""
    if not all_primes_minus1_mod8(m):
        raise HypothesisError([f"primes of {m} are -1 mod 8"], "rr-duadic")
    pair = duadic_rr_pair(m, i)
    duadic = CyclicCode(m, pair.f1)
    got = _exhaustive(duadic, budget)
    d = got if got is not None else Distance(square_root_bound(m), "bound")
    gens = {"f1": (m, pair.f1), "f2": (m, pair.f2)}
    checks = [
        ("primes_minus1_mod8",),
        ("reciprocal_of", "f1", "f2"),
        ("rr_duadic_dual_form", "C", "f1", "f2"),
    ]
    N = m << i
    rec = qsc_pair(
        pair.C, pair.D, budget=budget, construction="rr-duadic",
        d1=d, d2=d, generators=gens, params={"m": m, "i": i}, extra_checks=checks,
    )
    rec.k_stated = N - m - 1
    rec.tol_stated = N
    rec.notes.append(f"d1, d2 are the distance of the length-{m} odd-like code")
    return rec


def qsc_product(C1, C3, C2, C4, n: int | None = None, n_star: int | None = None, *, budget=None) -> QscRecord:
    """Pair ((C1 (x) C3)^perp, C2 (x) C4) for coprime odd lengths n, n*."""
    n = C1.n if n is None else n
    n_star = C3.n if n_star is None else n_star
    failed = []
    if C1.n != n or C2.n != n:
        failed.append(f"C1, C2 have length {n}")
    if C3.n != n_star or C4.n != n_star:
        failed.append(f"C3, C4 have length {n_star}")
    if n % 2 == 0 or n_star % 2 == 0 or math.gcd(n, n_star) != 1:
        failed.append(f"coprime_odd_lengths({n}, {n_star})")
    if failed:
        raise HypothesisError(failed, "product")
    P13 = product_code(C1, C3)
    P24 = product_code(C2, C4)
    C = dual(P13.cyclic)
    D = P24.cyclic
    gens = _codes(("C1", C1), ("C2", C2), ("C3", C3), ("C4", C4))
    checks = [
        ("coprime_odd_lengths", "C1", "C3"),
        ("self_orthogonal", "C1"),
        ("tensor_self_orthogonal", "C1", "C3"),
        ("product_inclusion_strict", "C1", "C3", "C2", "C4"),
        ("product_dual_generator", "C", "C1", "C3"),
        ("product_generator", "D", "C2", "C4"),
    ]
    cert = _Certifier(
        {k: (v[0], v[1].bits) for k, v in gens.items()} | {"C": (C.n, C.g.bits), "D": (D.n, D.g.bits)}, {}
    )
    for chk in checks:
        cert(*chk)
    cert.require("product")
    d2c = _exhaustive(C2, budget)
    d4c = _exhaustive(C4, budget)
    if d2c and d4c and d2c.value and d4c.value:
        d24 = Distance(d2c.value * d4c.value, "exhaustive")
    else:
        d24 = Distance(None, "undefined")
    d13 = _exhaustive(C, budget) or Distance(d24.value, "bound")
    rec = qsc_pair(C, D, budget=budget, construction="product", d1=d13, d2=d24,
                   generators=gens, params={"n": n, "n_star": n_star}, extra_checks=checks)
    k1, k2, k3, k4 = C1.k, C2.k, C3.k, C4.k
    rec.k_stated = n * n_star - 2 * k1 * k3
    rec.tol_stated = k1 * k3 + k2 * k4 - n * n_star
    if rec.tol_stated <= 0:
        rec.notes.append("vacuous construction: tolerance bound is not positive")
    return rec


def records_to_json(records) -> str:
    return json.dumps([r.to_json() for r in sorted(records, key=QscRecord.sort_key)], indent=2, sort_keys=True)


def records_from_json(text: str) -> list[QscRecord]:
    obj = json.loads(text)
    if isinstance(obj, dict):
        obj = [obj]
    return [QscRecord.from_json(o) for o in obj]
