"""Command-line front end: ``qsync <command> ...``.

Exit codes: 0 success, 1 verification or hypothesis failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import dataclass

from . import table1
from .codes import CodeError, CyclicCode
from .distance import default_budget
from .fieldtables import cosets, dump, iter_divisors
from .polyring import BinPoly, _mod, order, parse_bits
from .qscengine import (
    HypothesisError,
    QscRecord,
    qsc_bch,
    qsc_bch_sum,
    qsc_duadic,
    qsc_duadic_corollary,
    qsc_intersection,
    qsc_pair,
    qsc_product,
    qsc_rr4n,
    qsc_rr_duadic,
    qsc_sum,
    records_from_json,
    records_to_json,
    verify_record,
)

FAMILIES = ("pair", "sum", "intersection", "bch", "bch-sum", "duadic", "rr4n", "rr-duadic", "product")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    budget: int
    fmt: str
    out: str | None

    def __post_init__(self):
        if self.budget <= 0:
            raise UsageError("budget must be positive")


def parse_range(text: str) -> list[int]:
    """"3", "1,3,7" or "a:b" (inclusive) or "a:b:step"; sorted, deduplicated."""
    vals: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ":" in part:
                bits = [int(x) for x in part.split(":")]
                if len(bits) not in (2, 3):
                    raise ValueError(part)
                lo, hi = bits[:2]
                step = bits[2] if len(bits) == 3 else 1
                if step <= 0:
                    raise ValueError(part)
                vals.update(range(lo, hi + 1, step))
            elif part:
                vals.add(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not vals:
        raise UsageError(f"empty range {text!r}")
    return sorted(vals)


def parse_poly(text: str) -> BinPoly:
    try:
        return BinPoly(parse_bits(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, cfg: RunConfig):
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# record formatting

CSV_FIELDS = (
    "construction", "n", "block", "k_stated", "k_derived", "tol_stated", "tol_derived",
    "d1", "d1_source", "d2", "d2_source", "d1_actual", "d2_actual",
    "phase", "bit", "phase_derived", "bit_derived", "certificate", "gC_hex", "gD_hex", "params",
)


def _flat(rec: QscRecord) -> dict:
    obj = rec.to_json()
    return {
        "construction": obj["construction"],
        "n": obj["n"],
        "block": obj["block"],
        "k_stated": obj["k_stated"],
        "k_derived": obj["k_derived"],
        "tol_stated": obj["tol_stated"],
        "tol_derived": obj["tol_derived"],
        "d1": obj["d1"]["value"],
        "d1_source": obj["d1"]["source"],
        "d2": obj["d2"]["value"],
        "d2_source": obj["d2"]["source"],
        "d1_actual": (obj["d1_actual"] or {}).get("value"),
        "d2_actual": (obj["d2_actual"] or {}).get("value"),
        "phase": obj["phase"],
        "bit": obj["bit"],
        "phase_derived": obj["phase_derived"],
        "bit_derived": obj["bit_derived"],
        "certificate": "PASS" if rec.passed else "FAIL",
        "gC_hex": obj["gC_hex"],
        "gD_hex": obj["gD_hex"],
        "params": json.dumps(obj["params"], sort_keys=True),
    }


def format_records(records: list[QscRecord], fmt: str) -> str:
    records = sorted(records, key=QscRecord.sort_key)
    if fmt == "json":
        return records_to_json(records)
    rows = [_flat(r) for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    lines = []
    for r in rows:
        src = lambda s: ">=" if s == "bound" else ""  # noqa: E731
        lines.append(
            f"{r['construction']:<16} [[{r['block']}, {r['k_stated']}]] (derived k {r['k_derived']})"
            f"  a_l+a_r < {r['tol_stated']} (derived {r['tol_derived']})"
            f"  d1 {src(r['d1_source'])}{r['d1']} d2 {src(r['d2_source'])}{r['d2']}"
            f"  phase {r['phase']} bit {r['bit']}  {r['certificate']}  {r['params']}"
        )
    return "\n".join(lines) if lines else "(no records)"


# ---------------------------------------------------------------------------
# commands


def cmd_factor(args, cfg: RunConfig) -> int:
    out = [dump(N, "factor") for N in parse_range(args.N)]
    if cfg.fmt == "json":
        _emit(json.dumps(out if len(out) > 1 else out[0], indent=2, sort_keys=True), cfg)
    else:
        lines = []
        for item in out:
            lines.append(f"x^{item['N']}-1:")
            for _, fac in sorted(item["factors"].items(), key=lambda kv: int(kv[0])):
                lines.append(f"  ({fac['text']})^{fac['multiplicity']}    hex {fac['hex']}")
        _emit("\n".join(lines), cfg)
    return 0


def cmd_order(args, cfg: RunConfig) -> int:
    out = []
    for text in args.poly:
        f = parse_poly(text)
        if not f:
            raise UsageError("the zero polynomial has no order")
        out.append({"poly": f.text(), "hex": f.hex(), "order": order(f)})
    if cfg.fmt == "json":
        _emit(json.dumps(out if len(out) > 1 else out[0], indent=2, sort_keys=True), cfg)
    else:
        _emit("\n".join(f"{o['poly']}\t{o['order']}" for o in out), cfg)
    return 0


def cmd_cosets(args, cfg: RunConfig) -> int:
    ns = parse_range(args.n)
    if any(n < 1 or n % 2 == 0 for n in ns):
        raise UsageError("coset tables need odd n >= 1")
    if cfg.fmt == "json":
        out = [dump(n, "cosets") for n in ns]
        _emit(json.dumps(out if len(out) > 1 else out[0], indent=2, sort_keys=True), cfg)
    else:
        lines = []
        for n in ns:
            lines.append(f"n = {n}:")
            lines.extend("  {" + ", ".join(map(str, c)) + "}" for c in cosets(n))
        _emit("\n".join(lines), cfg)
    return 0


def cmd_table1(args, cfg: RunConfig) -> int:
    results = table1.reproduce(cfg.budget)
    if cfg.fmt == "json":
        _emit(json.dumps([r.to_json() for r in results], indent=2, sort_keys=True), cfg)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        rows = [r.to_json() for r in results]
        fields = sorted({k for row in rows for k in row})
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in row.items()})
        _emit(buf.getvalue(), cfg)
    else:
        _emit(table1.format_text(results), cfg)
    return 0 if all(r.passed for r in results) else 1


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs {', '.join(missing)}")


def _polys(args, *names):
    _need(args, *names)
    return [parse_poly(getattr(args, n)) for n in names]


def _grid(args, *names):
    _need(args, *names)
    return itertools.product(*(parse_range(getattr(args, n)) for n in names))


def _leaders(text: str | None) -> list[int]:
    if text is None or text.strip() in ("", "-"):
        return []
    return parse_range(text)


def _jobs(args, budget):
    """Yield zero-argument callables, one per parameter combination."""
    fam = args.family
    if fam == "pair":
        _need(args, "n")
        if args.gC or args.gD:
            gC, gD = _polys(args, "gC", "gD")
            for (n,) in _grid(args, "n"):
                yield lambda n=n: qsc_pair(CyclicCode(n, gC), CyclicCode(n, gD), budget=budget)
            return
        for (n,) in _grid(args, "n"):
            divs = sorted(g.bits for g, _ in iter_divisors(n))
            for gc, gd in itertools.product(divs, divs):
                if gc != gd and _mod(gc, gd) == 0:
                    yield lambda n=n, gc=gc, gd=gd: qsc_pair(
                        CyclicCode(n, BinPoly(gc)), CyclicCode(n, BinPoly(gd)), budget=budget
                    )
    elif fam == "sum":
        g1, g2, g3, g4 = _polys(args, "g1", "g2", "g3", "g4")
        for (n,) in _grid(args, "n"):
            yield lambda n=n: qsc_sum(*(CyclicCode(n, g) for g in (g1, g2, g3, g4)), budget=budget)
    elif fam == "intersection":
        g1, g2, g3 = _polys(args, "g1", "g2", "g3")
        for (n,) in _grid(args, "n"):
            yield lambda n=n: qsc_intersection(*(CyclicCode(n, g) for g in (g1, g2, g3)), budget=budget)
    elif fam == "bch":
        for n, a, b in _grid(args, "n", "a", "b"):
            yield lambda n=n, a=a, b=b: qsc_bch(n, a, b, budget=budget, exact_distances=args.exact)
    elif fam == "bch-sum":
        for n, e, a, b, f in _grid(args, "n", "e", "a", "b", "f"):
            yield lambda n=n, e=e, a=a, b=b, f=f: qsc_bch_sum(
                n, e, a, b, f, budget=budget, exact_distances=args.exact
            )
    elif fam == "duadic":
        for (m,) in _grid(args, "m"):
            if args.corollary:
                yield lambda m=m: qsc_duadic_corollary(m, budget=budget)
            else:
                _need(args, "T")
                T, Tp = _leaders(args.T), _leaders(args.T_prime)
                yield lambda m=m: qsc_duadic(m, T, Tp, budget=budget)
    elif fam == "rr4n":
        for (n,) in _grid(args, "n"):
            if args.f:
                fs = [parse_poly(args.f)]
            else:
                fs = sorted((g for g, _ in iter_divisors(n) if g.deg > 0), key=lambda g: g.bits)
            for f in fs:
                yield lambda n=n, f=f: qsc_rr4n(f, n, budget=budget)
    elif fam == "rr-duadic":
        for m, i in _grid(args, "m", "i"):
            yield lambda m=m, i=i: qsc_rr_duadic(m, i, budget=budget)
    elif fam == "product":
        _need(args, "n", "n_star")
        g1, g2, g3, g4 = _polys(args, "g1", "g2", "g3", "g4")
        n, ns = int(args.n), int(args.n_star)
        yield lambda: qsc_product(
            CyclicCode(n, g1), CyclicCode(ns, g3), CyclicCode(n, g2), CyclicCode(ns, g4), n, ns,
            budget=budget,
        )


def cmd_enumerate(args, cfg: RunConfig) -> int:
    records, errors = [], []
    for job in _jobs(args, cfg.budget):
        try:
            records.append(job())
        except (HypothesisError, CodeError, ValueError, ArithmeticError) as exc:
            errors.append(str(exc))
    if errors and (args.strict or not records):
        for msg in sorted(set(errors)):
            print(f"hypothesis failure: {msg}", file=sys.stderr)
        if not records:
            return 1
    elif errors:
        print(f"{len(errors)} parameter combinations skipped (hypotheses fail)", file=sys.stderr)
    _emit(format_records(records, cfg.fmt), cfg)
    return 1 if errors and args.strict else 0


def cmd_verify(args, cfg: RunConfig) -> int:
    try:
        with open(args.file) as fh:
            records = records_from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read records from {args.file}: {exc}") from None
    failures = 0
    lines = []
    for idx, rec in enumerate(records):
        bad = verify_record(rec)
        if bad:
            failures += 1
            lines.append(f"record {idx} ({rec.construction}, n={rec.n}): FAIL {', '.join(bad)}")
        else:
            lines.append(f"record {idx} ({rec.construction}, n={rec.n}): ok")
    lines.append(f"{len(records) - failures}/{len(records)} records verified")
    _emit("\n".join(lines), cfg)
    return 1 if failures else 0


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="log2 of the distance-search budget")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    p = _Parser(prog="qsync", description="Quantum synchronizable codes from binary cyclic codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("factor", parents=[common], help="factor x^N - 1")
    s.add_argument("N")
    s = sub.add_parser("order", parents=[common], help="order of a polynomial (hex or x^3+x+1)")
    s.add_argument("poly", nargs="+")
    s = sub.add_parser("cosets", parents=[common], help="2-cyclotomic cosets modulo n")
    s.add_argument("n")
    sub.add_parser("table1", parents=[common], help="rebuild the length-4n QSC table")

    s = sub.add_parser("enumerate", parents=[common], help="build QSC records for a family")
    s.add_argument("family", choices=FAMILIES)
    for name in ("n", "m", "a", "b", "e", "f", "i", "T"):
        s.add_argument(f"--{name}", default=None)
    s.add_argument("--T-prime", dest="T_prime", default=None)
    s.add_argument("--n-star", dest="n_star", default=None)
    for name in ("gC", "gD", "g1", "g2", "g3", "g4"):
        s.add_argument(f"--{name}", default=None, help="generator polynomial (hex or sparse text)")
    s.add_argument("--corollary", action="store_true", help="duadic: T = one splitting class")
    s.add_argument("--exact", action="store_true", help="bch: upgrade bound distances by search")
    s.add_argument("--strict", action="store_true", help="fail if any combination is rejected")

    s = sub.add_parser("verify", parents=[common], help="re-check record certificates")
    s.add_argument("file")
    return p


COMMANDS = {
    "factor": cmd_factor,
    "order": cmd_order,
    "cosets": cmd_cosets,
    "table1": cmd_table1,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}

DEFAULT_FORMAT = {"factor": "text", "order": "text", "cosets": "text", "table1": "text",
                  "enumerate": "json", "verify": "text"}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.budget is None:
            budget = default_budget()
        else:
            budget = 1 << args.budget if args.budget >= 0 else 0
        cfg = RunConfig(args.command, budget, args.fmt or DEFAULT_FORMAT[args.command], args.out)
        if args.command == "enumerate" and args.family == "rr4n" and args.f is None and args.n is None:
            raise UsageError("rr4n needs --n")
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"qsync: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
