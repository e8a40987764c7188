"""Command-line front end.

    cnct zeta --z 1.01 --orders 15 --scale 1e-3
    cnct hyp --num 1,3,7 --den 2.5,14 --z 1 --scale 1e-1
    cnct table 4.2 --check
    cnct accelerate --input terms.txt --transform levin-d

Exit codes: 0 ok, 1 check failure, 2 usage or domain error, 3 no convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from .driver import BOTH, TRANSFORMS, AccelerationRequest, AccelerationResult, accelerate_alternating, cnct
from .functions import (
    BesselSumParams,
    HypParams,
    LerchParams,
    PoleError,
    bessel_product_terms,
    lerch_terms,
    pfq_terms,
    polylog_terms,
    zeta_dirichlet_terms,
)
from .series import Scalar, SeriesError, SeriesTerms
from .tables import TABLES, TableSpec, check_value
from .transforms import EULER, LEVIN, WENIGER

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_NOCONV = 3

COLUMNS = ("partial_sum", "euler", "levin_d", "weniger_delta")
_COLUMN_OF = {EULER: "euler", LEVIN: "levin_d", WENIGER: "weniger_delta"}
_DIGITS = 15


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- formatting


def _group(frac: str) -> str:
    return "~".join(frac[i : i + 3] for i in range(0, len(frac), 3))


def format_real(x: float, digits: int = _DIGITS) -> str:
    """Table layout: ``digits`` decimals grouped in threes with ``~``.

    Magnitudes outside ``[1e-3, 1e4)`` switch to a ``digits``-significant
    mantissa with an exponent so that small values keep their precision.
    """
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return "0." + _group("0" * digits)
    sign = "-" if x < 0 else ""
    ax = abs(x)
    if 1e-3 <= ax < 1e4:
        ip, fp = f"{ax:.{digits}f}".split(".")
        return f"{sign}{ip}.{_group(fp)}"
    mant, exp_s = f"{ax:.{digits - 1}e}".split("e")
    ds = mant.replace(".", "")
    return f"{sign}{ds[0]}.{_group(ds[1:])}e{int(exp_s):+03d}"


def format_scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, dict):
        re_, im = v["re"], v["im"]
        op = "-" if im < 0 or (im == 0 and math.copysign(1, im) < 0) else "+"
        return f"{format_real(re_)} {op} {format_real(abs(im))}i"
    return format_real(v)


def _to_json_scalar(v: Optional[Scalar]):
    if v is None:
        return None
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return float(v)


def _csv_scalar(v) -> str:
    if v is None:
        return ""
    if isinstance(v, dict):
        return repr(complex(v["re"], v["im"])).strip("()")
    return repr(float(v))


def _param_text(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_text(rec: dict) -> str:
    """Text rendering of an output record; a function of the JSON form alone."""
    out = [f"problem: {rec['problem']}"]
    if rec["params"]:
        out.append("params: " + " ".join(f"{k}={_param_text(v)}" for k, v in rec["params"].items()))
    cols = [c for c in COLUMNS if any(r.get(c) is not None for r in rec["rows"])]
    header = ["n"] + cols
    body = [[str(r["n"])] + [format_scalar(r.get(c)) for c in cols] for r in rec["rows"]]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    for line in [header] + body:
        out.append("  ".join(x.rjust(w) for x, w in zip(line, widths)).rstrip())
    out.append(f"value: {format_scalar(rec['value'])}")
    err = rec["error_estimate"]
    out.append(f"error_estimate: {err:.3e}" if err is not None else "error_estimate: -")
    out.append(f"term_evaluations: {rec['term_evaluations']}")
    conv = "yes" if rec["converged"] else "no"
    out.append(f"converged: {conv} (order {rec['order_used']})")
    for w in rec.get("stability_warnings", []):
        out.append(f"warning: {w}")
    chk = rec.get("check")
    if chk is not None:
        status = "pass" if chk["ok"] else "FAIL"
        out.append(
            f"check: {status} golden={format_scalar(chk['golden'])} "
            f"error={chk['error']:.3e} tolerance={chk['tolerance']:.1e}"
        )
    return "\n".join(out) + "\n"


def render_csv(rec: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("n",) + COLUMNS)
    for r in rec["rows"]:
        w.writerow([r["n"]] + [_csv_scalar(r.get(c)) for c in COLUMNS])
    return buf.getvalue()


def render_json(rec: dict) -> str:
    return json.dumps(rec, indent=2) + "\n"


def render(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(rec)
    if fmt == "csv":
        return render_csv(rec)
    return render_text(rec)


def build_record(
    problem: str,
    params: dict,
    result: AccelerationResult,
    scale: float,
    euler: Optional[Sequence[Scalar]] = None,
    rows: Optional[int] = None,
) -> dict:
    """Assemble the output record with all values multiplied by ``scale``."""
    n_rows = result.rows if rows is None else min(rows, result.rows)

    def sc(v):
        return _to_json_scalar(None if v is None else v * scale)

    cols: dict[str, Sequence[Scalar]] = {}
    for name, diag in result.diagonals.items():
        cols[_COLUMN_OF[name]] = diag
    if euler is not None:
        cols["euler"] = euler
    table = []
    for n in range(n_rows):
        row = {"n": n, "partial_sum": sc(result.partial_sums[n])}
        for c in COLUMNS[1:]:
            seq = cols.get(c)
            row[c] = sc(seq[n]) if seq is not None and n < len(seq) else None
        table.append(row)
    return {
        "problem": problem,
        "params": params,
        "rows": table,
        "value": sc(result.value),
        "error_estimate": result.error_estimate * abs(scale) if math.isfinite(result.error_estimate) else None,
        "term_evaluations": result.term_evaluations,
        "converged": result.converged,
        "order_used": result.order_used,
        "transform": result.transform,
        "stability_warnings": list(result.stability_warnings),
    }


# ------------------------------------------------------------------- parsing


def parse_real(text: str) -> float:
    """A real number; ``p/q`` fractions are accepted."""
    t = text.strip()
    try:
        if "/" in t:
            return float(Fraction(t))
        return float(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}")


def parse_exact(text: str) -> str:
    """A real parameter kept as its decimal (or ``p/q``) text for exact use."""
    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}")
    return text.strip()


def parse_scalar(text: str) -> Scalar:
    """Real or complex; ``0.5+13.7i`` and ``0.5+13.7j`` are both accepted."""
    t = text.strip().replace(" ", "")
    try:
        return parse_real(t)
    except argparse.ArgumentTypeError:
        pass
    try:
        z = complex(t.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real or complex number: {text!r}")
    return z.real if z.imag == 0 else z


def parse_list(text: str) -> tuple[float, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty parameter list")
    return tuple(parse_real(p) for p in parts)


def read_terms(path: str) -> list[Scalar]:
    """One term per line; ``re im`` for complex; ``#`` starts a comment."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    terms: list[Scalar] = []
    for lineno, raw in enumerate(lines, 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        try:
            if len(fields) == 1:
                terms.append(float(fields[0]))
            elif len(fields) == 2:
                terms.append(complex(float(fields[0]), float(fields[1])))
            else:
                raise ValueError
        except ValueError:
            raise UsageError(f"{path}:{lineno}: expected a number or a 're im' pair, got {body!r}")
    if len(terms) < 4:
        raise UsageError(f"{path}: need at least 4 terms, found {len(terms)}")
    return terms


# ------------------------------------------------------------------ commands


def _common(p: argparse.ArgumentParser, table: bool = False) -> None:
    g = p.add_argument_group("acceleration and output")
    g.add_argument("--tol", type=float, default=1e-14, help="relative stopping tolerance (default 1e-14)")
    g.add_argument("--max-order", type=int, default=30, help="highest transformation order (default 30)")
    g.add_argument("--beta", type=float, default=1.0, help="transformation parameter beta (default 1)")
    if not table:
        g.add_argument("--transform", choices=TRANSFORMS, default=BOTH)
    g.add_argument("--format", choices=("text", "json", "csv"), default="text")
    g.add_argument("--scale", type=float, default=None, help="display multiplier")
    g.add_argument("--orders", type=int, default=None, help="print rows n = 0..N")


def _request(args, terms: SeriesTerms, transform: str, orders: Optional[int]) -> AccelerationRequest:
    max_order = args.max_order
    if orders is not None:
        if orders < 0:
            raise UsageError("--orders must be non-negative")
        max_order = max(max_order, orders)
    return AccelerationRequest(
        terms=terms,
        transform=transform,
        beta=args.beta,
        target_rel_tol=args.tol,
        max_order=max_order,
        min_order=orders or 0,
    )


def _euler_column(terms: SeriesTerms, args, rows: int) -> list[Scalar]:
    order = max(rows - 1, 2)
    req = AccelerationRequest(terms=terms, transform=EULER, max_order=order, min_order=order)
    return cnct(req).diagonals[EULER][:rows]


def _run_problem(args, problem: str, params: dict, terms: SeriesTerms, euler: bool = False) -> dict:
    scale = 1.0 if args.scale is None else args.scale
    res = cnct(_request(args, terms, args.transform, args.orders))
    extra = None
    if euler and args.transform == BOTH:
        extra = _euler_column(terms, args, res.rows)
    rows = None if args.orders is None else args.orders + 1
    params = dict(params, scale=scale, transform=args.transform, beta=args.beta)
    return build_record(problem, params, res, scale, extra, rows)


def cmd_zeta(args) -> dict:
    z = args.z
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    return _run_problem(args, "zeta", {"z": _param_text(z)}, zeta_dirichlet_terms(z), euler=True)


def cmd_lerch(args) -> dict:
    p = LerchParams(args.z, args.s, args.alpha)
    return _run_problem(args, "lerch", {"z": args.z, "s": args.s, "alpha": args.alpha}, lerch_terms(p))


def cmd_polylog(args) -> dict:
    return _run_problem(args, "polylog", {"s": args.s, "z": args.z}, polylog_terms(args.s, args.z))


def cmd_hyp(args) -> dict:
    p = HypParams(args.num, args.den, args.z)
    params = {"num": ",".join(map(repr, args.num)), "den": ",".join(map(repr, args.den)), "z": args.z}
    return _run_problem(args, "hyp", params, pfq_terms(p))


def cmd_bessel_sum(args) -> dict:
    p = BesselSumParams(args.r, args.y)
    return _run_problem(args, "bessel-sum", {"r": args.r, "y": args.y}, bessel_product_terms(p))


def run_table(spec: TableSpec, args, check: bool) -> dict:
    orders = spec.orders if args.orders is None else args.orders
    scale = spec.scale if args.scale is None else args.scale
    req = AccelerationRequest(
        terms=spec.make_terms(),
        transform=BOTH,
        beta=args.beta,
        target_rel_tol=args.tol,
        max_order=max(args.max_order, orders),
        min_order=orders,
    )
    res = cnct(req)
    extra = _euler_column(spec.make_terms(), args, orders + 1) if spec.euler else None
    params = dict(id=spec.table_id, title=spec.title, **spec.params, scale=scale, transform=BOTH, beta=args.beta)
    rec = build_record(f"table {spec.table_id}", params, res, scale, extra, orders + 1)
    if check:
        ok = True
        worst = 0.0
        for v in res.values.values():
            good, err = check_value(spec, v * spec.scale)
            ok, worst = ok and good, max(worst, err)
        rec["check"] = {
            "ok": ok,
            "golden": _to_json_scalar(spec.golden),
            "error": worst,
            "tolerance": spec.tolerance,
        }
    return rec


def cmd_table(args) -> list[dict]:
    if args.all:
        if args.table_id is not None:
            raise UsageError("give either a table id or --all, not both")
        specs = list(TABLES.values())
    else:
        if args.table_id is None:
            raise UsageError("missing table id (or --all)")
        if args.table_id not in TABLES:
            raise UsageError(f"unknown table id {args.table_id!r}; choose from {', '.join(TABLES)}")
        specs = [TABLES[args.table_id]]
    with ThreadPoolExecutor(max_workers=min(8, len(specs))) as pool:
        return list(pool.map(lambda s: run_table(s, args, args.check), specs))


def cmd_accelerate(args) -> dict:
    terms = read_terms(args.input)
    S: list[Scalar] = []
    acc: Scalar = 0.0
    for t in terms:
        acc = acc + t
        S.append(acc)
    A = [t if j % 2 == 0 else -t for j, t in enumerate(terms)]
    max_order = min(args.max_order, len(S) - 2)
    orders = None if args.orders is None else min(args.orders, max_order)
    res = accelerate_alternating(
        S, A, args.transform, args.beta, max_order=max_order, target_rel_tol=args.tol, min_order=orders or 0
    )
    scale = 1.0 if args.scale is None else args.scale
    params = {"input": args.input, "terms": len(terms), "scale": scale, "transform": args.transform, "beta": args.beta}
    rows = None if orders is None else orders + 1
    return build_record("accelerate", params, res, scale, None, rows)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cnct", description="Condensation plus Levin-type sequence transformations for slowly convergent series.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="Riemann zeta function")
    p.add_argument("--z", type=parse_scalar, required=True, help="argument, real or complex (e.g. 0.5+13.7i)")
    _common(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("lerch", help="Lerch transcendent Phi(z, s, alpha)")
    p.add_argument("--z", type=parse_exact, required=True)
    p.add_argument("--s", type=parse_real, required=True)
    p.add_argument("--alpha", type=parse_real, required=True)
    _common(p)
    p.set_defaults(func=cmd_lerch)

    p = sub.add_parser("polylog", help="polylogarithm Li_s(z)")
    p.add_argument("--s", type=parse_real, required=True)
    p.add_argument("--z", type=parse_exact, required=True)
    _common(p)
    p.set_defaults(func=cmd_polylog)

    p = sub.add_parser("hyp", help="generalized hypergeometric series p+1Fp")
    p.add_argument("--num", type=parse_list, required=True, help="comma-separated numerator parameters")
    p.add_argument("--den", type=parse_list, required=True, help="comma-separated denominator parameters")
    p.add_argument("--z", type=parse_exact, required=True)
    _common(p)
    p.set_defaults(func=cmd_hyp)

    p = sub.add_parser("bessel-sum", help="sum_l (2l+1) j_l(iry) h_l(iy)")
    p.add_argument("--r", type=parse_exact, required=True)
    p.add_argument("--y", type=parse_exact, required=True)
    _common(p)
    p.set_defaults(func=cmd_bessel_sum)

    p = sub.add_parser("table", help="reproduce a reference table")
    p.add_argument("table_id", nargs="?", help=", ".join(TABLES))
    p.add_argument("--check", action="store_true", help="compare with the golden value")
    p.add_argument("--all", action="store_true", help="run every table")
    _common(p, table=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("accelerate", help="accelerate an alternating series read from a file")
    p.add_argument("--input", required=True, help="one term (-1)^j A_j per line")
    _common(p)
    p.set_defaults(func=cmd_accelerate)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.max_order < 2:
        ap.error("--max-order must be >= 2")
    if not args.tol > 0:
        ap.error("--tol must be positive")
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"cnct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesError, ValueError, TypeError) as exc:
        print(f"cnct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = out if isinstance(out, list) else [out]
    for rec in records:
        sys.stdout.write(render(rec, args.format))
    if any(r.get("check") is not None and not r["check"]["ok"] for r in records):
        return EXIT_CHECK
    if not all(r["converged"] for r in records):
        return EXIT_NOCONV
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
