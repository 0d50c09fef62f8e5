"""Command-line front end.

    knotstab classify --cf "[2,-2,-8,2]"
    knotstab sweep --family appc_vertical --range -4:8 --format csv
    knotstab export-zeros --poly "1,-3,1" --out zeros.csv --format csv
    knotstab report --family xn --range 1:8 --out report/

Exit codes: 0 ok, 2 bad input, 3 enumeration cap exceeded, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import CapExceeded, InvariantViolation, KnotStabError, ParseError
from .families import EvenCF
from .polyring import IntPoly, normalize_alexander
from .report import plot_verdicts, plot_zeros, rows_csv, rows_json, zero_rows, zeros_csv, zeros_json
from .seifert import SeifertMatrix, alexander_poly, seifert_2bridge, signature
from .stability import classify, hoste_report, squarefree_decomposition
from .sweeps import COLUMNS, DEFAULT_CAP, FAMILIES, SweepSpec, family_polynomials, run_sweep

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4


def parse_input(args) -> Tuple[str, str, IntPoly, Optional[int]]:
    """(kind, text, normalized polynomial, signature if a Seifert matrix is known)."""
    if args.cf is not None:
        cf = EvenCF.from_text(args.cf)
        M = seifert_2bridge(cf)
        return "cf", str(cf), normalize_alexander(alexander_poly(M)), signature(M)
    if args.matrix is not None:
        M = SeifertMatrix.from_text(args.matrix)
        return "matrix", M.to_text(), normalize_alexander(alexander_poly(M)), signature(M)
    if args.poly is not None:
        p = IntPoly.from_text(args.poly)
        if p.is_zero():
            raise ParseError("zero polynomial", 0)
        return "poly", args.poly.strip(), p, None
    raise ParseError("one of --cf, --poly, --matrix is required", 0)


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ParseError(f"bad range {text!r}, expected LO:HI", 0) from None


def _spec(args) -> SweepSpec:
    lo, hi = _parse_range(args.range)
    return SweepSpec(args.family, args.max_len, args.max_coef, lo, hi, args.cap)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    kind, text, p, sig = parse_input(args)
    rep = classify(p, tol=1e-8, with_delta=True, with_zeros=p.degree > 0, seed=args.seed)
    data = {"input": {"kind": kind, "text": text}, "polynomial": p.to_text(), "pretty": p.pretty()}
    data.update(rep.to_dict())
    data["certified"] = rep.certified
    data["factors"] = [[q.to_text(), m] for q, m in squarefree_decomposition(p)] if p.degree > 0 else []
    data["signature"] = sig
    data["hoste_ok"] = bool(hoste_report(p, seed=args.seed)["hoste_ok"]) if p.degree > 0 else True
    if args.format == "csv":
        row = {k: data[k] for k in ("polynomial", "verdict", "n_real", "n_unit", "n_other", "delta_max_lo", "delta_max_hi", "signature", "hoste_ok")}
        row["signature"] = "" if sig is None else sig
        _emit(rows_csv([row], list(row)), args.out)
    else:
        _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = run_sweep(_spec(args), threads=args.threads, tol=args.tol, seed=args.seed)
    _emit(rows_csv(rows, COLUMNS) if args.format == "csv" else rows_json(rows), args.out)
    return EXIT_OK


def _zero_items(args) -> List[Tuple[str, IntPoly]]:
    if args.family:
        return list(family_polynomials(_spec(args)))
    kind, text, p, _ = parse_input(args)
    return [(text, p)]


def cmd_export_zeros(args) -> int:
    rows = zero_rows(_zero_items(args), tol=args.tol, seed=args.seed)
    _emit(zeros_csv(rows) if args.format == "csv" else zeros_json(rows), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    if not args.out:
        raise ParseError("report needs --out DIR", 0)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.family:
        rows = run_sweep(_spec(args), threads=args.threads, tol=args.tol, seed=args.seed)
        title = f"{args.family} {args.range}"
    else:
        kind, text, p, sig = parse_input(args)
        rep = classify(p, seed=args.seed)
        rows = [{"id": text, "cf": text if kind == "cf" else "", "polynomial": p.to_text(), "verdict": rep.verdict,
                 "n_real": rep.n_real, "n_unit": rep.n_unit, "n_other": rep.n_other,
                 "delta_max": "" if rep.delta_max is None else f"{float(sum(rep.delta_max) / 2):.12g}",
                 "signature": "" if sig is None else sig, "hoste_ok": bool(hoste_report(p)["hoste_ok"])}]
        title = text
    zrows = zero_rows([(r["id"], IntPoly.from_text(r["polynomial"])) for r in rows], tol=args.tol, seed=args.seed)
    ext = "csv" if args.format == "csv" else "json"
    files = {
        f"summary.{ext}": rows_csv(rows, COLUMNS) if ext == "csv" else rows_json(rows),
        f"zeros.{ext}": zeros_csv(zrows) if ext == "csv" else zeros_json(zrows),
    }
    for name, body in files.items():
        (out / name).write_text(body)
    plot_zeros(zrows, out / "zeros.png", title)
    plot_verdicts(rows, out / "verdicts.png", title)
    listing = sorted(list(files) + ["zeros.png", "verdicts.png"])
    sys.stdout.write(json.dumps({"out": str(out), "files": listing, "members": len(rows)}, indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (directory for report); stdout when omitted")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tol", type=float, default=1e-12, help="residual tolerance of numeric zeros")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=0, help="worker processes (0 = all cores; KNOTSTAB_THREADS overrides)")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--cf", help='even continued fraction, e.g. "[2,-2,-8,2]"')
    single.add_argument("--poly", help='coefficients from the leading one down, e.g. "1,-3,1"')
    single.add_argument("--matrix", help='Seifert matrix rows, e.g. "1,1;0,-1"')

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=FAMILIES)
    family.add_argument("--max-len", type=int, default=4, help="cf_enum: longest continued fraction")
    family.add_argument("--max-coef", type=int, default=4, help="cf_enum: largest |entry|; montesinos: largest |entry|")
    family.add_argument("--range", default="1:8", help="parameter range LO:HI for the other families")
    family.add_argument("--cap", type=int, default=DEFAULT_CAP, help="refuse enumerations larger than this")

    parser = argparse.ArgumentParser(prog="knotstab", description="Zero distributions of Alexander polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common, single], help="classify one polynomial")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("sweep", parents=[common, family], help="classify every member of a family")
    p.set_defaults(func=cmd_sweep)
    p = sub.add_parser("export-zeros", parents=[common, single, family], help="write re,im,label rows")
    p.set_defaults(func=cmd_export_zeros)
    p = sub.add_parser("report", parents=[common, single, family], help="tables and figures into a directory")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--range -4:8" would otherwise be read as an unknown option
    for i in range(len(argv) - 1):
        if argv[i] == "--range":
            argv[i : i + 2] = [f"--range={argv[i + 1]}", ""]
    args = parser.parse_args([a for a in argv if a != ""])
    if args.command == "sweep" and not args.family:
        parser.error("sweep needs --family")
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantViolation, AssertionError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KnotStabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
