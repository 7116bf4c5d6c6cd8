"""Command-line frontend: describe | flow | invariants | check.

JSON documents have top level {"input": ..., "result": ..., "version": ...}.
Exact rationals are serialized as "p/q" strings, never floats. A flow
trajectory can be written as CSV for plotting (12 significant digits per
cell) with an exact-value JSON sidecar next to it.

Exit codes: 0 success, 1 failed verification suite, 2 usage error,
3 domain rejection, 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import DomainError
from .flow import (
    bounds_report,
    class_at,
    diameter_bound,
    lambda1_bounds,
    make_flow,
    ricci_lower_constant,
    volume,
)
from .invariants import invariants_of, lct_lower
from .oracle import SuiteConfig, run_suite
from .parabolic import build_flag, canonical_divisor
from .rootsys import build_root_system

DESCRIPTOR_KEYS = {
    "lie_family", "rank", "theta", "class", "divisor",
    "t", "samples", "t_max_fraction",
}
CSV_HEADER = ["t", "R", "ricci_norm_sq", "vol_coeff", "R_lower", "R_upper"]
DEFAULT_SAMPLES = 10
DEFAULT_T_MAX_FRACTION = "99/100"


def rat(x) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def dec12(x: Fraction) -> str:
    return format(float(x), ".12g")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagflow",
        description="Exact Kahler-Ricci flow and divisor invariants "
                    "on rational homogeneous varieties.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_descriptor(p: argparse.ArgumentParser) -> None:
        p.add_argument("--type", dest="family", choices=list("ABCDEFG"),
                       help="simple Lie family")
        p.add_argument("--rank", type=int)
        p.add_argument("--theta", default=None,
                       help="comma-separated 1-based simple-root indices "
                            "(default: empty, the Borel case)")
        p.add_argument("--job", metavar="FILE",
                       help="JSON file carrying the descriptor fields instead of flags")

    def add_output(p: argparse.ArgumentParser, formats=("json",)) -> None:
        p.add_argument("--format", choices=list(formats), default="json")
        p.add_argument("--output", metavar="FILE")

    p = sub.add_parser("describe", help="flag-variety data for (type, rank, theta)")
    add_descriptor(p)
    add_output(p)

    p = sub.add_parser("flow", help="flow trajectory, curvature and bounds")
    add_descriptor(p)
    p.add_argument("--class", dest="kclass",
                   help="comma-separated rationals: initial Kahler class")
    p.add_argument("--divisor",
                   help="comma-separated rationals: start at the divisor class b = d")
    p.add_argument("--t", help="single evaluation time (rational)")
    p.add_argument("--samples", type=int,
                   help=f"trajectory sample count (default {DEFAULT_SAMPLES})")
    p.add_argument("--t-max-fraction", dest="t_max_fraction",
                   help=f"sample up to this fraction of T (default {DEFAULT_T_MAX_FRACTION})")
    add_output(p, formats=("json", "csv"))

    p = sub.add_parser("invariants", help="nef value, degree, section counts, bounds")
    add_descriptor(p)
    p.add_argument("--divisor", help="comma-separated rationals: ample divisor class")
    p.add_argument("--lct-m", dest="lct_m", type=int,
                   help="report the log canonical threshold bound for m*D")
    add_output(p)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("--seed", type=int, default=0)
    add_output(p)
    return parser


def _split_list(value) -> list[str] | None:
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return [part.strip() for part in str(value).split(",") if part.strip()]


def resolve_descriptor(args, parser: argparse.ArgumentParser) -> dict:
    """Merge --job and flag input into one descriptor dict."""
    if args.job:
        flag_fields = (args.family, args.rank, args.theta,
                       getattr(args, "kclass", None), getattr(args, "divisor", None),
                       getattr(args, "t", None), getattr(args, "samples", None),
                       getattr(args, "t_max_fraction", None))
        if any(v is not None for v in flag_fields):
            parser.error("--job cannot be combined with descriptor flags")
        try:
            with open(args.job, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read job file: {exc}")
        unknown = set(data) - DESCRIPTOR_KEYS
        if unknown:
            parser.error(f"unknown job fields: {sorted(unknown)}")
    else:
        data = {
            "lie_family": args.family,
            "rank": args.rank,
            "theta": _split_list(args.theta) or [],
            "class": _split_list(getattr(args, "kclass", None)),
            "divisor": _split_list(getattr(args, "divisor", None)),
            "t": getattr(args, "t", None),
            "samples": getattr(args, "samples", None),
            "t_max_fraction": getattr(args, "t_max_fraction", None),
        }
        data = {k: v for k, v in data.items() if v is not None}
    if data.get("lie_family") is None or data.get("rank") is None:
        parser.error("--type and --rank are required (or provide them via --job)")
    data.setdefault("theta", [])
    try:
        data["rank"] = int(data["rank"])
        data["theta"] = [int(i) for i in data["theta"]]
    except (TypeError, ValueError):
        parser.error("rank and theta entries must be integers")
    return data


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_describe(flag) -> dict:
    rs = flag.rs
    v0 = volume(make_flow(flag, tuple(Fraction(l) for l in flag.fano)), 0)
    return {
        "family": rs.family,
        "rank": rs.rank,
        "theta": list(flag.theta),
        "complement": list(flag.complement),
        "n": flag.n,
        "positive_roots": [list(k) for k in rs.positive_roots],
        "comp_pos_root_indices": list(flag.comp_pos_roots),
        "comp_pos_roots": [list(rs.positive_roots[i]) for i in flag.comp_pos_roots],
        "delta_p": [int(c) for c in flag.delta_p],
        "fano": list(flag.fano),
        "canonical_divisor": [int(c) for c in canonical_divisor(flag)],
        "v0_coeff": rat(v0.coeff),
    }


def _flow_times(fs, desc: dict, parser) -> list[Fraction]:
    if desc.get("t") is not None:
        if desc.get("samples") is not None:
            parser.error("--t and --samples are mutually exclusive")
        return [parse_rational(desc["t"])]
    count = int(desc.get("samples") or DEFAULT_SAMPLES)
    if count < 1:
        parser.error("--samples must be at least 1")
    fraction = parse_rational(desc.get("t_max_fraction") or DEFAULT_T_MAX_FRACTION)
    if not 0 < fraction < 1:
        raise DomainError(f"t-max-fraction must lie in (0,1), got {fraction}")
    if count == 1:
        return [Fraction(0)]
    return [fs.T * fraction * j / (count - 1) for j in range(count)]


def cmd_flow(flag, desc: dict, parser) -> tuple[dict, list[dict]]:
    kclass = desc.get("class")
    divisor = desc.get("divisor")
    if (kclass is None) == (divisor is None):
        parser.error("provide exactly one of --class or --divisor")
    b = tuple(parse_rational(s) for s in (kclass if kclass is not None else divisor))
    fs = make_flow(flag, b)
    times = _flow_times(fs, desc, parser)

    samples = []
    for t in times:
        rep = bounds_report(fs, t)
        lam_lo, lam_hi = lambda1_bounds(fs, t)
        samples.append({"t": t, "class": class_at(fs, t), "rep": rep,
                        "lambda1": (lam_lo, lam_hi)})

    c_const = ricci_lower_constant(fs)
    diam_value, diam_radicand = diameter_bound(fs)
    result = {
        "family": flag.rs.family,
        "rank": flag.rs.rank,
        "theta": list(flag.theta),
        "n": flag.n,
        "T": rat(fs.T),
        "einstein": fs.einstein,
        "ricci_lower_constant": rat(c_const),
        "ricci_lower_bound": rat(1 / c_const),
        "diameter_upper": {"radicand": rat(diam_radicand), "value": diam_value},
        "samples": [
            {
                "t": rat(s["t"]),
                "class": [rat(x) for x in s["class"]],
                "R": rat(s["rep"].R),
                "ricci_norm_sq": rat(s["rep"].ricci_norm_sq),
                "vol_coeff": rat(s["rep"].vol_coeff),
                "lambda1_lower": rat(s["lambda1"][0]),
                "lambda1_upper": rat(s["lambda1"][1]),
                "bounds": {
                    "R_lower": rat(s["rep"].R_lower),
                    "R_upper": rat(s["rep"].R_upper),
                    "ricci_norm_sq_lower": rat(s["rep"].ricci_norm_sq_lower),
                    "ricci_norm_sq_upper": rat(s["rep"].ricci_norm_sq_upper),
                    "vol_coeff_lower": rat(s["rep"].vol_coeff_lower),
                    "vol_coeff_upper": rat(s["rep"].vol_coeff_upper),
                    "within": s["rep"].within,
                    "r_upper_attained": s["rep"].r_upper_attained,
                    "rm_bound": s["rep"].rm_bound,
                },
            }
            for s in samples
        ],
    }
    if fs.einstein:
        result["R_times_T_minus_t"] = str(flag.n)
    csv_rows = [
        [dec12(s["t"]), dec12(s["rep"].R), dec12(s["rep"].ricci_norm_sq),
         dec12(s["rep"].vol_coeff), dec12(s["rep"].R_lower), dec12(s["rep"].R_upper)]
        for s in samples
    ]
    return result, csv_rows


def cmd_invariants(flag, desc: dict, parser, lct_m: int | None) -> dict:
    divisor = desc.get("divisor")
    if divisor is None:
        parser.error("invariants requires --divisor")
    d = tuple(parse_rational(s) for s in divisor)
    rep = invariants_of(flag, d)
    result = {
        "tau": rat(rep.tau),
        "T": rat(rep.T_script),
        "C": rat(rep.C_script),
        "degree": rat(rep.degree),
        "dimV": rep.dimV,
        "lambda1_lower": rat(rep.lambda1_lower),
        "lambda1_upper": None if rep.lambda1_upper is None else rat(rep.lambda1_upper),
    }
    if rep.borel is not None:
        result["borel_only_bounds"] = {
            "seshadri_upper": rat(rep.borel.seshadri_upper),
            "gromov_width_upper": rat(rep.borel.gromov_width_upper),
            "kahler_radius_upper": rep.borel.kahler_radius_upper,
            "sympl_radius_upper": rat(rep.borel.sympl_radius_upper),
        }
    if lct_m is not None:
        lct = lct_lower(flag, d, lct_m)
        result["lct"] = {
            "m": lct_m,
            "bound": rat(lct.bound),
            "klt": lct.klt,
            "lc": lct.lc,
        }
    return result


def _dispatch(args, parser: argparse.ArgumentParser) -> int:
    if args.command == "check":
        report = run_suite(SuiteConfig(seed=args.seed))
        doc = {"input": {"seed": args.seed}, "result": report.as_dict(),
               "version": __version__}
        _emit(doc, args.output)
        return 0 if report.exact_ok else 1

    desc = resolve_descriptor(args, parser)
    rs = build_root_system(desc["lie_family"], desc["rank"])
    flag = build_flag(rs, desc["theta"])

    if args.command == "describe":
        doc = {"input": desc, "result": cmd_describe(flag), "version": __version__}
        _emit(doc, args.output)
        return 0

    if args.command == "flow":
        result, csv_rows = cmd_flow(flag, desc, parser)
        doc = {"input": desc, "result": result, "version": __version__}
        if args.format == "csv":
            if not args.output:
                parser.error("--format csv requires --output "
                             "(the exact-value sidecar is written next to it)")
            with open(args.output, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(CSV_HEADER)
                writer.writerows(csv_rows)
            _emit(doc, args.output + ".json")
        else:
            _emit(doc, args.output)
        return 0

    if args.command == "invariants":
        result = cmd_invariants(flag, desc, parser, args.lct_m)
        doc = {"input": desc, "result": result, "version": __version__}
        _emit(doc, args.output)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 4


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
