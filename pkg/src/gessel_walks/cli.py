"""Command-line front end.

Subcommands: count, sequence, verify, fit, export.  Exit status is 0 on
success, 1 when a verification instance fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import identities, path_oracle
from .errors import GesselError
from .identities.extraction import PolynomialFinding
from .identities.suites import DEFAULT_LIMITS, SUITE_IDS, required_m
from .report import build_report, exact_str, report_csv, report_json, report_text, rows_csv
from .walk_dp import Region, WalkQuery, build_table, count, diagonal_total, iter_layers, table_rows

DEFAULT_M_MAX = 64
FORMATS = ("text", "json", "csv")
SEQUENCES = ("gessel", "a", "g", "F2n_0_1")
REGION_NAMES = {"quarter": Region.QUARTER, "half": Region.HALF, "diagonal": Region.DIAGONAL}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    m_max: int = DEFAULT_M_MAX
    oracle_cap: int = 12
    suites: list[str] = field(default_factory=lambda: ["all"])
    format: str = "text"
    output_path: Optional[str] = None
    strict: bool = False
    n_max: Optional[int] = None
    k_max: Optional[int] = None

    def expanded_suites(self) -> list[str]:
        out: list[str] = []
        for s in self.suites:
            for sid in (list(DEFAULT_LIMITS) if s == "all" else [s]):
                if sid not in out:
                    out.append(sid)
        return out

    def limits(self) -> dict:
        return {"n_max": self.n_max, "k_max": self.k_max, "oracle_cap": self.oracle_cap, "m_max": self.m_max}

    def validate(self) -> None:
        if not 0 <= self.oracle_cap <= path_oracle.MAX_LENGTH:
            raise UsageError(f"--oracle-cap must be in 0..{path_oracle.MAX_LENGTH}, got {self.oracle_cap}")
        for s in self.suites:
            if s not in SUITE_IDS:
                raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITE_IDS)}")
        for sid in self.expanded_suites():
            need = required_m(sid, self.limits())
            if need > self.m_max:
                raise UsageError(f"suite {sid} needs m_max >= {need}, have {self.m_max}")


def default_m_max() -> int:
    raw = os.environ.get("GESSEL_MMAX")
    if raw is None:
        return DEFAULT_M_MAX
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"GESSEL_MMAX must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError(f"GESSEL_MMAX must be >= 0, got {value}")
    return value


def nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _emit(text: str, output_path: Optional[str]) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _m_max(args) -> int:
    return args.m_max if args.m_max is not None else default_m_max()


def _check_steps(m: int, m_max: int) -> None:
    if m > m_max:
        raise UsageError(f"requested m={m} exceeds m_max={m_max} (raise with --m-max or GESSEL_MMAX)")


def cmd_count(args) -> int:
    _check_steps(args.steps, _m_max(args))
    if args.region == "diagonal-total":
        table = build_table(Region.DIAGONAL, args.steps, rolling=True)
        value = diagonal_total(table, args.steps)
    else:
        region = REGION_NAMES[args.region]
        table = build_table(region, args.steps, rolling=True)
        value = count(table, WalkQuery(region, args.steps, args.n1, args.n2))
    if args.format == "json":
        doc = {"region": args.region, "m": args.steps, "n1": args.n1, "n2": args.n2, "count": str(value)}
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = rows_csv(["region", "m", "n1", "n2", "count"], [(args.region, args.steps, args.n1, args.n2, value)])
    else:
        text = f"{value}\n"
    _emit(text, args.output)
    return 0


def sequence_terms(name: str, limit: int, m_max: int) -> list[int]:
    """First ``limit`` terms of a named DP sequence, one layer in memory at a time."""
    if name == "a":
        region, last_m = Region.DIAGONAL, limit - 1
        pick = {m: (lambda layer: sum(layer.values())) for m in range(limit)}
    else:
        region = Region.QUARTER
        if name == "gessel":
            targets = {2 * n: (0, 0) for n in range(limit)}
        elif name == "g":
            targets = {2 * n + 1: (1, 0) for n in range(limit)}
        elif name == "F2n_0_1":
            targets = {2 * n: (0, 1) for n in range(limit)}
        else:
            raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")
        last_m = max(targets)
        pick = {m: (lambda layer, pt=pt: layer.get(pt, 0)) for m, pt in targets.items()}
    _check_steps(last_m, m_max)
    terms = []
    for m, layer in iter_layers(region):
        if m in pick:
            terms.append(pick[m](layer))
        if m >= last_m:
            break
    return terms


def cmd_sequence(args) -> int:
    terms = sequence_terms(args.name, args.limit, _m_max(args))
    if args.format == "json":
        text = json.dumps({"name": args.name, "terms": [str(t) for t in terms]}, indent=2) + "\n"
    elif args.format == "csv":
        text = rows_csv(["index", "value"], enumerate(terms))
    else:
        text = "".join(f"{t}\n" for t in terms)
    _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig(
        m_max=_m_max(args),
        oracle_cap=args.oracle_cap,
        suites=args.suite or ["all"],
        format=args.format,
        output_path=args.output,
        strict=args.strict,
        n_max=args.n_max,
        k_max=args.k_max,
    )
    cfg.validate()
    results = [(sid, identities.run_suite(sid, cfg.limits())) for sid in cfg.expanded_suites()]
    report = build_report(results, strict=cfg.strict)
    if cfg.format == "json":
        text = report_json(report)
    elif cfg.format == "csv":
        text = report_csv(report)
    else:
        text = report_text(report)
    _emit(text, cfg.output_path)
    if cfg.output_path and cfg.format != "text":
        sys.stdout.write(report_text(report).splitlines()[-1] + "\n")
    return 0 if report["all_passed"] else 1


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


def finding_dict(f: PolynomialFinding) -> dict:
    out = {
        "family": f.family,
        "k": f.k,
        "coefficients": [exact_str(c) for c in f.poly.coeffs],
        "polynomial": str(f.poly),
        "degree": f.poly.degree(),
        "degree_ok": f.degree_ok,
        "integrality_ok": f.integrality_ok,
        "leading_ok": f.leading_ok,
        "divisibility_ok": f.divisibility_ok,
    }
    if f.companion is not None:
        out["companion"] = {
            "family": f.companion_family,
            "coefficients": [exact_str(c) for c in f.companion.coeffs],
            "polynomial": str(f.companion),
            "degree": f.companion.degree(),
        }
    return out


def _finding_text(f: PolynomialFinding) -> str:
    lines = [
        f"{f.family} (k={f.k}): {f.poly}",
        f"  coefficients (low to high): {', '.join(exact_str(c) for c in f.poly.coeffs) or '0'}",
        f"  degree={f.poly.degree()} degree_ok={_flag(f.degree_ok)} integrality_ok={_flag(f.integrality_ok)} "
        f"leading_ok={_flag(f.leading_ok)} divisibility_ok={_flag(f.divisibility_ok)}",
    ]
    content, prim = f.poly.primitive()
    if not f.poly.has_integer_coeffs():
        lines.insert(2, f"  = ({exact_str(content)}) * ({prim})")
    if f.companion is not None:
        lines.append(f"  {f.companion_family}(n) = {f.companion}")
        lines.append(f"  {f.companion_family} coefficients (low to high): "
                     f"{', '.join(exact_str(c) for c in f.companion.coeffs)}")
    return "\n".join(lines) + "\n"


def cmd_fit(args) -> int:
    if args.family == "c1":
        findings = list(identities.c1_findings(args.k))
    elif args.family == "c2":
        findings = [identities.c2_extract(args.k)]
    else:
        findings = [identities.c4_extract(args.k)]
    if args.format == "json":
        text = json.dumps({"findings": [finding_dict(f) for f in findings]}, indent=2) + "\n"
    elif args.format == "csv":
        rows = []
        for f in findings:
            rows.extend((f.family, f.k, i, c) for i, c in enumerate(f.poly.coeffs))
            if f.companion is not None:
                rows.extend((f.companion_family, f.k, i, c) for i, c in enumerate(f.companion.coeffs))
        text = rows_csv(["family", "k", "degree", "coefficient"], rows)
    else:
        text = "".join(_finding_text(f) for f in findings)
    _emit(text, args.output)
    return 0 if all(f.all_ok for f in findings) else 1


def cmd_export(args) -> int:
    _check_steps(args.steps, _m_max(args))
    region = REGION_NAMES[args.region]
    table = build_table(region, args.steps)
    rows = list(table_rows(table))
    if args.format == "json":
        doc = {"region": region.value, "m_max": args.steps,
               "entries": [{"m": m, "n1": a, "n2": b, "count": str(c)} for m, a, b, c in rows]}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = rows_csv(["m", "n1", "n2", "count"], rows)
    _emit(text, args.output)
    return 0


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m-max", type=nonneg_int, default=None,
                        help=f"largest step count a table may reach (default $GESSEL_MMAX or {DEFAULT_M_MAX})")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", metavar="PATH", default=None)

    parser = argparse.ArgumentParser(prog="gessel", description="Exact enumeration of Gessel walks and related path families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print one exact walk count")
    p.add_argument("--region", choices=list(REGION_NAMES) + ["diagonal-total"], default="quarter")
    p.add_argument("-m", "--steps", type=nonneg_int, required=True)
    p.add_argument("--n1", type=int, default=0)
    p.add_argument("--n2", type=int, default=0)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", parents=[common], help="print the first terms of a count sequence")
    p.add_argument("name", choices=SEQUENCES)
    p.add_argument("limit", type=positive_int)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITE_IDS, help="repeatable; default all")
    p.add_argument("--n-max", type=nonneg_int, default=None)
    p.add_argument("--k-max", type=positive_int, default=None)
    p.add_argument("--oracle-cap", type=nonneg_int, default=12)
    p.add_argument("--strict", action="store_true", help="count documented discrepancies as failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", parents=[common], help="extract a conjectured polynomial family")
    p.add_argument("family", choices=("c1", "c2", "c4"))
    p.add_argument("k", type=positive_int)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("export", parents=[common], help="dump a DP table")
    p.add_argument("--region", choices=list(REGION_NAMES), default="quarter")
    p.add_argument("-m", "--steps", type=nonneg_int, required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GesselError) as exc:
        print(f"gessel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
