"""Serialization of verification results.

Exact values are always written as decimal strings ("123" or "-5/27"),
never as JSON numbers, so nothing is rounded on the way out.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .identities.suites import KNOWN_DISCREPANCIES, IdentityInstance


def exact_str(value: Union[int, Fraction]) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(int(value))


def params_str(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def counts_as_failure(inst: IdentityInstance, strict: bool) -> bool:
    return not inst.passed and (strict or not inst.known_discrepancy)


def build_report(results: Sequence[tuple[str, list[IdentityInstance]]], strict: bool = False) -> dict:
    suites = []
    failing_known = set()
    all_ok = True
    for suite_id, instances in results:
        passed = sum(i.passed for i in instances)
        documented = sum(1 for i in instances if not i.passed and i.known_discrepancy)
        failing_known.update(i.identity_id for i in instances if not i.passed and i.known_discrepancy)
        all_ok &= not any(counts_as_failure(i, strict) for i in instances)
        suites.append({
            "id": suite_id,
            "instances": [
                {
                    "identity_id": i.identity_id,
                    "params": dict(i.params),
                    "lhs": exact_str(i.lhs),
                    "rhs": exact_str(i.rhs),
                    "passed": i.passed,
                    "known_discrepancy": i.known_discrepancy,
                }
                for i in instances
            ],
            "passed_count": passed,
            "failed_count": len(instances) - passed,
            "documented_failure_count": documented,
        })
    return {
        "suites": suites,
        "strict": strict,
        "documented_discrepancies": {k: KNOWN_DISCREPANCIES[k] for k in sorted(failing_known)},
        "all_passed": all_ok,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_text(report: dict) -> str:
    lines = []
    for suite in report["suites"]:
        total = suite["passed_count"] + suite["failed_count"]
        line = f"{suite['id']}: {total} instances, {suite['passed_count']} passed, {suite['failed_count']} failed"
        if suite["documented_failure_count"]:
            line += f" ({suite['documented_failure_count']} documented discrepancies)"
        lines.append(line)
        for inst in suite["instances"]:
            if inst["passed"]:
                continue
            params = " ".join(f"{k}={v}" for k, v in inst["params"].items())
            tag = "  [documented]" if inst["known_discrepancy"] else "  [UNEXPECTED]"
            lines.append(f"  FAIL {inst['identity_id']} {params}: lhs={inst['lhs']} rhs={inst['rhs']}{tag}")
    for ident, reason in report["documented_discrepancies"].items():
        lines.append(f"note: {ident}: {reason}")
    mode = "strict" if report["strict"] else "documented discrepancies allowed"
    lines.append(f"overall: {'PASS' if report['all_passed'] else 'FAIL'} ({mode})")
    return "\n".join(lines) + "\n"


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "identity_id", "params", "lhs", "rhs", "passed", "known_discrepancy"])
    for suite in report["suites"]:
        for inst in suite["instances"]:
            w.writerow([suite["id"], inst["identity_id"], params_str(inst["params"]), inst["lhs"], inst["rhs"],
                        str(inst["passed"]).lower(), str(inst["known_discrepancy"]).lower()])
    return buf.getvalue()


def rows_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([exact_str(v) if isinstance(v, (int, Fraction)) else v for v in row])
    return buf.getvalue()
