"""Command-line front end.  Prints JSON (schema "1") or plain text.

Exit codes: 0 success, 1 computation error or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import ehrhart, frobenius, identities
from .exact_arith import Instance, format_rational
from .fourier_dedekind import (
    sigma_closed_n1,
    sigma_closed_n2,
    sigma_exact,
    sigma_numeric,
)

SCHEMA = "1"
NUMERIC_TOL = 1e-9


class CheckFailed(RuntimeError):
    pass


def _s(x) -> str:
    return format_rational(x)


def _check(ok: bool, message: str) -> None:
    if not ok:
        raise CheckFailed(message)


def cmd_sigma(args) -> dict:
    value = sigma_exact(args.t, args.args, args.mod)
    out = {"value": _s(value)}
    if args.check:
        approx = sigma_numeric(args.t, args.args, args.mod)
        _check(abs(approx - float(value)) < NUMERIC_TOL, f"numeric summation gives {approx!r}, exact {value}")
        if len(args.args) == 1:
            closed = sigma_closed_n1(args.t, args.args[0], args.mod)
            _check(closed == value, f"one-argument closed form gives {closed}")
        elif len(args.args) == 2 and args.mod >= 2:
            closed = sigma_closed_n2(args.t, args.args[0], args.args[1], args.mod)
            _check(closed == value, f"sawtooth sum gives {closed}")
        out["checked"] = True
    return out


def cmd_ehrhart(args) -> dict:
    inst = Instance(args.parts)
    if args.interior:
        count = ehrhart.count_interior(inst, args.t)
        oracle = ehrhart.brute_force_interior
    else:
        count = ehrhart.count_closed(inst, args.t)
        oracle = ehrhart.brute_force_closed
    out = {"count": _s(count)}
    if args.check:
        if args.t < 0:
            raise CheckFailed("no enumeration oracle for negative t")
        expected = oracle(inst, args.t)
        _check(expected == count, f"enumeration gives {expected}, formula {count}")
        out["checked"] = True
    return out


def cmd_partitions(args) -> dict:
    inst = Instance(args.parts)
    if args.restricted:
        count = ehrhart.count_restricted_partitions(inst, args.t)
        shift = 0
    else:
        count = ehrhart.count_partitions(inst, args.t)
        shift = sum(inst.parts)
    out = {"count": _s(count)}
    if args.check:
        tt = args.t + shift
        expected = ehrhart.brute_force_facet(inst, tt) if tt > 0 else 0
        _check(expected == count, f"enumeration gives {expected}, formula {count}")
        out["checked"] = True
    return out


def _representable_by_enumeration(parts, s: int) -> bool:
    # nonnegative representation of s <=> positive representation of s + sum(parts)
    return s >= 0 and ehrhart.brute_force_facet(parts, s + sum(parts)) > 0


def _check_frobenius(inst: Instance, g: int) -> None:
    if g >= 0:
        _check(not _representable_by_enumeration(inst.parts, g), f"g = {g} is representable")
    a_min = min(inst.parts)
    for s in range(g + 1, g + 1 + a_min):
        _check(_representable_by_enumeration(inst.parts, s), f"{s} > g is not representable")
    if inst.pairwise_coprime:
        f = g + sum(inst.parts)
        _check(ehrhart.count_restricted_partitions(inst, f) == 0, f"p'_A(f) != 0 for f = {f}")


def cmd_frobenius(args) -> dict:
    inst = Instance(args.parts)
    g = frobenius.frobenius_g(inst)
    out = {"f": _s(g + sum(inst.parts)), "g": _s(g)}
    if args.check:
        _check_frobenius(inst, g)
        out["checked"] = True
    return out


def cmd_bounds(args) -> dict:
    inst = Instance(args.parts)
    report = frobenius.frobenius_report(inst)
    out = {
        "f": _s(report.f),
        "g": _s(report.g),
        "bounds": {k: _s(v) for k, v in report.bounds.items()},
        "violations": sorted(report.violations()),
    }
    if args.check:
        _check_frobenius(inst, report.g)
        _check(not report.violations(), f"bounds below the exact value: {sorted(report.violations())}")
        out["checked"] = True
    return out


def cmd_residue(args) -> dict:
    inst = Instance(args.parts)
    poly = ehrhart.residue_Rprime(inst) if args.prime else ehrhart.residue_R(inst)
    out = {
        "polynomial": "R'_t" if args.prime else "R_{-t}",
        "coefficients": [_s(c) for c in poly.coefficients],
    }
    if args.check:
        # the counting formula built on this polynomial must match enumeration
        for t in range(1, 2 * sum(inst.parts) + 2):
            if args.prime:
                got, want = ehrhart.count_restricted_partitions(inst, t), ehrhart.brute_force_facet(inst, t)
            else:
                got, want = ehrhart.count_closed(inst, t), ehrhart.brute_force_closed(inst, t)
            _check(got == want, f"t = {t}: formula {got}, enumeration {want}")
        out["checked"] = True
    return out


def _numeric_recheck(check: identities.IdentityCheck) -> None:
    p = check.params
    if check.name in ("zagier", "zagier-signed", "gessel"):
        parts, t = p["parts"], p.get("t", 0)
        approx = sum(
            sigma_numeric(t, parts[:j] + parts[j + 1:], a) for j, a in enumerate(parts)
        )
    elif check.name == "gessel2d":
        m, n, r = p["m"], p["n"], p["r"]
        approx = sigma_numeric(r + 1, (n, 1), m) + sigma_numeric(r + 1, (m, 1), n)
    else:
        parts, t = p["parts"], p["t"]
        expected = (-1) ** len(parts) * ehrhart.brute_force_closed(parts, t)
        _check(check.rhs == expected, f"{check.to_dict()}: enumeration gives {expected}")
        return
    _check(abs(approx - float(check.lhs)) < NUMERIC_TOL, f"{check.to_dict()}: numeric lhs {approx!r}")


def cmd_verify(args) -> dict:
    names = sorted(identities.SUITES) if args.suite == "all" else [args.suite]
    summaries = []
    for name in names:
        summary = identities.run_suite(name, args.max)
        if args.check:
            family, default_max = identities.SUITES[name]
            for check in family(default_max if args.max is None else args.max):
                _numeric_recheck(check)
        summaries.append(summary)
    out = {
        "checked": sum(s.checked for s in summaries),
        "passed": sum(s.passed for s in summaries),
        "failed": sum(s.failed for s in summaries),
        "failures": [f for s in summaries for f in s.to_dict()["failures"]],
        "suites": {s.suite: {"checked": s.checked, "passed": s.passed, "failed": s.failed} for s in summaries},
    }
    if args.check:
        out["checked_numerically"] = True
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticecount",
        description="Fourier-Dedekind sums, Ehrhart counts, restricted partitions and Frobenius numbers.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--check", action="store_true", help="re-verify against an independent oracle")
        p.set_defaults(func=func)
        return p

    p = add("sigma", cmd_sigma, "exact Fourier-Dedekind sum sigma_t(args; mod)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--args", type=int, nargs="*", default=[])
    p.add_argument("--mod", type=int, required=True)

    p = add("ehrhart", cmd_ehrhart, "lattice points in t*P (or its interior)")
    p.add_argument("--parts", type=int, nargs="+", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--interior", action="store_true")

    p = add("partitions", cmd_partitions, "partitions of t with parts in A")
    p.add_argument("--parts", type=int, nargs="+", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--restricted", action="store_true", help="every part used at least once")

    p = add("frobenius", cmd_frobenius, "exact Frobenius numbers f and g")
    p.add_argument("--parts", type=int, nargs="+", required=True)

    p = add("bounds", cmd_bounds, "upper bounds for the Frobenius number")
    p.add_argument("--parts", type=int, nargs="+", required=True)

    p = add("verify", cmd_verify, "exhaustive checks of the reciprocity laws")
    p.add_argument("--suite", choices=sorted(identities.SUITES) + ["all"], required=True)
    p.add_argument("--max", type=int, default=None, help="largest part in the enumerated family")

    p = add("residue", cmd_residue, "coefficients of R_{-t} or R'_t (constant term first)")
    p.add_argument("--parts", type=int, nargs="+", required=True)
    p.add_argument("--prime", action="store_true")
    return parser


def _render(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, separators=(",", ":"))
    lines = []
    for key, value in obj.items():
        if key == "schema":
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, separators=(",", ":"))
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (ValueError, ArithmeticError, RuntimeError, KeyError) as exc:
        error = {"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)}}
        print(_render(error, args.format))
        return 1
    out = {"schema": SCHEMA, **result}
    print(_render(out, args.format))
    if args.command == "verify" and result["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
