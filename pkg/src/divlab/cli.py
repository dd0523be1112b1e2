"""``divlab`` command-line front end.

Exit codes: 0 the property holds / divides, 1 it fails / does not divide,
2 usage or parse error, 3 inconclusive (factoring budget or vacuous modulus).

JSON reports have the keys ``command, ring, inputs, result, counts, version``
in that order; every integer is written as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .errors import DivlabError, FactorizationIncomplete
from .expr import format_element, format_poly, parse_poly
from .lab import (
    DEFAULT_CAP_FAILURES,
    SamplePlan,
    ScanReport,
    dring_quotient,
    epp_verdict,
    int_membership,
    ipp_witnesses,
    scan_divisibility,
    sum_two_squares,
    unit_valued_scan,
)
from .lucas import congruence_check, lucas_table, pell_fundamental
from .numtheory import DEFAULT_TRIAL_BOUND
from .poly import NEG_INF, Poly, PolyTower, divides_exact, pseudo_divide
from .rings import QQ, ZZ, DenominatorSet, Localized, Quad, Quadratic, RingSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

# Per-command default sample ranges (RANGE mode unless --samples is given).
_DEFAULT_RANGES = {"ipp": (1, 1000)}


class UsageError(DivlabError):
    pass


def parse_ring(text: str, trial_bound: int = DEFAULT_TRIAL_BOUND) -> RingSpec:
    """``z``, ``q``, ``zxy``, ``quad:<d>`` or ``zloc:<spec>``.

    Localization specs: ``1/n:<n>``, ``primes:<p,...>``, ``except:<p,...>``,
    ``mod:<r>,<m>[,+p...]``.
    """
    if text == "z":
        return ZZ
    if text == "q":
        return QQ
    if text == "zxy":
        return PolyTower(ZZ, "x")
    kind, _, rest = text.partition(":")
    try:
        if kind == "quad":
            return Quadratic(int(rest))
        if kind == "zloc":
            return Localized(_parse_denominators(rest), trial_bound)
    except ValueError as exc:
        raise UsageError(f"bad ring {text!r}: {exc}") from None
    raise UsageError(f"unknown ring {text!r}")


def _parse_denominators(spec: str) -> DenominatorSet:
    mode, _, rest = spec.partition(":")
    if mode == "1/n":
        return DenominatorSet.dividing(int(rest))
    if mode == "primes":
        return DenominatorSet.of_primes(int(p) for p in rest.split(","))
    if mode == "except":
        return DenominatorSet.all_except(int(p) for p in rest.split(","))
    if mode == "mod":
        parts = rest.split(",")
        extra = [int(p[1:]) for p in parts[2:] if p.startswith("+")]
        if len(extra) != len(parts) - 2:
            raise ValueError("extra primes are written +p")
        return DenominatorSet.residue_class(int(parts[0]), int(parts[1]), extra)
    raise ValueError(f"unknown localization {spec!r}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_json_value(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return "-inf" if v == NEG_INF else repr(v)
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, (Fraction, Quad)):
        return format_element(v)
    if isinstance(v, dict):
        return {str(k): to_json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_json_value(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__}")


def render_text(report: dict[str, Any]) -> str:
    lines = [f"{report['command']} [{report['ring']}]"]
    for section in ("inputs", "result", "counts"):
        for key, value in report.get(section, {}).items():
            lines.append(f"  {key}: {_text_value(value)}")
    return "\n".join(lines)


def _text_value(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text_value(x)}" for k, x in v.items()) + "}"
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _common(sampling: bool = False) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--ring", default="z", help="z | q | zxy | zloc:<spec> | quad:<d>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trial-bound", type=int, default=DEFAULT_TRIAL_BOUND)
    if sampling:
        p.add_argument("--kmin", type=int)
        p.add_argument("--kmax", type=int)
        p.add_argument("--samples", type=int, help="switch to RANDOM sampling with this many points")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap-failures", type=int, default=DEFAULT_CAP_FAILURES)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divlab", description="Polynomial divisibility experiments.")
    parser.add_argument("--version", action="version", version=f"divlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    plain, sampled = _common(), _common(sampling=True)

    def add(name: str, help: str, parent: argparse.ArgumentParser, *polys: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, parents=[parent])
        for arg in polys:
            sp.add_argument(arg)
        return sp

    add("divides", "does G divide F in R[x]", plain, "G", "F")
    add("pseudodiv", "pseudo-divide F by G", plain, "F", "G")
    add("scan", "check G(k) | F(k) on samples", sampled, "G", "F")
    add("epp", "scan then exact division", sampled, "G", "F")
    ipp = add("ipp", "prime witnesses of G", sampled, "G")
    ipp.add_argument("--exclude", type=int, default=1, help="drop primes dividing this constant")
    add("dring", "F/G over the fraction field if G(k) | F(k) almost everywhere", sampled, "F", "G")
    add("int", "is H in Int(Z)", plain, "H")
    add("units", "does F take only unit values", sampled, "F")
    lucas = add("lucas", "Lucas sequence table", plain)
    lucas.add_argument("--n", type=int, required=True)
    group = lucas.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", type=int)
    group.add_argument("--symbolic", action="store_true")
    cong = add("congruence", "Julia Robinson and shift congruences", plain)
    cong.add_argument("--kind", choices=("jr1", "jr2", "jr3", "shift"), required=True)
    cong.add_argument("--n", type=int, required=True)
    cong.add_argument("--a", type=int)
    cong.add_argument("--k", type=int)
    cong.add_argument("--i", type=int)
    cong.add_argument("--m", type=int)
    cong.add_argument("--sign", choices=("+", "-"), default="+", help="shift direction")
    cong.add_argument("--symbolic", action="store_true")
    pell = add("pell", "fundamental solution of x^2 - d y^2 = 1", plain)
    pell.add_argument("--d", type=int, required=True)
    pell.add_argument("--y-cap", type=int, default=10**6)
    s2sq = add("s2sq", "write a prime as a sum of two squares", plain)
    s2sq.add_argument("P", type=int)
    batch = sub.add_parser("batch", help="run one command per line, emit a JSON array")
    batch.add_argument("file")
    return parser


def _plan(args: argparse.Namespace) -> SamplePlan:
    lo, hi = _DEFAULT_RANGES.get(args.command, (-1000, 1000))
    lo = lo if args.kmin is None else args.kmin
    hi = hi if args.kmax is None else args.kmax
    if args.samples is not None:
        return SamplePlan.random(args.samples, args.seed, lo, hi)
    return SamplePlan.range(lo, hi, seed=args.seed)


def _plan_json(plan: SamplePlan) -> dict[str, Any]:
    out: dict[str, Any] = {"mode": plan.mode.value, "k_min": plan.k_min, "k_max": plan.k_max}
    if plan.mode.value == "RANDOM":
        out["count"] = plan.count
        out["seed"] = plan.seed
    return out


def _scan_counts(scan: ScanReport) -> dict[str, Any]:
    return {
        "tested": scan.tested,
        "skipped_zero_divisor": scan.skipped_zero_divisor,
        "inconclusive": scan.inconclusive,
        "failures": scan.failure_count,
    }


def _failures(scan: ScanReport) -> list[dict[str, Any]]:
    return [{"k": k, "g_k": gk, "f_k": fk} for k, gk, fk in scan.failures]


# ---------------------------------------------------------------------------
# commands: each returns (exit code, result, counts, inputs)
# ---------------------------------------------------------------------------


def _cmd_divides(args: argparse.Namespace, ring: RingSpec) -> tuple:
    g, f = parse_poly(args.G, ring), parse_poly(args.F, ring)
    q = divides_exact(g, f)
    return (EXIT_OK if q is not None else EXIT_FAIL, {"divides": q is not None, "quotient": q}, {}, {"G": g, "F": f})


def _cmd_pseudodiv(args: argparse.Namespace, ring: RingSpec) -> tuple:
    f, g = parse_poly(args.F, ring), parse_poly(args.G, ring)
    r = pseudo_divide(f, g)
    result = {
        "s": r.s,
        "scale": r.scale,
        "quotient": r.quotient,
        "remainder": r.remainder,
        "identity_holds": r.check(f, g),
    }
    return EXIT_OK, result, {}, {"F": f, "G": g}


def _cmd_scan(args: argparse.Namespace, ring: RingSpec) -> tuple:
    g, f = parse_poly(args.G, ring), parse_poly(args.F, ring)
    plan = _plan(args)
    scan = scan_divisibility(g, f, plan, args.cap_failures)
    code = EXIT_FAIL if not scan.passed else EXIT_INCONCLUSIVE if scan.inconclusive else EXIT_OK
    result = {"passed": scan.passed, "failures": _failures(scan), "plan": _plan_json(plan)}
    return code, result, _scan_counts(scan), {"G": g, "F": f}


def _cmd_epp(args: argparse.Namespace, ring: RingSpec) -> tuple:
    g, f = parse_poly(args.G, ring), parse_poly(args.F, ring)
    plan = _plan(args)
    v = epp_verdict(g, f, plan, args.cap_failures)
    code = {"DIVIDES": EXIT_OK, "INCONCLUSIVE": EXIT_INCONCLUSIVE}.get(v.kind.value, EXIT_FAIL)
    result = {
        "verdict": v.kind.value,
        "quotient": v.quotient,
        "counterexample": v.counterexample,
        "anomaly": v.anomaly,
        "degree_report": {
            "deg_f": v.degree_report.deg_f,
            "deg_g": v.degree_report.deg_g,
            "dpp_satisfied": v.degree_report.dpp_satisfied,
            "deg_f_le_deg_g": v.degree_report.deg_f_le_deg_g,
        },
        "plan": _plan_json(plan),
    }
    return code, result, _scan_counts(v.scan), {"G": g, "F": f}


def _cmd_ipp(args: argparse.Namespace, ring: RingSpec) -> tuple:
    g = parse_poly(args.G, ring)
    plan = _plan(args)
    w = ipp_witnesses(g, plan, args.exclude, args.trial_bound)
    result = {
        "witnesses": list(w.witnesses),
        "excluded": list(w.excluded),
        "per_witness_example": w.per_witness_example,
        "plan": _plan_json(plan),
    }
    counts = {"samples": w.samples, "witnesses": len(w.witnesses), "incomplete_values": w.incomplete_values}
    code = EXIT_INCONCLUSIVE if w.incomplete_values else EXIT_OK
    return code, result, counts, {"G": g, "exclude": args.exclude}


def _cmd_dring(args: argparse.Namespace, ring: RingSpec) -> tuple:
    f, g = parse_poly(args.F, ring), parse_poly(args.G, ring)
    q = dring_quotient(f, g, _plan(args))
    return (EXIT_OK if q is not None else EXIT_FAIL, {"quotient": q}, {}, {"F": f, "G": g})


def _cmd_int(args: argparse.Namespace, ring: RingSpec) -> tuple:
    h = parse_poly(args.H, QQ)
    member = int_membership(h)
    return (EXIT_OK if member else EXIT_FAIL, {"member": member}, {}, {"H": h})


def _cmd_units(args: argparse.Namespace, ring: RingSpec) -> tuple:
    f = parse_poly(args.F, ring)
    r = unit_valued_scan(f, ring, _plan(args))
    example = None
    if r.non_unit_example is not None:
        example = {"k": r.non_unit_example[0], "value": r.non_unit_example[1], "index": r.non_unit_index}
    code = EXIT_OK if r.all_units else EXIT_FAIL if example else EXIT_INCONCLUSIVE
    counts = {"tested": r.tested, "inconclusive": r.inconclusive}
    return code, {"all_units": r.all_units, "non_unit_example": example}, counts, {"F": f}


def _cmd_lucas(args: argparse.Namespace, ring: RingSpec) -> tuple:
    table = lucas_table(args.n, None if args.symbolic else args.a)
    rows = [{"n": j, "X": x, "Y": y} for j, (x, y) in enumerate(zip(table.xs, table.ys))]
    result: dict[str, Any] = {"rows": rows}
    if not args.symbolic:
        a = args.a
        result["pell_holds"] = all(x * x - (a * a - 1) * y * y == 1 for x, y in zip(table.xs, table.ys))
    inputs = {"n": args.n, "a": None if args.symbolic else args.a, "symbolic": args.symbolic}
    return EXIT_OK, result, {"row_count": len(rows)}, inputs


def _cmd_congruence(args: argparse.Namespace, ring: RingSpec) -> tuple:
    kind = args.kind if args.kind != "shift" else f"shift{args.sign}"
    v = congruence_check(kind, args.n, args.a, args.k, args.i, args.m, symbolic=args.symbolic)
    code = {"HOLDS": EXIT_OK, "FAILS": EXIT_FAIL}.get(v.status.value, EXIT_INCONCLUSIVE)
    result = {
        "status": v.status.value,
        "modulus": v.modulus,
        "lhs_residue": v.lhs_residue,
        "extra_residue": v.extra_residue,
        "trivial_modulus": v.trivial_modulus,
    }
    return code, result, {}, {"kind": v.kind.value, **v.params, "symbolic": v.symbolic}


def _cmd_pell(args: argparse.Namespace, ring: RingSpec) -> tuple:
    sol = pell_fundamental(args.d, args.y_cap)
    result = {"x": sol[0], "y": sol[1]} if sol else {"x": None, "y": None}
    return (EXIT_OK if sol else EXIT_FAIL, result, {}, {"d": args.d, "y_cap": args.y_cap})


def _cmd_s2sq(args: argparse.Namespace, ring: RingSpec) -> tuple:
    sol = sum_two_squares(args.P)
    result = {"a": sol[0], "b": sol[1]} if sol else {"a": None, "b": None}
    return (EXIT_OK if sol else EXIT_FAIL, result, {}, {"p": args.P})


_COMMANDS = {
    "divides": _cmd_divides,
    "pseudodiv": _cmd_pseudodiv,
    "scan": _cmd_scan,
    "epp": _cmd_epp,
    "ipp": _cmd_ipp,
    "dring": _cmd_dring,
    "int": _cmd_int,
    "units": _cmd_units,
    "lucas": _cmd_lucas,
    "congruence": _cmd_congruence,
    "pell": _cmd_pell,
    "s2sq": _cmd_s2sq,
}


def execute(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    """Run a parsed single command; returns (exit code, JSON-ready report)."""
    ring = parse_ring(args.ring, args.trial_bound)
    code, result, counts, inputs = _COMMANDS[args.command](args, ring)
    report = {
        "command": args.command,
        "ring": ring.describe() if args.command != "int" else QQ.describe(),
        "inputs": to_json_value(inputs),
        "result": to_json_value(result),
        "counts": to_json_value(counts),
        "version": f"divlab {__version__}",
    }
    return code, report


def _run_one(parser: argparse.ArgumentParser, argv: Sequence[str]) -> tuple[int, dict[str, Any] | None, str]:
    # Returns (exit code, report or None, diagnostic).
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None, "usage error"
    if args.command == "batch":
        return EXIT_USAGE, None, "batch files cannot nest"
    try:
        code, report = execute(args)
    except FactorizationIncomplete as exc:
        return EXIT_INCONCLUSIVE, None, str(exc)
    except (DivlabError, ArithmeticError) as exc:
        return EXIT_USAGE, None, str(exc)
    return code, report, ""


def _run_batch(parser: argparse.ArgumentParser, path: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        print(f"divlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = []
    worst = EXIT_OK
    for line in lines:
        if not line or line.startswith("#"):
            continue
        argv = shlex.split(line)
        if argv and argv[0] == "divlab":
            argv = argv[1:]
        code, report, err = _run_one(parser, argv)
        if report is None:
            report = {"command": argv[0] if argv else "", "error": err}
            print(f"divlab: {line}: {err}", file=sys.stderr)
        report["exit_code"] = str(code)
        out.append(report)
        worst = max(worst, code)
    print(json.dumps(out, indent=2, ensure_ascii=False))
    return worst


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["batch"]:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        return _run_batch(parser, args.file)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, report = execute(args)
    except FactorizationIncomplete as exc:
        print(f"divlab: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (DivlabError, ArithmeticError) as exc:
        print(f"divlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(render_text(report))
    return code


def main() -> None:
    sys.exit(run())
