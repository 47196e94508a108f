"""Command-line surface tying the modules together.

Subcommands:

* ``table``        — the nine-row divisor table of pushed-forward bundles.
* ``cohomology``   — character-graded cohomology of a twisted projective
                     space or invariant hypersurface.
* ``ext``          — the Ext profile between two decomposition terms
                     (``Y:a,b,c`` or ``M:i,j``).
* ``trace``        — run and validate the main certificate chain; exit 0
                     iff every certificate replays.
* ``charts``       — list blow-up charts, check the chart-by-chart
                     isomorphism, and run finite-field smoothness sweeps.

``--format machine`` emits one JSON record per result line, with sorted keys
so identical inputs give identical bytes.  ``--output`` redirects the report
to a file; a relative path is resolved against $SODCERT_OUTPUT_DIR when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .chars import Character, CharMultiset
from .equivariant_cohomology import (
    HypersurfaceSpec,
    WeightedProjSpace,
    cohomology_Pn,
    cohomology_hypersurface,
)
from .geometry_charts import (
    BadPrime,
    CubicPair,
    FERMAT_PAIR,
    cubic_pair_from_config,
    isomorphism_sweep,
    nonredundant_charts,
    render_smoothness_report,
    smoothness_evidence,
)
from .pushforward import Divisor3, EqLineBundle, table_as_text, table_records
from .sod_engine import (
    EquivariantM,
    LineBundleY,
    MainTheoremTrace,
    Sod,
    SodTerm,
    render_term,
    render_trace,
    run_main_theorem_trace,
    trace_records,
    validate_trace,
)

OUTPUT_DIR_ENV = "SODCERT_OUTPUT_DIR"
DEFAULT_PRIMES: Tuple[int, ...] = (5, 7, 13)


@dataclass(frozen=True)
class RunConfig:
    """Resolved run settings: cubic pair, primes, format, output path."""

    cubics: CubicPair
    primes: Tuple[int, ...]
    fmt: str
    output: Optional[Path]


def _parse_term(text: str) -> SodTerm:
    kind, _, rest = text.partition(":")
    try:
        parts = [int(piece) for piece in rest.split(",")]
        if kind == "Y" and len(parts) == 3:
            return LineBundleY(Divisor3(*parts))
        if kind == "M" and len(parts) == 2:
            return EquivariantM(EqLineBundle(parts[0], Character(parts[1] % 3)))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"{text!r} is not a term; use Y:a,b,c or M:i,j"
    )


def _parse_int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list") from exc


def _parse_space(text: str) -> int:
    lowered = text.lower()
    if lowered.startswith("p") and lowered[1:].isdigit():
        return int(lowered[1:])
    raise argparse.ArgumentTypeError(f"{text!r} is not a projective space (use e.g. p5)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sodcert",
        description="certificate checks for a semiorthogonal-decomposition identification",
    )
    parser.add_argument("--config", type=Path, default=None, help="JSON config file")
    parser.add_argument(
        "--format", choices=("text", "machine"), default="text", dest="fmt",
        help="report format (machine = one JSON record per line)",
    )
    parser.add_argument("--output", type=Path, default=None, help="write the report here")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table", help="divisor table of the nine pushed-forward bundles")

    cohom = sub.add_parser("cohomology", help="character-graded cohomology query")
    cohom.add_argument("--space", type=_parse_space, required=True, help="e.g. p5")
    cohom.add_argument("--weights", type=_parse_int_list, required=True,
                       help="action weights w0,...,wN")
    cohom.add_argument("--degree", type=int, required=True, help="twist degree d")
    cohom.add_argument("--hypersurface", type=_parse_int_list, default=None,
                       metavar="E,CHAR", help="restrict to an invariant hypersurface")

    ext = sub.add_parser("ext", help="Ext profile between two decomposition terms")
    ext.add_argument("--from", dest="source", type=_parse_term, required=True,
                     metavar="TERM", help="Y:a,b,c or M:i,j")
    ext.add_argument("--to", dest="target", type=_parse_term, required=True,
                     metavar="TERM", help="Y:a,b,c or M:i,j")

    trace = sub.add_parser("trace", help="run and validate the main certificate chain")
    trace.add_argument("--emit", type=Path, default=None,
                       help="also write machine records to this path")
    trace.add_argument("--inject-fault", action="store_true",
                       help="corrupt one certificate before validation (testing hook)")

    charts = sub.add_parser("charts", help="blow-up charts of the resolved quotient")
    charts.add_argument("--check-iso", action="store_true",
                        help="check the chart-by-chart isomorphism")
    charts.add_argument("--smoothness", action="store_true",
                        help="finite-field Jacobian sweeps")
    charts.add_argument("--primes", type=_parse_int_list, default=None,
                        help="primes for the smoothness sweep")
    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    cubics = FERMAT_PAIR
    primes = DEFAULT_PRIMES
    if args.config is not None:
        data = json.loads(Path(args.config).read_text())
        cubics = cubic_pair_from_config(data)
        if "primes" in data:
            primes = tuple(int(p) for p in data["primes"])
    if getattr(args, "primes", None):
        primes = args.primes
    return RunConfig(cubics=cubics, primes=primes, fmt=args.fmt, output=args.output)


def _resolve_output(path: Path) -> Path:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        return Path(base) / path
    return path


def _machine_lines(records: Sequence[Dict[str, object]]) -> str:
    return "".join(json.dumps(record, sort_keys=True) + "\n" for record in records)


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (report text, exit status)
# ---------------------------------------------------------------------------


def _cmd_table(config: RunConfig, args: argparse.Namespace) -> Tuple[str, int]:
    if config.fmt == "machine":
        records = [{"type": "table-row", **row} for row in table_records()]
        return _machine_lines(records), 0
    return table_as_text(), 0


def _graded_records(graded: Dict[int, CharMultiset], query: Dict[str, object]) -> List[Dict[str, object]]:
    records = []
    for degree in sorted(graded):
        V = graded[degree]
        records.append({
            "type": "cohomology",
            **query,
            "cohomological_degree": degree,
            "total": V.total_dim(),
            "multiplicities": {str(value): m for value, m in V.items()},
        })
    return records


def _cmd_cohomology(config: RunConfig, args: argparse.Namespace) -> Tuple[str, int]:
    n = args.space
    if len(args.weights) != n + 1:
        print(f"error: p{n} needs {n + 1} weights, got {len(args.weights)}", file=sys.stderr)
        return 2
    space = WeightedProjSpace(tuple(Character(w % 3) for w in args.weights))
    if args.hypersurface is None:
        graded = cohomology_Pn(space, args.degree)
    else:
        if len(args.hypersurface) != 2:
            print("error: --hypersurface needs E,CHAR", file=sys.stderr)
            return 2
        e, form_char = args.hypersurface
        graded = cohomology_hypersurface(
            HypersurfaceSpec(space, e, Character(form_char % 3)), args.degree
        )
    query: Dict[str, object] = {
        "space": n,
        "weights": list(args.weights),
        "degree": args.degree,
    }
    if args.hypersurface is not None:
        query["hypersurface"] = list(args.hypersurface)
    if config.fmt == "machine":
        return _machine_lines(_graded_records(graded, query)), 0
    if not graded:
        return "all cohomology vanishes\n", 0
    lines = []
    for degree in sorted(graded):
        V = graded[degree]
        parts = " + ".join(f"{m}*chi_{value}" for value, m in V.items())
        lines.append(f"H^{degree}: dim {V.total_dim()} = {parts}")
    return "\n".join(lines) + "\n", 0


def _cmd_ext(config: RunConfig, args: argparse.Namespace) -> Tuple[str, int]:
    from .sod_engine import ext_oracle

    profile = ext_oracle(args.source, args.target)
    if config.fmt == "machine":
        record = {
            "type": "ext",
            "from": render_term(args.source),
            "to": render_term(args.target),
            "profile": "indeterminate" if profile.is_indeterminate
            else {str(deg): dim for deg, dim in profile.dims},
        }
        return _machine_lines([record]), 0
    if profile.is_indeterminate:
        return "indeterminate\n", 0
    if profile.is_zero():
        return "0 in all degrees\n", 0
    lines = [f"Ext^{deg}: {dim}" for deg, dim in profile.dims]
    return "\n".join(lines) + "\n", 0


def _inject_fault(trace: MainTheoremTrace) -> MainTheoremTrace:
    """Corrupt the last certificate's recorded result (testing hook)."""
    last = trace.steps[-1]
    cert = last.certificates[-1]
    terms = list(cert.result.terms)
    terms[1], terms[2] = terms[2], terms[1]
    corrupted = replace(cert, result=Sod(tuple(terms), cert.result.provenance))
    new_last = replace(last, certificates=last.certificates[:-1] + (corrupted,))
    return MainTheoremTrace(trace.steps[:-1] + (new_last,))


def _cmd_trace(config: RunConfig, args: argparse.Namespace) -> Tuple[str, int]:
    trace = run_main_theorem_trace()
    if args.inject_fault:
        trace = _inject_fault(trace)
    problems = validate_trace(trace)
    if args.emit is not None:
        emit_path = _resolve_output(args.emit)
        emit_path.parent.mkdir(parents=True, exist_ok=True)
        emit_path.write_text(_machine_lines(trace_records(trace)))
    if config.fmt == "machine":
        report = _machine_lines(trace_records(trace))
    else:
        verdict = (
            f"all {len(trace.certificates)} certificates replay: ok"
            if not problems
            else "\n".join(problems)
        )
        report = render_trace(trace) + verdict + "\n"
    if problems:
        for problem in problems:
            print(f"error: {problem}", file=sys.stderr)
        return report, 1
    return report, 0


def _cmd_charts(config: RunConfig, args: argparse.Namespace) -> Tuple[str, int]:
    lines: List[str] = []
    records: List[Dict[str, object]] = []
    status = 0
    if not args.check_iso and not args.smoothness:
        for chart in nonredundant_charts():
            i, j, k = chart.index
            if config.fmt == "machine":
                records.append({
                    "type": "chart",
                    "index": [i, j, k],
                    "free": list(chart.free),
                    "weights": list(chart.weights),
                })
            else:
                free = ",".join(chart.free)
                weights = ",".join(str(w) for w in chart.weights)
                lines.append(f"chart {i},{j},{k}: free ({free}) weights ({weights})")
    if args.check_iso:
        sweep = isomorphism_sweep(config.cubics)
        for index in sorted(sweep):
            i, j, k = index
            ok = sweep[index]
            if config.fmt == "machine":
                records.append({"type": "iso-check", "index": [i, j, k], "isomorphic": ok})
            else:
                lines.append(f"chart {i},{j},{k}: {'isomorphism ok' if ok else 'MISMATCH'}")
            if not ok:
                status = 1
        if config.fmt == "text":
            good = sum(sweep.values())
            lines.append(f"isomorphism checks: {good}/{len(sweep)} charts match")
    if args.smoothness:
        for p in config.primes:
            try:
                report = smoothness_evidence(config.cubics, p)
            except BadPrime as exc:
                print(f"error: {exc}", file=sys.stderr)
                return "", 2
            if config.fmt == "machine":
                records.append({
                    "type": "smoothness",
                    "prime": p,
                    "charts": report.charts_checked,
                    "clean": report.clean,
                    "singular_points": [
                        {"chart": list(pt.chart), "coords": list(pt.coords)}
                        for pt in report.points
                    ],
                })
            else:
                lines.append(render_smoothness_report(report).rstrip("\n"))
            if not report.clean:
                status = 1
    if config.fmt == "machine":
        return _machine_lines(records), status
    return ("\n".join(lines) + "\n") if lines else "", status


_HANDLERS = {
    "table": _cmd_table,
    "cohomology": _cmd_cohomology,
    "ext": _cmd_ext,
    "trace": _cmd_trace,
    "charts": _cmd_charts,
}


def run_command(argv: Sequence[str]) -> int:
    """Parse argv, dispatch, emit the report; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        config = load_run_config(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    outcome = _HANDLERS[args.command](config, args)
    if isinstance(outcome, int):  # handler already reported a usage error
        return outcome
    report, status = outcome
    if config.output is not None:
        path = _resolve_output(config.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report)
    else:
        sys.stdout.write(report)
    return status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
