"""Command-line interface.

Every subcommand is a thin adapter over one library operation: it loads the
input files, calls the operation, and serializes the result (JSON by
default, ``--format text`` for a human view).

Exit codes: 0 success/conforms, 1 violation/counterexample/domain failure,
2 usage error, 3 I/O or parse error.  Failures print a machine-readable
error object to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .aggregation import merge_traces_with_provenance
from .algebra import (
    curve_to_lambda_nu,
    map_lambda_nu_to_tspec,
    map_tspec_to_lambda_nu,
    superpose_indirect,
    superpose_lambda_nu,
    superpose_sigma_rho,
    superpose_tspec,
)
from .conformance import (
    ConformanceReport,
    check_lambda_nu,
    check_sigma_rho,
    check_tspec,
    fit_lambda_nu,
    fit_result_to_json,
    fit_tspec,
    report_to_json,
)
from .errors import FormatError, TrafficModelError
from .generators import gen_extremal_lambda_nu, gen_jittered, gen_periodic, gen_tspec_extremal
from .models import (
    IndirectInputs,
    LambdaNuModel,
    MappingVariant,
    MaxPlusCurve,
    SigmaRhoModel,
    TSpecModel,
    WindowMode,
    model_from_json,
    model_to_json,
)
from .rational import parse_rational
from .suite import DEFAULT_SEED, SuiteConfig, run_property_suite
from .table1 import render_table1_text, reproduce_table1, table1_to_json
from .trace import Trace, read_trace_csv, write_trace_csv

SEED_ENV_VAR = "MAXPLUS_TC_SEED"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # emit JSON instead of argparse's usage text
        _emit_error("usage", message)
        raise SystemExit(2)


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": {"kind": kind, "message": message}}), file=sys.stderr)


def _print(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        sys.stdout.write(text)
    else:
        print(json.dumps(obj, indent=2))


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None


def _report_text(report: ConformanceReport) -> str:
    lines = [f"conforms: {'yes' if report.conforms else 'no'}"]
    if report.witness is not None:
        w = report.witness
        lines.append(
            f"violation at ({w.m}, {w.n}): required {w.required}, actual {w.actual}"
        )
    lines.append(f"tight pairs: {len(report.tight_pairs)}")
    lines.append(f"checked pairs: {report.checked_pairs}")
    return "\n".join(lines) + "\n"


def _model_text(model) -> str:
    return json.dumps(model_to_json(model)) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    trace = read_trace_csv(args.trace)
    model = model_from_json(_load_json(args.model))
    if isinstance(model, LambdaNuModel):
        report = check_lambda_nu(trace, model)
    elif isinstance(model, TSpecModel):
        report = check_tspec(trace, model)
    elif isinstance(model, SigmaRhoModel):
        report = check_sigma_rho(trace, model)
    else:
        raise _UsageError(
            "a max-plus curve is not directly checkable; map it to a rate/burst model first"
        )
    _print(report_to_json(report), args.format, _report_text(report))
    return 0 if report.conforms else 1


def _cmd_fit(args) -> int:
    trace = read_trace_csv(args.trace)
    chosen = [opt for opt in (args.rate, args.burst, args.interval) if opt is not None]
    if len(chosen) != 1:
        raise _UsageError("give exactly one of --rate, --burst, --interval")
    if args.rate is not None:
        result = fit_lambda_nu(trace, lam=parse_rational(args.rate))
    elif args.burst is not None:
        result = fit_lambda_nu(trace, nu=parse_rational(args.burst))
    else:
        mode = WindowMode(args.mode)
        result = fit_tspec(trace, parse_rational(args.interval), mode)
    obj = fit_result_to_json(result)
    _print(obj, args.format, json.dumps(obj) + "\n")
    return 0


def _cmd_map(args) -> int:
    model = model_from_json(_load_json(args.model))
    if isinstance(model, LambdaNuModel):
        variant = MappingVariant(args.variant)
        mapped = map_lambda_nu_to_tspec(model, variant, args.j)
        obj = model_to_json(mapped)
    elif isinstance(model, TSpecModel):
        mapped = map_tspec_to_lambda_nu(model)
        obj = model_to_json(mapped)
    elif isinstance(model, MaxPlusCurve):
        reduction = curve_to_lambda_nu(model)
        obj = model_to_json(reduction.model)
        obj["horizon"] = reduction.horizon
        mapped = reduction.model
    else:
        raise _UsageError(f"no mapping defined for model type {type(model).__name__}")
    _print(obj, args.format, json.dumps(obj) + "\n")
    return 0


def _cmd_superpose(args) -> int:
    models = [model_from_json(_load_json(path)) for path in args.models]
    kinds = {type(m) for m in models}
    if len(kinds) != 1:
        raise _UsageError("all models must be of the same type")
    kind = kinds.pop()
    if args.indirect:
        if kind is not LambdaNuModel:
            raise _UsageError("--indirect applies to rate/burst models only")
        if args.max_lengths is None or args.min_length is None:
            raise _UsageError("--indirect needs --max-lengths and --min-length")
        lengths = tuple(parse_rational(l) for l in args.max_lengths)
        result = superpose_indirect(
            IndirectInputs(
                models=tuple(models),
                max_lengths=lengths,
                min_length=parse_rational(args.min_length),
            )
        )
    elif kind is LambdaNuModel:
        result = superpose_lambda_nu(models)
    elif kind is TSpecModel:
        result = superpose_tspec(models)
    elif kind is SigmaRhoModel:
        result = superpose_sigma_rho(models)
    else:
        raise _UsageError("max-plus curves cannot be superposed directly; reduce them first")
    obj = model_to_json(result)
    _print(obj, args.format, _model_text(result))
    return 0


def _cmd_merge(args) -> int:
    traces = [read_trace_csv(path) for path in args.traces]
    merged, origins = merge_traces_with_provenance(traces)
    text = write_trace_csv(merged)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.provenance:
        sidecar = {
            "packets": [{"flow": o.flow, "index": o.index} for o in origins]
        }
        with open(args.provenance, "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2)
            fh.write("\n")
    return 0


def _generate_params(args) -> dict:
    params: dict = {}
    if args.config:
        loaded = _load_json(args.config)
        if not isinstance(loaded, dict):
            raise FormatError("generator config must be a JSON object")
        params.update(loaded)
    for key in ("kind", "period", "phase", "count", "rate", "burst",
                "interval", "k_max", "mode", "jitter", "seed"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def _cmd_generate(args) -> int:
    params = _generate_params(args)
    kind = params.get("kind")
    count = int(params.get("count", 0))
    fitted = None
    if kind == "periodic":
        trace = gen_periodic(int(params["period"]), int(params.get("phase", 0)), count)
    elif kind == "extremal":
        model = LambdaNuModel(
            lam=parse_rational(str(params["rate"])),
            nu=parse_rational(str(params.get("burst", 0))),
        )
        trace = gen_extremal_lambda_nu(model, count)
    elif kind == "tspec-bursts":
        tspec = TSpecModel(
            tau=parse_rational(str(params["interval"])),
            k_max=int(params["k_max"]),
            window_mode=WindowMode(params.get("mode", "closed")),
        )
        trace = gen_tspec_extremal(tspec, count)
    elif kind == "jittered":
        trace, fitted = gen_jittered(
            int(params["period"]),
            int(params.get("jitter", 0)),
            int(params.get("seed", 0)),
            count,
        )
    else:
        raise _UsageError(
            "pick --kind periodic|extremal|tspec-bursts|jittered (or set it in --config)"
        )
    text = write_trace_csv(trace)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if fitted is not None and args.model_out:
        with open(args.model_out, "w", encoding="utf-8") as fh:
            json.dump(model_to_json(fitted), fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_table1(args) -> int:
    rows = reproduce_table1()
    _print(table1_to_json(rows), args.format, render_table1_text(rows))
    return 0


def _cmd_suite(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV_VAR)
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise _UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    if seed is None:
        seed = DEFAULT_SEED
    cfg = SuiteConfig(
        seed=seed,
        trials=args.trials,
        max_flows=args.max_flows,
        max_packets=args.max_packets,
    )
    summary = run_property_suite(cfg)
    if args.format == "text":
        sys.stdout.write(summary.render_text())
    else:
        print(json.dumps(summary.to_json_dict(), indent=2))
        print(f"suite wall time: {summary.elapsed:.2f} s", file=sys.stderr)
    if summary.warning:
        print(f"warning: {summary.warning}", file=sys.stderr)
    return 0 if summary.failures_total == 0 else 1


# ---------------------------------------------------------------------------
# parser


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json")


def _build_parser() -> _Parser:
    parser = _Parser(prog="maxplus-tc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check a trace against a model")
    p.add_argument("--trace", required=True)
    p.add_argument("--model", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("fit", help="fit the tightest model to a trace")
    p.add_argument("--trace", required=True)
    p.add_argument("--rate", help="fix the packet rate, fit the burst allowance")
    p.add_argument("--burst", help="fix the burst allowance, fit the packet rate")
    p.add_argument("--interval", help="fit the packet budget for windows of this length")
    p.add_argument("--mode", choices=("closed", "open"), default="closed")
    _add_format(p)
    p.set_defaults(handler=_cmd_fit)

    p = sub.add_parser("map", help="map a model into the other family")
    p.add_argument("--model", required=True)
    p.add_argument("--variant", choices=("a", "b"), default="a")
    p.add_argument("--j", type=int, default=1, help="window multiple (>= 1)")
    _add_format(p)
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("superpose", help="envelope of the aggregate of flows")
    p.add_argument("--models", nargs="+", required=True)
    p.add_argument("--indirect", action="store_true",
                   help="use the packet-length detour (rate/burst models only)")
    p.add_argument("--max-lengths", nargs="+", dest="max_lengths")
    p.add_argument("--min-length", dest="min_length")
    _add_format(p)
    p.set_defaults(handler=_cmd_superpose)

    p = sub.add_parser("merge", help="merge traces into one aggregate trace")
    p.add_argument("--traces", nargs="+", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--provenance", help="write per-packet origin JSON here")
    p.set_defaults(handler=_cmd_merge)

    p = sub.add_parser("generate", help="generate a trace")
    p.add_argument("--kind", choices=("periodic", "extremal", "tspec-bursts", "jittered"))
    p.add_argument("--config", help="JSON file with generator parameters (flags override)")
    p.add_argument("--period", type=int)
    p.add_argument("--phase", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--rate")
    p.add_argument("--burst")
    p.add_argument("--interval")
    p.add_argument("--k-max", type=int, dest="k_max")
    p.add_argument("--mode", choices=("closed", "open"))
    p.add_argument("--jitter", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", default="-")
    p.add_argument("--model-out", dest="model_out",
                   help="write the fitted model here (jittered kind)")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("table1", help="four-case superposition comparison table")
    _add_format(p)
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("suite", help="run the randomized validation suite")
    p.add_argument("--seed", type=int, help=f"overrides ${SEED_ENV_VAR}")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-flows", type=int, default=5, dest="max_flows")
    p.add_argument("--max-packets", type=int, default=500, dest="max_packets")
    _add_format(p)
    p.set_defaults(handler=_cmd_suite)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        _emit_error("usage", str(exc))
        return 2
    except (FormatError, OSError) as exc:
        _emit_error("io", str(exc))
        return 3
    except TrafficModelError as exc:
        _emit_error("domain", str(exc))
        return 1
    except ValueError as exc:
        _emit_error("usage", str(exc))
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
