"""Command-line experiment runner.

    pertinency run CONFIG [--max-degree D] [--field F] [--format json|table|csv]
    pertinency validate CONFIG
    pertinency repro CASE|all|list

Exit codes: 0 success, 1 computational error, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys

from .config import ConfigError, ExperimentConfig, apply_overrides, parse_config
from .emit import emit_report
from .repro import case_configs, case_ids, CASES
from .runner import report_ok, run_experiment

__all__ = ["ConfigError", "ExperimentConfig", "emit_report", "main", "parse_config",
           "run_experiment"]


def _parser():
    ap = argparse.ArgumentParser(prog="pertinency", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--field", default=None, help="rational, cyclotomic:N or prime:P")
        p.add_argument("--format", choices=("json", "table", "csv"), default="json")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for certificate-prime sampling")
        p.add_argument("--timings", action="store_true", help="record wall-clock timings")

    run = sub.add_parser("run", help="run the tasks of a JSON configuration")
    run.add_argument("config")
    common(run)
    val = sub.add_parser("validate", help="validate a JSON configuration")
    val.add_argument("config")
    rep = sub.add_parser("repro", help="run a named reproduction case")
    rep.add_argument("case", help="case id, 'all' or 'list'")
    common(rep)
    rep.set_defaults(format="table")
    return ap


def _load(path, max_degree=None, field=None) -> ExperimentConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError([f"cannot read {path}: {exc.strerror}"]) from None
    cfg = parse_config(text)
    if max_degree is not None or field is not None:
        cfg = apply_overrides(cfg, max_degree, field)
    return cfg


def _print_config_error(exc: ConfigError):
    for e in exc.errors:
        print(f"config error: {e}", file=sys.stderr)


def _repro(args) -> int:
    if args.case == "list":
        for cid in case_ids():
            print(f"{cid}: {CASES[cid][0]}")
        return 0
    ids = case_ids() if args.case == "all" else [args.case]
    if any(cid not in CASES for cid in ids):
        print(f"config error: unknown case {args.case!r}; try 'repro list'", file=sys.stderr)
        return 2
    failed = False
    for cid in ids:
        for n, cfg, check in case_configs(cid):
            if args.max_degree is not None or args.field is not None:
                cfg = apply_overrides(cfg, args.max_degree, args.field)
            report = run_experiment(cfg, timings=args.timings, seed=args.seed)
            ok = report_ok(report)
            try:
                passed = ok and check(report, n)
            except (KeyError, TypeError):
                passed = False
            failed |= not passed
            if args.format == "table":
                print(f"[{'PASS' if passed else 'FAIL'}] {cid} n={n}")
                print(emit_report(report, "table"), flush=True)
            else:
                sys.stdout.write(emit_report(report, args.format))
                sys.stdout.flush()
    return 1 if failed else 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "validate":
            _load(args.config)
            print("ok")
            return 0
        if args.command == "repro":
            return _repro(args)
        cfg = _load(args.config, args.max_degree, args.field)
    except ConfigError as exc:
        _print_config_error(exc)
        return 2
    report = run_experiment(cfg, timings=args.timings, seed=args.seed)
    sys.stdout.write(emit_report(report, args.format))
    if not report_ok(report):
        for task, entry in report["results"].items():
            if entry["status"] != "ok":
                print(f"error in task {task}: {entry['error']}", file=sys.stderr)
        return 1
    return 0
