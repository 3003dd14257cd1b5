"""``qisim`` command line: list and run catalog experiments.

Exit codes: 0 success, 2 bad arguments, 3 numerical-regime error.
"""

import argparse
import csv
import difflib
import io
import json
import sys

from .errors import ProtocolAbort, RegimeError
from .experiments import CATALOG, COLUMNS, list_experiments, run

EXIT_OK, EXIT_USAGE, EXIT_REGIME = 0, 2, 3


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in report["results"]:
        w.writerow([_fmt(r[c]) for c in COLUMNS])
    return buf.getvalue()


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _parse_params(pairs):
    out = {}
    for item in pairs or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"--param expects key=value, got {item!r}")
        out[key] = value
    return out


def _build_parser():
    ap = argparse.ArgumentParser(prog="qisim", description="Seeded quantum-information experiments.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="show the experiment catalog")
    r = sub.add_parser("run", help="run one experiment")
    r.add_argument("name")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--trials", type=int, default=None)
    r.add_argument("--format", choices=("csv", "json"), default="csv")
    r.add_argument("--out", default=None, help="output path (default: stdout)")
    r.add_argument("--param", action="append", metavar="KEY=VALUE", default=[])
    return ap


def _print_catalog(stream):
    for exp in list_experiments():
        stream.write(f"{exp.name}: {exp.summary}\n")
        for ref in exp.references:
            stream.write(f"    ref: {ref}\n")
        for k in sorted(exp.params):
            p = exp.params[k]
            stream.write(f"    --param {k}={p.default!r}  {p.doc}\n")
        if exp.default_trials:
            stream.write(f"    --trials {exp.default_trials} (default)\n")


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == "list":
        _print_catalog(sys.stdout)
        return EXIT_OK

    if args.name not in CATALOG:
        near = difflib.get_close_matches(args.name, sorted(CATALOG), n=1)
        hint = f"; did you mean '{near[0]}'?" if near else ""
        print(f"qisim: unknown experiment '{args.name}'{hint}", file=sys.stderr)
        return EXIT_USAGE
    if args.seed < 0 or args.seed >= 2**64:
        print("qisim: --seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_USAGE

    try:
        params = _parse_params(args.param)
        report = run(args.name, params, seed=args.seed, trials=args.trials)
    except (KeyError, ValueError) as e:
        msg = e.args[0] if e.args else e
        print(f"qisim: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (RegimeError, ProtocolAbort) as e:
        print(f"qisim: {e}", file=sys.stderr)
        return EXIT_REGIME

    text = to_csv(report) if args.format == "csv" else to_json(report)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as e:
            print(f"qisim: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
