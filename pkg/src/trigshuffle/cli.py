"""Command line front end: `trigshuffle verify --suite <id|all> ...`."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .verifier import Config, SUITES, run_suites


def _load_config_file(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            out[key.strip()] = val.strip()
    return out


def _load_goldens(path):
    if path and os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    return {}


def main(argv=None):
    parser = argparse.ArgumentParser(prog="trigshuffle")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run identity verification suites")
    v.add_argument("--suite", default="all",
                   help="suite id (S1..S12), comma list, or 'all'")
    v.add_argument("--n", type=int, default=2, choices=(2, 3))
    v.add_argument("--max-window", type=int, default=4)
    v.add_argument("--max-k", type=int, default=4)
    v.add_argument("--guard-vars", type=int, default=8)
    v.add_argument("--guard-pair", type=int, default=4)
    v.add_argument("--report", default=None, help="write the JSON report here")
    v.add_argument("--config", default=None, help="flat key=value config file")
    v.add_argument("--cbar-one", action="store_true",
                   help="set cbar = 1 to cross-check simplified computations")
    v.add_argument("--regen-goldens", action="store_true")
    v.add_argument("--goldens", default=None, help="golden file (JSON)")
    ls = sub.add_parser("suites", help="list available suites")
    args = parser.parse_args(argv)

    if args.command == "suites":
        for sid, (desc, _) in SUITES.items():
            print(f"{sid}: {desc}")
        return 0

    overrides = {}
    if args.config:
        overrides = _load_config_file(args.config)
    cfg = Config(
        n=int(overrides.get("n", args.n)),
        max_window=int(overrides.get("max_window", args.max_window)),
        max_k=int(overrides.get("max_k", args.max_k)),
        guard_vars=int(overrides.get("guard_vars", args.guard_vars)),
        guard_pair=int(overrides.get("guard_pair", args.guard_pair)),
        cbar_one=bool(overrides.get("cbar_one", args.cbar_one)),
        regen_goldens=args.regen_goldens,
    )
    ids = None if args.suite == "all" else [s.strip() for s in
                                            args.suite.split(",")]
    goldens = _load_goldens(args.goldens) if (args.goldens or
                                              args.regen_goldens) else None
    report = run_suites(cfg, ids, goldens)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.regen_goldens and args.goldens and goldens is not None:
        with open(args.goldens, "w") as fh:
            json.dump(goldens, fh, indent=2, sort_keys=True)
    for s in report["suites"]:
        print(f"{s['id']}: {s['pass']}/{s['total']} pass, {s['fail']} fail, "
              f"{s['skipped']} skipped", file=sys.stderr)
    return 0 if report["failures"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
