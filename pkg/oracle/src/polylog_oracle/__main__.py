"""Command-line emission of the golden-vector file."""

from __future__ import annotations

import argparse
import dataclasses
import sys

from . import harness


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="polylog-oracle",
        description="Recompute every golden record at high precision and "
        "write the JSON vector file.",
    )
    parser.add_argument("--out", default="data/goldens.json", help="output path")
    parser.add_argument("--digits", type=int, default=None, help="working precision")
    parser.add_argument(
        "--config", default=None, help="JSON file with OracleConfig fields"
    )
    args = parser.parse_args(argv)
    try:
        cfg = (
            harness.OracleConfig.from_file(args.config)
            if args.config
            else harness.OracleConfig()
        )
        if args.digits is not None:
            cfg = dataclasses.replace(cfg, digits=args.digits)
        payload = harness.emit_goldens(args.out, cfg)
    except harness.OracleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(payload['records'])} records to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
