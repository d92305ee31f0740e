"""Command-line entry point: ``simulate``, ``sweep`` and ``couplings``.

Exit codes: 0 success, 2 usage error, 3 config parse error, 4 config
validation error, 5 numeric error, 6 output error.
"""
import argparse
import json
import logging
import sys

from . import output
from .config import PRESETS, parse_config, preset_config
from .errors import NumericError, ParseError, SinkError, ValidationError
from .scenarios import SWEEP_PARAMS, physical_diagnostics, run_scenario, sweep

log = logging.getLogger("fiberising")

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_NUMERIC = 5
EXIT_SINK = 6


def _read_config(path):
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc}") from exc
    return parse_config(text)


def parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="fiberising",
        description="Pairwise concurrence dynamics of three fiber-coupled cavity atoms.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="Run one scenario and write the concurrence series.")
    src = sim.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="YAML run configuration.")
    src.add_argument("--scenario", choices=sorted(PRESETS), help="Built-in preset.")
    sim.add_argument("--out", help="Output path ('-' for stdout). Overrides the config.")
    sim.add_argument("--format", choices=("csv", "json"), help="Overrides the config.")

    sw = sub.add_parser("sweep", help="Sweep one coupling and tabulate peak statistics.")
    sw.add_argument("--config", required=True)
    sw.add_argument("--param", required=True, choices=SWEEP_PARAMS)
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--points", type=int, required=True)
    sw.add_argument("--out", default="-")
    sw.add_argument("--workers", type=int, default=1, help="Thread pool size.")

    cp = sub.add_parser("couplings", help="Print the physical-mode diagnostics as JSON.")
    cp.add_argument("--config", required=True)

    return parser.parse_args(argv)


def _simulate(args):
    if args.scenario:
        cfg = preset_config(args.scenario)
    else:
        cfg = _read_config(args.config)
    fmt = args.format or cfg.output_format
    sink = args.out or cfg.output_path or "-"
    series, diag = run_scenario(cfg)
    if fmt == "json":
        output.emit_json(series, sink, meta=diag)
    else:
        output.emit_csv(series, sink)
    log.info("wrote %d rows to %s", len(series.times), sink)


def _sweep(args):
    cfg = _read_config(args.config)
    rows = sweep(cfg, args.param, args.start, args.stop, args.points, workers=args.workers)
    output.emit_sweep_csv(rows, args.out)


def _couplings(args):
    cfg = _read_config(args.config)
    if cfg.mode != "physical":
        raise ValidationError(["couplings requires mode: physical"])
    _, diag = physical_diagnostics(cfg.physical)
    print(json.dumps(output.jsonable(diag), sort_keys=True, indent=2))


def main(argv=None):
    args = parse_args(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    handlers = {"simulate": _simulate, "sweep": _sweep, "couplings": _couplings}
    try:
        handlers[args.command](args)
    except ParseError as exc:
        log.error("config parse error: %s", exc)
        return EXIT_PARSE
    except ValidationError as exc:
        for v in exc.violations:
            log.error("invalid config: %s", v)
        return EXIT_VALIDATION
    except SinkError as exc:
        log.error("output error: %s", exc)
        return EXIT_SINK
    except (NumericError, ValueError) as exc:
        log.error("numeric error: %s", exc)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
