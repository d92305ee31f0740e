"""CSV / JSON writers.

Every number is rendered with 9 significant digits (``%.8e``), so output is
byte-identical for identical input. JSON carries the same rounded values.
"""
import contextlib
import json
import sys

from .errors import SinkError

SERIES_HEADER = "t,C12,C23,C13"
SWEEP_HEADER = "param,maxC12,maxC23,maxC13,tpeak12,tpeak23,tpeak13"


def fmt(x):
    # + 0.0 folds -0.0 into 0.0
    return format(float(x) + 0.0, ".8e")


def rounded(x):
    return float(fmt(x))


@contextlib.contextmanager
def _open_sink(sink):
    if sink is None or sink == "-":
        yield sys.stdout
    elif hasattr(sink, "write"):
        yield sink
    else:
        try:
            f = open(sink, "w", encoding="utf-8", newline="\n")
        except OSError as exc:
            raise SinkError(f"cannot open {sink!r}: {exc}") from exc
        with f:
            yield f


def _write(sink, text):
    try:
        with _open_sink(sink) as f:
            f.write(text)
    except SinkError:
        raise
    except (OSError, ValueError) as exc:
        raise SinkError(str(exc)) from exc


def series_csv(series):
    lines = [SERIES_HEADER]
    for row in zip(series.times, series.c12, series.c23, series.c13):
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def emit_csv(series, sink):
    """Write ``t,C12,C23,C13`` rows to a path, ``"-"``, or a text stream."""
    _write(sink, series_csv(series))


def jsonable(value):
    if isinstance(value, complex):
        return [rounded(value.real), rounded(value.imag)]
    if isinstance(value, float):
        return rounded(value)
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def series_json(series, meta=None):
    doc = {
        "times": [rounded(v) for v in series.times],
        "c12": [rounded(v) for v in series.c12],
        "c23": [rounded(v) for v in series.c23],
        "c13": [rounded(v) for v in series.c13],
        "meta": jsonable(meta or {}),
    }
    return json.dumps(doc, sort_keys=True, allow_nan=True) + "\n"


def emit_json(series, sink, meta=None):
    """JSON variant: ``{times, c12, c23, c13, meta}``; complex values as [re, im]."""
    _write(sink, series_json(series, meta))


def sweep_csv(rows):
    lines = [SWEEP_HEADER]
    for r in rows:
        vals = (r.param, r.max_c12, r.max_c23, r.max_c13, r.tpeak12, r.tpeak23, r.tpeak13)
        lines.append(",".join(fmt(v) for v in vals))
    return "\n".join(lines) + "\n"


def emit_sweep_csv(rows, sink):
    _write(sink, sweep_csv(rows))


def read_series_csv(text):
    """Parse :func:`series_csv` output back to columns (used for cross-checks)."""
    lines = text.rstrip("\n").split("\n")
    if lines[0] != SERIES_HEADER:
        raise ValueError(f"unexpected header {lines[0]!r}")
    cols = list(zip(*(map(float, ln.split(",")) for ln in lines[1:])))
    return {k: list(c) for k, c in zip(("times", "c12", "c23", "c13"), cols)}
