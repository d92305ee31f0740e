"""Run configuration: YAML document format (version 1), presets, validation.

Example document::

    version: 1
    mode: direct              # direct | physical
    initial_state: ground     # ground, or three letters of g/e such as "geg"
    direct: {j12: 4, j23: 4, j31: 0, gamma_laser: 0.1}
    time: {t_max: 30, steps: 600}
    output: {format: csv, path: out.csv}

Physical mode replaces ``direct`` with::

    physical:
      gamma0: 2.0
      chi: 0.5            # or g, with delta != 0 (chi = g**2/delta)
      delta: 1.0
      lambda_drive: 1.0   # real, or [re, im]
      phi12: 0.0
      phi21: 0.0
      phi23: 0.0
      phi32: 0.0
      nu: 0.0
      fiber_length: 0.0
      gamma_laser: 0.1
      steady_state_method: printed   # printed | firstprinciples
"""
import math
from dataclasses import dataclass, field

import yaml

from .cavity import CavityParams, CouplingSet
from .errors import ParseError, ValidationError

FORMAT_VERSION = 1
DEFAULT_T_MAX = 30.0
DEFAULT_STEPS = 600

PRESETS = {
    "fig2a": CouplingSet(4.0, 4.0, 0.0, 0.1),
    "fig2b": CouplingSet(4.0, 4.0, 0.5, 0.1),
    "fig3": CouplingSet(4.0, 4.1, 0.0, 0.1),
    "fig4": CouplingSet(4.0, 4.0, 0.0, 0.2),
}

_TOP_KEYS = {"version", "mode", "initial_state", "direct", "physical", "time", "output"}
_DIRECT_KEYS = ("j12", "j23", "j31", "gamma_laser")
_PHYSICAL_REQUIRED = ("gamma0", "delta", "lambda_drive")
_PHYSICAL_OPTIONAL = (
    "chi", "g", "phi12", "phi21", "phi23", "phi32", "nu", "fiber_length",
    "gamma_laser", "steady_state_method",
)
_TIME_KEYS = ("t_max", "steps")
_OUTPUT_KEYS = ("format", "path")
METHODS = ("printed", "firstprinciples")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class PhysicalSetup:
    cavity: CavityParams
    gamma_laser: float = 0.0
    steady_state_method: str = "printed"


@dataclass(frozen=True)
class RunConfig:
    mode: str
    direct: CouplingSet | None = None
    physical: PhysicalSetup | None = None
    initial_state: str = "ggg"
    t_max: float = DEFAULT_T_MAX
    steps: int = DEFAULT_STEPS
    output_format: str = "csv"
    output_path: str | None = None
    name: str | None = field(default=None, compare=False)


def preset_config(name, t_max=DEFAULT_T_MAX, steps=DEFAULT_STEPS, initial_state="ggg"):
    if name not in PRESETS:
        raise ValidationError([f"unknown scenario {name!r}; choose from {sorted(PRESETS)}"])
    return RunConfig(
        mode="direct", direct=PRESETS[name], initial_state=initial_state,
        t_max=float(t_max), steps=int(steps), name=name,
    )


def _line_index(text):
    """Map key paths like ``("physical", "chi")`` to 1-based line numbers."""
    lines = {}

    def walk(node, path):
        if isinstance(node, yaml.MappingNode):
            for k, v in node.value:
                key = path + (k.value,)
                lines[key] = k.start_mark.line + 1
                walk(v, key)

    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError:
        return lines
    if root is not None:
        walk(root, ())
    return lines


def _load(text):
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark is not None else None
        raise ParseError(str(exc.problem or exc), line=line) from exc
    except yaml.YAMLError as exc:
        raise ParseError(str(exc)) from exc
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ParseError("top level must be a mapping", line=1)
    return data


class _Checker:
    def __init__(self, lines):
        self.lines = lines
        self.violations = []

    def fail(self, path, msg):
        where = ".".join(path)
        line = self.lines.get(tuple(path))
        loc = f"{where} (line {line})" if line else where
        self.violations.append(f"{loc}: {msg}")

    def section(self, data, key, allowed):
        sec = data.get(key)
        if sec is None:
            return None
        if not isinstance(sec, dict):
            self.fail([key], "must be a mapping")
            return None
        for k in sec:
            if k not in allowed:
                self.fail([key, str(k)], "unknown key")
        return sec

    def number(self, sec, path, required=False, default=None):
        key = path[-1]
        if key not in sec:
            if required:
                self.fail(path, "required")
            return default
        v = sec[key]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self.fail(path, f"must be a number, got {v!r}")
            return default
        v = float(v)
        if not math.isfinite(v):
            self.fail(path, "must be finite")
            return default
        return v


def _complex_value(chk, sec, path):
    if path[-1] not in sec:
        chk.fail(path, "required")
        return None
    v = sec[path[-1]]
    if isinstance(v, list) and len(v) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in v
    ):
        z = complex(v[0], v[1])
    elif isinstance(v, (int, float)) and not isinstance(v, bool):
        z = complex(v)
    else:
        chk.fail(path, f"must be a number or [re, im], got {v!r}")
        return None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        chk.fail(path, "must be finite")
        return None
    return z


def parse_config(text):
    """Parse and validate a YAML run configuration.

    Raises
    ------
    ParseError
        Malformed YAML (carries the line number).
    ValidationError
        Every schema/value violation found, each with its field path.
    """
    data = _load(text)
    chk = _Checker(_line_index(text))

    for k in data:
        if k not in _TOP_KEYS:
            chk.fail([str(k)], "unknown key")

    version = data.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION or isinstance(version, bool):
        chk.fail(["version"], f"unsupported version {version!r}; expected {FORMAT_VERSION}")

    mode = data.get("mode")
    if mode not in ("direct", "physical"):
        chk.fail(["mode"], f"must be 'direct' or 'physical', got {mode!r}")

    initial = data.get("initial_state", "ground")
    if initial == "ground":
        initial = "ggg"
    if not (isinstance(initial, str) and len(initial) == 3 and not set(initial) - {"g", "e"}):
        chk.fail(["initial_state"], f"must be 'ground' or three letters of g/e, got {initial!r}")

    direct = physical = None
    dsec = chk.section(data, "direct", _DIRECT_KEYS)
    psec = chk.section(data, "physical", _PHYSICAL_REQUIRED + _PHYSICAL_OPTIONAL)
    if mode == "direct":
        if "physical" in data:
            chk.fail(["physical"], "not allowed in direct mode")
        if dsec is None:
            if "direct" not in data:
                chk.fail(["direct"], "required in direct mode")
        else:
            vals = [chk.number(dsec, ["direct", k], required=k != "gamma_laser", default=0.0)
                    for k in _DIRECT_KEYS]
            if vals[3] is not None and vals[3] < 0:
                chk.fail(["direct", "gamma_laser"], "must be >= 0")
            elif all(v is not None for v in vals):
                direct = CouplingSet(*vals)
    elif mode == "physical":
        if "direct" in data:
            chk.fail(["direct"], "not allowed in physical mode")
        if psec is None:
            if "physical" not in data:
                chk.fail(["physical"], "required in physical mode")
        else:
            physical = _physical(chk, psec)

    tsec = chk.section(data, "time", _TIME_KEYS) or {}
    t_max = chk.number(tsec, ["time", "t_max"], default=DEFAULT_T_MAX)
    if t_max is not None and not t_max > 0:
        chk.fail(["time", "t_max"], "must be > 0")
    steps = tsec.get("steps", DEFAULT_STEPS)
    if isinstance(steps, bool) or not isinstance(steps, int):
        chk.fail(["time", "steps"], f"must be an integer, got {steps!r}")
    elif steps < 2:
        chk.fail(["time", "steps"], f"must be >= 2, got {steps}")

    osec = chk.section(data, "output", _OUTPUT_KEYS) or {}
    fmt = osec.get("format", "csv")
    if fmt not in FORMATS:
        chk.fail(["output", "format"], f"must be one of {FORMATS}, got {fmt!r}")
    path = osec.get("path")
    if path is not None and not isinstance(path, str):
        chk.fail(["output", "path"], "must be a string")

    if chk.violations:
        raise ValidationError(chk.violations)
    return RunConfig(
        mode=mode, direct=direct, physical=physical, initial_state=initial,
        t_max=t_max, steps=steps, output_format=fmt, output_path=path,
    )


def _physical(chk, sec):
    p = ["physical"]
    gamma0 = chk.number(sec, p + ["gamma0"], required=True)
    delta = chk.number(sec, p + ["delta"], required=True)
    lam = _complex_value(chk, sec, p + ["lambda_drive"])
    chi = chk.number(sec, p + ["chi"])
    g = chk.number(sec, p + ["g"])
    phases = {k: chk.number(sec, p + [k], default=0.0) for k in ("phi12", "phi21", "phi23", "phi32")}
    nu = chk.number(sec, p + ["nu"], default=0.0)
    length = chk.number(sec, p + ["fiber_length"], default=0.0)
    gamma_laser = chk.number(sec, p + ["gamma_laser"], default=0.0)
    method = sec.get("steady_state_method", "printed")
    if method not in METHODS:
        chk.fail(p + ["steady_state_method"], f"must be one of {METHODS}, got {method!r}")
    if gamma_laser is not None and gamma_laser < 0:
        chk.fail(p + ["gamma_laser"], "must be >= 0")
    if chi is None and "chi" not in sec:
        if g is None:
            chk.fail(p + ["chi"], "chi or g is required")
        elif delta is not None and delta == 0:
            chk.fail(p + ["g"], "cannot derive chi = g**2/delta at delta = 0; supply chi")
        elif delta is not None:
            chi = g**2 / delta
    if any(v is None for v in (gamma0, delta, lam, chi, nu, length, gamma_laser)) \
            or any(v is None for v in phases.values()):
        return None
    cav_kwargs = dict(gamma0=gamma0, chi=chi, delta=delta, lambda_drive=lam,
                      nu=nu, fiber_length=length, g=g, **phases)
    # build without triggering __post_init__ so every violation is reported
    probe = object.__new__(CavityParams)
    for k, v in cav_kwargs.items():
        object.__setattr__(probe, k, v)
    bad = probe.violations()
    for msg in bad:
        chk.fail(p, msg)
    if bad:
        return None
    return PhysicalSetup(CavityParams(**cav_kwargs), gamma_laser, method)


def config_to_dict(cfg):
    doc = {"version": FORMAT_VERSION, "mode": cfg.mode, "initial_state": cfg.initial_state}
    if cfg.direct is not None:
        doc["direct"] = dict(zip(_DIRECT_KEYS, cfg.direct.as_tuple()))
    if cfg.physical is not None:
        c = cfg.physical.cavity
        lam = c.lambda_drive
        phys = {
            "gamma0": c.gamma0, "chi": c.chi, "delta": c.delta,
            "lambda_drive": [float(lam.real), float(lam.imag)],
            "phi12": c.phi12, "phi21": c.phi21, "phi23": c.phi23, "phi32": c.phi32,
            "nu": c.nu, "fiber_length": c.fiber_length,
            "gamma_laser": cfg.physical.gamma_laser,
            "steady_state_method": cfg.physical.steady_state_method,
        }
        if c.g is not None:
            phys["g"] = c.g
        doc["physical"] = phys
    doc["time"] = {"t_max": cfg.t_max, "steps": cfg.steps}
    out = {"format": cfg.output_format}
    if cfg.output_path is not None:
        out["path"] = cfg.output_path
    doc["output"] = out
    return doc


def dump_config(cfg):
    """Serialize to the YAML document format accepted by :func:`parse_config`."""
    return yaml.safe_dump(config_to_dict(cfg), sort_keys=False)
