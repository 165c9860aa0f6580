"""Run configuration: YAML ingestion, unit normalisation and validation.

Every dimensional key carries its unit in the name:

* ``*_per_s``      rates / angular frequencies, taken as-is (s^-1)
* ``*_hz_linear``  linear frequencies, multiplied by 2 pi on ingest
* ``*_k``, ``*_f``, ``*_ohm``  kelvin, farad, ohm
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml

from .circuit import CircuitSpec, derive_model
from .errors import ConfigParseError, DomainError, OutputError, ValidationError
from .model import CONSTANTS, BathSpec, DriveSpec, gamma_tot
from .switch import g_star_dephasing

G_RULES = ("fixed", "gstar_of_delta", "gstar_at_zero", "gstar_at_reference")
SWEEP_VARIABLES = ("delta", "g", "gamma_phi")
SCALES = ("linear", "log")
FORMATS = ("csv", "json")

_SECTIONS = {
    "name": None,
    "description": None,
    "model": {
        "gamma_h_per_s", "gamma_c_per_s", "n_bar_h", "n_bar_c", "t_h_k", "t_c_k",
        "omega0_per_s", "omega0_hz_linear", "gamma_phi_per_s",
    },
    "drive": {
        "g_rule", "g_per_s", "g_hz_linear", "delta_per_s", "delta_hz_linear",
        "g_reference_delta_per_s", "g_reference_delta_hz_linear",
    },
    "circuit": {"c_j_f", "c_h_f", "c_c_f", "c_g_f", "r_h_ohm", "r_c_ohm", "ej_hz_linear", "t_h_k", "t_c_k"},
    "sweep": {"variable", "start_per_s", "start_hz_linear", "stop_per_s", "stop_hz_linear", "count", "scale"},
    "output": {"format", "path", "precision"},
}


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def grid(self) -> list[float]:
        n = self.count
        if self.scale == "log":
            a, b = math.log(self.start), math.log(self.stop)
            pts = [math.exp(a + (b - a) * i / (n - 1)) for i in range(n)]
        else:
            pts = [self.start + (self.stop - self.start) * i / (n - 1) for i in range(n)]
        # closed grid: endpoints exactly as given
        pts[0], pts[-1] = self.start, self.stop
        return pts


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    path: str | None = None
    precision: int = 17


@dataclass(frozen=True)
class RunConfig:
    hot: BathSpec
    cold: BathSpec
    omega0: float
    gamma_phi: float = 0.0
    g_rule: str = "fixed"
    g: float | None = None
    g_reference_delta: float | None = None
    delta: float = 0.0
    circuit: CircuitSpec | None = None
    sweep: SweepSpec | None = None
    output: OutputSpec = field(default_factory=OutputSpec)
    name: str = ""
    warnings: tuple[str, ...] = ()

    @property
    def gamma_tot(self) -> float:
        return gamma_tot(self.hot, self.cold)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "gamma_h_per_s": self.hot.gamma,
            "gamma_c_per_s": self.cold.gamma,
            "n_bar_h": self.hot.n_bar,
            "n_bar_c": self.cold.n_bar,
            "omega0_per_s": self.omega0,
            "gamma_phi_per_s": self.gamma_phi,
            "gamma_tot_per_s": self.gamma_tot,
            "g_rule": self.g_rule,
            "g_per_s": self.g,
            "delta_per_s": self.delta,
            "sweep": None if self.sweep is None else self.sweep.__dict__,
            "warnings": list(self.warnings),
        }


def _number(section: dict, key: str, where: str) -> float:
    value = section[key]
    # YAML 1.1 loads exponents without a sign ("1.0e9") as strings
    if isinstance(value, str):
        try:
            value = float(value)
        except ValueError:
            pass
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}.{key}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{where}.{key}: must be finite")
    return value


def _freq(section: dict, base: str, where: str, required: bool = True) -> float | None:
    """Read ``base_per_s`` or ``base_hz_linear`` (exactly one), returning s^-1."""
    keys = [k for k in (f"{base}_per_s", f"{base}_hz_linear") if k in section]
    if len(keys) > 1:
        raise ValidationError(f"{where}: give only one of {keys}")
    if not keys:
        if required:
            raise ValidationError(f"{where}.{base}_per_s (or {base}_hz_linear) is required")
        return None
    value = _number(section, keys[0], where)
    return value * 2 * math.pi if keys[0].endswith("_hz_linear") else value


def _bath(model: dict, side: str, gamma: float, omega0: float) -> BathSpec:
    has_n, has_t = f"n_bar_{side}" in model, f"t_{side}_k" in model
    if has_n == has_t:
        raise ValidationError(f"model: give exactly one of n_bar_{side} / t_{side}_k")
    label = "hot" if side == "h" else "cold"
    try:
        if has_n:
            return BathSpec(gamma, _number(model, f"n_bar_{side}", "model"), label)
        return BathSpec.from_temperature(gamma, omega0, _number(model, f"t_{side}_k", "model"), label)
    except DomainError as exc:
        raise ValidationError(f"model: {exc}") from exc


def parse_text(text: str) -> dict:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigParseError(f"cannot parse config{where}: {getattr(exc, 'problem', exc)}") from exc
    if not isinstance(raw, dict):
        raise ConfigParseError("config must be a mapping at top level")
    return raw


def validate_config(raw: str | dict) -> RunConfig:
    """Resolve raw YAML text (or an already parsed mapping) into a RunConfig."""
    if isinstance(raw, str):
        raw = parse_text(raw)
    for key, value in raw.items():
        if key not in _SECTIONS:
            raise ValidationError(f"unknown section {key!r}")
        allowed = _SECTIONS[key]
        if allowed is not None:
            if not isinstance(value, dict):
                raise ValidationError(f"section {key!r} must be a mapping")
            unknown = set(value) - allowed
            if unknown:
                raise ValidationError(f"{key}: unknown keys {sorted(unknown)}")

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cfg = _resolve(raw)
    notes = tuple(str(w.message) for w in caught)
    return RunConfig(**{**cfg, "warnings": notes})


def _resolve(raw: dict) -> dict:
    model = raw.get("model") or {}
    drive = raw.get("drive") or {}
    out: dict = {"name": str(raw.get("name", ""))}

    circuit = None
    if "circuit" in raw:
        c = raw["circuit"]
        missing = _SECTIONS["circuit"] - set(c)
        if missing:
            raise ValidationError(f"circuit: missing keys {sorted(missing)}")
        try:
            circuit = CircuitSpec(
                C_J=_number(c, "c_j_f", "circuit"),
                C_h=_number(c, "c_h_f", "circuit"),
                C_c=_number(c, "c_c_f", "circuit"),
                C_g=_number(c, "c_g_f", "circuit"),
                R_h=_number(c, "r_h_ohm", "circuit"),
                R_c=_number(c, "r_c_ohm", "circuit"),
                E_J=_number(c, "ej_hz_linear", "circuit") * CONSTANTS.h,
                T_h=_number(c, "t_h_k", "circuit"),
                T_c=_number(c, "t_c_k", "circuit"),
            )
        except DomainError as exc:
            raise ValidationError(f"circuit: {exc}") from exc
        derived = derive_model(circuit)
        out.update(hot=derived.hot, cold=derived.cold, omega0=derived.omega0)
    else:
        omega0 = _freq(model, "omega0", "model")
        if not omega0 > 0:
            raise ValidationError("model.omega0 must be > 0")
        gh = _number(model, "gamma_h_per_s", "model") if "gamma_h_per_s" in model else None
        gc = _number(model, "gamma_c_per_s", "model") if "gamma_c_per_s" in model else None
        if gh is None or gc is None:
            raise ValidationError("model: gamma_h_per_s and gamma_c_per_s are required")
        out.update(hot=_bath(model, "h", gh, omega0), cold=_bath(model, "c", gc, omega0), omega0=omega0)
    out["circuit"] = circuit

    gamma_phi = _number(model, "gamma_phi_per_s", "model") if "gamma_phi_per_s" in model else 0.0
    if gamma_phi < 0:
        raise ValidationError("model.gamma_phi_per_s must be >= 0")
    out["gamma_phi"] = gamma_phi

    rule = drive.get("g_rule", "fixed")
    if rule not in G_RULES:
        raise ValidationError(f"drive.g_rule must be one of {G_RULES}, got {rule!r}")
    out["g_rule"] = rule
    out["delta"] = _freq(drive, "delta", "drive", required=False) or 0.0
    g = _freq(drive, "g", "drive", required=False)
    if rule == "fixed":
        if g is None and not (raw.get("sweep") or {}).get("variable") == "g":
            raise ValidationError("drive.g_per_s (or g_hz_linear) is required with g_rule: fixed")
        if g is not None and g < 0:
            raise ValidationError("drive.g must be >= 0")
    elif g is not None:
        raise ValidationError(f"drive.g given together with g_rule {rule!r}")
    out["g"] = g
    ref = _freq(drive, "g_reference_delta", "drive", required=False)
    if (rule == "gstar_at_reference") != (ref is not None):
        raise ValidationError("drive.g_reference_delta is required by, and only valid with, g_rule: gstar_at_reference")
    out["g_reference_delta"] = ref
    if rule != "fixed" and out["hot"].n_bar < out["cold"].n_bar:
        raise DomainError(f"g_rule {rule!r} needs n_bar_h >= n_bar_c")

    if "sweep" in raw:
        out["sweep"] = _sweep(raw["sweep"], rule)
    if "output" in raw:
        out["output"] = _output(raw["output"])

    _check_validity(out)
    return out


def _check_validity(out: dict) -> None:
    """Warn once if any evaluated (g, delta) leaves the weak-drive regime."""
    deltas = [out["delta"]]
    sweep = out.get("sweep")
    if sweep is not None and sweep.variable == "delta":
        deltas = [sweep.start, sweep.stop]
    gphi = out["gamma_phi"] if sweep is None or sweep.variable != "gamma_phi" else sweep.start
    for d in deltas:
        rule = out["g_rule"]
        if rule == "fixed":
            g = out["g"] if out["g"] is not None else sweep.stop
        else:
            ref = {"gstar_of_delta": d, "gstar_at_zero": 0.0}.get(rule, out["g_reference_delta"])
            g = g_star_dephasing(out["hot"], out["cold"], ref, gphi)
        if not DriveSpec(out["omega0"], g, d).check_validity():
            return


def _sweep(s: dict, rule: str) -> SweepSpec:
    var = s.get("variable")
    if var not in SWEEP_VARIABLES:
        raise ValidationError(f"sweep.variable must be one of {SWEEP_VARIABLES}, got {var!r}")
    if var == "g" and rule != "fixed":
        raise ValidationError("sweeping g requires g_rule: fixed")
    start = _freq(s, "start", "sweep")
    stop = _freq(s, "stop", "sweep")
    count = s.get("count")
    if isinstance(count, bool) or not isinstance(count, int) or count < 2:
        raise ValidationError("sweep.count must be an integer >= 2")
    if not start < stop:
        raise ValidationError("sweep: start must be < stop")
    scale = s.get("scale", "linear")
    if scale not in SCALES:
        raise ValidationError(f"sweep.scale must be one of {SCALES}")
    if scale == "log" and start <= 0:
        raise ValidationError("sweep: log scale needs start > 0")
    if var in ("g", "gamma_phi") and start < 0:
        raise ValidationError(f"sweep: {var} must be >= 0")
    return SweepSpec(var, start, stop, count, scale)


def _output(o: dict) -> OutputSpec:
    fmt = o.get("format", "csv")
    if fmt not in FORMATS:
        raise ValidationError(f"output.format must be one of {FORMATS}")
    precision = o.get("precision", 17)
    if isinstance(precision, bool) or not isinstance(precision, int) or not 1 <= precision <= 17:
        raise ValidationError("output.precision must be an integer in [1, 17]")
    path = o.get("path")
    return OutputSpec(fmt, None if path is None else str(path), precision)


def recipe_names() -> list[str]:
    files = resources.files("qheatswitch.recipes").iterdir()
    return sorted(f.name[:-5] for f in files if f.name.endswith(".yaml"))


def recipe_text(name: str) -> str:
    if name not in recipe_names():
        raise ValidationError(f"unknown recipe {name!r}; available: {recipe_names()}")
    return resources.files("qheatswitch.recipes").joinpath(f"{name}.yaml").read_text(encoding="utf-8")


def load_config(path: str | Path | None = None, recipe: str | None = None) -> RunConfig:
    if (path is None) == (recipe is None):
        raise ValidationError("give exactly one of a config path or a recipe name")
    if recipe is not None:
        return validate_config(recipe_text(recipe))
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot read config {path}: {exc}") from exc
    return validate_config(text)
