"""Single-point and swept evaluation of a RunConfig, plus CSV/JSON emission."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields, replace
from pathlib import Path

from .config import RunConfig
from .errors import NumericalIntegrityError, OutputError, QHeatError
from .liouvillian import build_generator, steady_numeric
from .model import DriveSpec
from .steady import steady_analytic_dephasing
from .switch import g_star_dephasing
from .thermo import FIRST_LAW_RTOL, heat_report


@dataclass(frozen=True)
class SweepRow:
    delta_per_s: float
    g_per_s: float
    x_inf: float
    y_inf: float
    z_inf: float
    J_cl_W: float
    J_q_W: float
    J_h_W: float
    J_c_W: float
    P_W: float
    E_q_J: float
    sigma_two_bath_W_per_K: float
    first_law_residual_W: float


COLUMNS = tuple(f.name for f in fields(SweepRow))


def resolve_g(cfg: RunConfig, delta: float, gamma_phi: float) -> float:
    rule = cfg.g_rule
    if rule == "fixed":
        return cfg.g
    if rule == "gstar_of_delta":
        return g_star_dephasing(cfg.hot, cfg.cold, delta, gamma_phi)
    if rule == "gstar_at_zero":
        return g_star_dephasing(cfg.hot, cfg.cold, 0.0, gamma_phi)
    return g_star_dephasing(cfg.hot, cfg.cold, cfg.g_reference_delta, gamma_phi)


def _evaluate(cfg: RunConfig, numeric: bool = False) -> tuple[SweepRow, float]:
    g = resolve_g(cfg, cfg.delta, cfg.gamma_phi)
    drive = DriveSpec(cfg.omega0, g, cfg.delta)
    steady = steady_analytic_dephasing(cfg.hot, cfg.cold, drive, cfg.gamma_phi)
    state = steady.as_state()
    rep = heat_report(state, cfg.hot, cfg.cold, drive, cfg.gamma_phi)
    if not rep.balanced:
        raise NumericalIntegrityError(f"first law violated: residual {rep.first_law_residual} W")
    row = SweepRow(
        cfg.delta, g, steady.x_tilde_inf, steady.y_tilde_inf, steady.z_tilde_inf,
        rep.J_cl, rep.J_q, rep.J_h, rep.J_c, rep.P, rep.E_q,
        rep.sigma_dot_two_bath, rep.first_law_residual,
    )
    deviation = 0.0
    if numeric:
        num = steady_numeric(build_generator(cfg.hot, cfg.cold, drive, cfg.gamma_phi))
        deviation = max_relative_deviation(
            (steady.x_tilde_inf, steady.y_tilde_inf, steady.z_tilde_inf),
            (num.x_tilde, num.y_tilde, num.z),
        )
    return row, deviation


def max_relative_deviation(reference, other, atol: float = 1e-12) -> float:
    """Largest relative difference; components below ``atol`` compare absolutely."""
    worst = 0.0
    for a, b in zip(reference, other):
        diff = abs(a - b)
        worst = max(worst, diff / abs(a) if abs(a) > atol else diff)
    return worst


def run_point(cfg: RunConfig, numeric: bool = False) -> tuple[SweepRow, float]:
    """Evaluate the configured point; the float is the analytic/numeric deviation (0 if unchecked)."""
    return _evaluate(cfg, numeric)


def _point_config(cfg: RunConfig, value: float) -> RunConfig:
    var = cfg.sweep.variable
    if var == "delta":
        return replace(cfg, delta=value, sweep=None)
    if var == "g":
        return replace(cfg, g=value, sweep=None)
    return replace(cfg, gamma_phi=value, sweep=None)


def _sweep_task(args) -> tuple[SweepRow, float]:
    cfg, value, numeric = args
    try:
        return _evaluate(_point_config(cfg, value), numeric)
    except QHeatError as exc:
        raise type(exc)(f"grid point {cfg.sweep.variable}={value!r}: {exc}") from exc


def run_sweep(cfg: RunConfig, jobs: int = 1, numeric: bool = False) -> tuple[list[SweepRow], float]:
    if cfg.sweep is None:
        raise ValueError("config has no sweep section")
    tasks = [(cfg, v, numeric) for v in cfg.sweep.grid()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_sweep_task(t) for t in tasks]
    rows = [r for r, _ in results]
    return rows, max((d for _, d in results), default=0.0)


def check_row(row: SweepRow) -> None:
    if row.J_h_W != row.J_cl_W + row.J_q_W:
        raise NumericalIntegrityError(f"J_h != J_cl + J_q in row {row}")
    scale = max(abs(row.P_W), abs(row.J_h_W), abs(row.J_c_W), abs(row.J_cl_W), 1e-300)
    if abs(row.first_law_residual_W) > FIRST_LAW_RTOL * scale:
        raise NumericalIntegrityError(f"first-law residual too large in row {row}")


def _fmt(value: float, precision: int) -> str:
    if math.isnan(value):
        return "nan"
    return f"{value:.{precision - 1}e}"


def render(rows, fmt: str = "csv", precision: int = 17) -> str:
    if not rows:
        raise ValueError("nothing to emit")
    for row in rows:
        check_row(row)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow(_fmt(v, precision) for v in astuple(row))
        return buf.getvalue()
    if fmt == "json":
        records = [
            {k: (None if math.isnan(v) else float(_fmt(v, precision))) for k, v in zip(COLUMNS, astuple(row))}
            for row in rows
        ]
        return json.dumps(records, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit(rows, fmt: str = "csv", path: str | Path | None = None, precision: int = 17) -> str:
    """Render ``rows`` and write them to ``path`` (if given). Returns the text."""
    text = render(rows, fmt, precision)
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8", newline="")
        except OSError as exc:
            raise OutputError(f"cannot write {path}: {exc}") from exc
    return text


def parse_rows(text: str, fmt: str = "csv") -> list[SweepRow]:
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != COLUMNS:
            raise ValueError(f"unexpected header {header}")
        return [SweepRow(*(float(v) for v in rec)) for rec in reader]
    records = json.loads(text)
    return [SweepRow(*(float("nan") if r[k] is None else r[k] for k in COLUMNS)) for r in records]
