"""Drive strength that cancels the classical hot-bath heat, and the lines it defines."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import DomainError, NoRootError
from .liouvillian import build_generator, steady_numeric
from .model import HBAR, BathSpec, DriveSpec, gamma_tot
from .steady import steady_analytic
from .thermo import drive_power, heat_components_hot


@dataclass(frozen=True)
class SwitchPoint:
    delta: float
    g_star: float
    J_q_inf: float
    y_tilde_inf: float
    P_inf: float
    residual_J_cl: float


def _require_bias(hot: BathSpec, cold: BathSpec, strict: bool = False):
    if hot.n_bar < cold.n_bar or (strict and hot.n_bar == cold.n_bar):
        raise DomainError(
            f"classical heat cannot be suppressed without a colder bath "
            f"(n_bar_h={hot.n_bar}, n_bar_c={cold.n_bar})"
        )


def g_star(hot: BathSpec, cold: BathSpec, delta: float) -> float:
    return g_star_dephasing(hot, cold, delta, 0.0)


def g_star_dephasing(hot: BathSpec, cold: BathSpec, delta: float, gamma_phi: float) -> float:
    _require_bias(hot, cold)
    if gamma_phi < 0:
        raise DomainError(f"gamma_phi must be >= 0, got {gamma_phi}")
    gp = gamma_tot(hot, cold) + 2 * gamma_phi
    return math.sqrt(cold.gamma / gp * (gp**2 + 4 * delta**2) * (hot.n_bar - cold.n_bar))


def g_star_numeric(
    hot: BathSpec, cold: BathSpec, delta: float, gamma_phi: float = 0.0, omega0: float = 1.0
) -> float:
    """Root of z_inf(g) - z_eq_h using the null-space steady state.

    ``omega0`` only has to make a valid DriveSpec; the steady state does not
    depend on it.
    """
    _require_bias(hot, cold)
    if hot.n_bar == cold.n_bar:
        return 0.0
    target = hot.z_eq

    def f(g: float) -> float:
        gen = build_generator(hot, cold, DriveSpec(omega0, g, delta), gamma_phi)
        return steady_numeric(gen).z - target

    f0 = f(0.0)
    if f0 >= 0:
        raise NoRootError(f"f(0) = {f0} >= 0; no suppressing drive exists")
    hi = gamma_tot(hot, cold)
    for _ in range(60):
        if f(hi) > 0:
            break
        hi *= 2
    else:
        raise NoRootError(f"no sign change up to g = {hi}")
    return brentq(f, 0.0, hi, xtol=1e-300, rtol=1e-15, maxiter=500)


def quantum_heat_on_line(hot: BathSpec, cold: BathSpec, delta: float) -> float:
    _require_bias(hot, cold)
    return HBAR * delta * (hot.gamma * cold.gamma / gamma_tot(hot, cold)) * (hot.n_bar - cold.n_bar)


def quantum_heat_on_line_dephasing(hot: BathSpec, cold: BathSpec, delta: float, gamma_phi: float) -> float:
    _require_bias(hot, cold)
    gp = gamma_tot(hot, cold) + 2 * gamma_phi
    return HBAR * delta * hot.gamma * cold.gamma / gp * (hot.n_bar - cold.n_bar)


def special_point_y(hot: BathSpec, cold: BathSpec) -> float:
    """Out-of-phase coherence at (g*(0), 0), printed form (half-Bloch units)."""
    gt = gamma_tot(hot, cold)
    return math.sqrt((hot.n_bar - cold.n_bar) * cold.gamma / gt) / (2 * hot.n_bar + 1)


def special_point_power(hot: BathSpec, cold: BathSpec, omega0: float) -> float:
    return HBAR * omega0 * cold.gamma * (hot.n_bar - cold.n_bar) / (2 * hot.n_bar + 1)


def switch_point(hot: BathSpec, cold: BathSpec, omega0: float, delta: float) -> SwitchPoint:
    """Evaluate the analytic steady state on the line (g*(delta), delta)."""
    gs = g_star(hot, cold, delta)
    drive = DriveSpec(omega0, gs, delta)
    state = steady_analytic(hot, cold, drive).as_state()
    j_cl, _ = heat_components_hot(state, hot, drive)
    return SwitchPoint(
        delta=delta,
        g_star=gs,
        J_q_inf=quantum_heat_on_line(hot, cold, delta),
        y_tilde_inf=state.y_tilde,
        P_inf=drive_power(state, drive),
        residual_J_cl=j_cl,
    )


def special_point_report(hot: BathSpec, cold: BathSpec, omega0: float) -> SwitchPoint:
    """The operating point (g*(0), 0) where both hot-bath heat components vanish."""
    _require_bias(hot, cold, strict=True)
    return switch_point(hot, cold, omega0, 0.0)
