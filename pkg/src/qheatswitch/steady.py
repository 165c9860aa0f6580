"""Closed-form steady states.

The driven forms without dephasing are written exactly as printed. Their
coherences come out in the generator's half-Bloch coordinates, so they are
doubled when stored. The dephasing forms are already in Bloch components.
The denominators are sums of non-negative terms plus gamma_tot^3 > 0 (or
gamma_tot * (gamma_tot + 2 gamma_phi)^2), so they never vanish once
gamma_tot > 0.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .model import HBAR, BathSpec, DriveSpec, RotFrameState, gamma_tot


@dataclass(frozen=True)
class SteadyState:
    x_tilde_inf: float
    y_tilde_inf: float
    z_tilde_inf: float
    hot: BathSpec
    cold: BathSpec
    drive: DriveSpec
    gamma_phi: float = 0.0

    def as_state(self) -> RotFrameState:
        return RotFrameState.from_bloch(self.x_tilde_inf, self.y_tilde_inf, self.z_tilde_inf)


def _gtot(hot: BathSpec, cold: BathSpec) -> float:
    gt = gamma_tot(hot, cold)
    if not gt > 0:
        raise DomainError("gamma_tot must be > 0")
    return gt


def steady_analytic(hot: BathSpec, cold: BathSpec, drive: DriveSpec) -> SteadyState:
    gt = _gtot(hot, cold)
    gh, gc = hot.gamma, cold.gamma
    g, d = drive.g, drive.delta
    den = 2 * g**2 + gt**2 + 4 * d**2
    x = -(2 * d * g * (gh + gc) / gt) / den
    y = g * (gh + gc) / den
    z = -((gh + gc) * (gt**2 + 4 * d**2)) / (gt * den)
    return SteadyState(2 * x, 2 * y, z, hot, cold, drive)


def steady_analytic_dephasing(hot: BathSpec, cold: BathSpec, drive: DriveSpec, gamma_phi: float) -> SteadyState:
    if gamma_phi < 0:
        raise DomainError(f"gamma_phi must be >= 0, got {gamma_phi}")
    gt = _gtot(hot, cold)
    gh, gc = hot.gamma, cold.gamma
    g, d = drive.g, drive.delta
    gp = gt + 2 * gamma_phi
    den = 2 * g**2 * gp + gt * (gp**2 + 4 * d**2)
    x = -4 * d * g * (gh + gc) / den
    y = 2 * g * (gh + gc) * gp / den
    z = -(gh + gc) * (gp**2 + 4 * d**2) / den
    return SteadyState(x, y, z, hot, cold, drive, gamma_phi)


def undriven_reference(hot: BathSpec, cold: BathSpec, omega0: float) -> tuple[float, float]:
    """Undriven steady z0 and the hot-bath heat current it carries (W)."""
    gt = _gtot(hot, cold)
    if not omega0 > 0:
        raise DomainError(f"omega0 must be > 0, got {omega0}")
    z0 = -(hot.gamma + cold.gamma) / gt
    # the relaxation rate of z towards z_eq_h is gamma_h (2n_h + 1)
    j_h0 = -(hot.total * HBAR * omega0 / 2) * (z0 + 1 / (2 * hot.n_bar + 1))
    return z0, j_h0
