"""Energy bookkeeping for the driven qubit: heat currents, power, entropy.

Sign convention: every current is energy flowing INTO the qubit.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError
from .model import HBAR, BathSpec, DriveSpec, RotFrameState

FIRST_LAW_RTOL = 1e-9


@dataclass(frozen=True)
class HeatReport:
    J_cl: float
    J_q: float
    J_h: float
    J_c: float
    P: float
    E_q: float
    J_phi: float
    sigma_dot_two_bath: float
    sigma_dot_single_t: float
    first_law_residual: float
    scale: float

    @property
    def balanced(self) -> bool:
        return abs(self.first_law_residual) <= FIRST_LAW_RTOL * self.scale


def _bath_heat(state: RotFrameState, bath: BathSpec, drive: DriveSpec) -> tuple[float, float]:
    # Tr{H0 L[rho]}: z relaxes towards z_eq at rate gamma (2n + 1)
    j_cl = -(bath.total * HBAR * drive.omega0 / 2) * (state.z + 1 / (2 * bath.n_bar + 1))
    # Tr{H_d L[rho]}: coherences decay at gamma (2n + 1) / 2
    j_q = -bath.total * HBAR * drive.g * state.x_tilde / 4
    return j_cl, j_q


def heat_components_hot(state: RotFrameState, hot: BathSpec, drive: DriveSpec) -> tuple[float, float]:
    """Classical and coherent parts of the hot-bath heat current."""
    return _bath_heat(state, hot, drive)


def heat_cold(state: RotFrameState, cold: BathSpec, drive: DriveSpec) -> float:
    return sum(_bath_heat(state, cold, drive))


def heat_dephasing(state: RotFrameState, drive: DriveSpec, gamma_phi: float) -> float:
    """Energy the pure-dephasing channel exchanges through the drive term."""
    return -gamma_phi * HBAR * drive.g * state.x_tilde / 2


def drive_power(state: RotFrameState, drive: DriveSpec) -> float:
    """Tr{dH_d/dt rho} = (hbar g omega_d / 2) y_tilde."""
    return HBAR * drive.g * drive.omega_d * state.y_tilde / 2


def coherent_energy(state: RotFrameState, drive: DriveSpec) -> float:
    return HBAR * drive.g * state.x_tilde / 2


def entropy_production(report: HeatReport, T_h: float, T_c: float) -> tuple[float, float]:
    """(two-reservoir rate, single-temperature rate with T = T_h), in W/K."""
    if not (T_h > 0 and T_c > 0):
        raise DomainError(f"temperatures must be > 0, got T_h={T_h}, T_c={T_c}")
    two_bath = -report.J_h / T_h - report.J_c / T_c
    single_t = -(report.J_q + report.J_cl) / T_h
    return two_bath, single_t


def heat_report(
    state: RotFrameState,
    hot: BathSpec,
    cold: BathSpec,
    drive: DriveSpec,
    gamma_phi: float = 0.0,
    T_h: float | None = None,
    T_c: float | None = None,
) -> HeatReport:
    """All energy flows for ``state``; temperatures default to the baths' own.

    Entropy rates are NaN when a temperature is unavailable (empty bath).
    """
    j_cl, j_q = heat_components_hot(state, hot, drive)
    j_h = j_cl + j_q
    j_c = heat_cold(state, cold, drive)
    j_phi = heat_dephasing(state, drive, gamma_phi)
    p = drive_power(state, drive)
    residual = p + j_h + j_c + j_phi
    scale = max(abs(p), abs(j_h), abs(j_c), abs(j_phi), HBAR * drive.omega0 * (hot.total + cold.total))
    report = HeatReport(
        J_cl=j_cl, J_q=j_q, J_h=j_h, J_c=j_c, P=p,
        E_q=coherent_energy(state, drive), J_phi=j_phi,
        sigma_dot_two_bath=float("nan"), sigma_dot_single_t=float("nan"),
        first_law_residual=residual, scale=scale,
    )
    th = T_h if T_h is not None else hot.temperature_at(drive.omega0)
    tc = T_c if T_c is not None else cold.temperature_at(drive.omega0)
    if th > 0 and tc > 0:
        two, single = entropy_production(report, th, tc)
        report = replace(report, sigma_dot_two_bath=two, sigma_dot_single_t=single)
    return report
