"""Charge-qubit circuit -> two-bath qubit model parameters."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, ModelValidityWarning
from .model import CONSTANTS, BathSpec, DriveSpec, thermal_occupation
from .steady import steady_analytic
from .switch import SwitchPoint, switch_point
from .thermo import HeatReport, heat_report


@dataclass(frozen=True)
class CircuitSpec:
    """Device parameters in SI units (F, Ohm, J, K).

    ``C_J`` is the total junction capacitance of both junctions.
    """

    C_J: float
    C_h: float
    C_c: float
    C_g: float
    R_h: float
    R_c: float
    E_J: float
    T_h: float
    T_c: float

    def __post_init__(self):
        for name in ("C_J", "C_h", "C_c", "C_g", "R_h", "R_c", "E_J"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be > 0, got {getattr(self, name)}")
        if not (self.T_h >= self.T_c > 0):
            raise DomainError(f"need T_h >= T_c > 0, got T_h={self.T_h}, T_c={self.T_c}")
        if self.C_g > self.C_J / 5:
            warnings.warn(f"C_g={self.C_g:.3g} F is not << C_J={self.C_J:.3g} F", ModelValidityWarning, stacklevel=2)

    @property
    def C_sigma(self) -> float:
        return self.C_c + self.C_h + self.C_g + self.C_J


@dataclass(frozen=True)
class DerivedModel:
    E_C: float
    C_Sigma: float
    omega0: float
    gamma_h: float
    gamma_c: float
    n_bar_h: float
    n_bar_c: float
    T_h: float
    T_c: float

    @property
    def hot(self) -> BathSpec:
        return BathSpec(self.gamma_h, self.n_bar_h, "hot", self.T_h)

    @property
    def cold(self) -> BathSpec:
        return BathSpec(self.gamma_c, self.n_bar_c, "cold", self.T_c)


def coupling_rate(C_bath: float, R_bath: float, C_sigma: float, E_J: float) -> float:
    """Bath-induced transition rate of the island, 2 pi C^2 E_J R / (2 hbar C_sigma^2 R_Q)."""
    c = CONSTANTS
    return 2 * math.pi * C_bath**2 * E_J * R_bath / (2 * c.hbar * C_sigma**2 * c.R_Q)


def derive_model(spec: CircuitSpec) -> DerivedModel:
    c_sigma = spec.C_sigma
    e_c = CONSTANTS.e_charge**2 / (2 * c_sigma)
    if e_c <= spec.E_J:
        warnings.warn(
            f"E_C={e_c:.3g} J <= E_J={spec.E_J:.3g} J: not in the charge-qubit regime",
            ModelValidityWarning,
            stacklevel=2,
        )
    omega0 = spec.E_J / CONSTANTS.hbar
    return DerivedModel(
        E_C=e_c,
        C_Sigma=c_sigma,
        omega0=omega0,
        gamma_h=coupling_rate(spec.C_h, spec.R_h, c_sigma, spec.E_J),
        gamma_c=coupling_rate(spec.C_c, spec.R_c, c_sigma, spec.E_J),
        n_bar_h=thermal_occupation(omega0, spec.T_h),
        n_bar_c=thermal_occupation(omega0, spec.T_c),
        T_h=spec.T_h,
        T_c=spec.T_c,
    )


def gate_offset(spec: CircuitSpec, V_g: float) -> float:
    """Reduced gate charge C_g V_g / 2e."""
    return spec.C_g * V_g / (2 * CONSTANTS.e_charge)


@dataclass(frozen=True)
class DesignReport:
    model: DerivedModel
    switch: SwitchPoint
    heat: HeatReport

    def to_dict(self) -> dict:
        return {
            "model": self.model.__dict__.copy(),
            "switch": self.switch.__dict__.copy(),
            "heat": self.heat.__dict__.copy(),
        }


def design_report(spec: CircuitSpec, delta: float) -> DesignReport:
    """Device -> model -> g*(delta) -> steady state -> heat flows."""
    model = derive_model(spec)
    hot, cold = model.hot, model.cold
    if not hot.n_bar > cold.n_bar:
        raise DomainError("design needs T_h > T_c")
    sp = switch_point(hot, cold, model.omega0, delta)
    drive = DriveSpec(model.omega0, sp.g_star, delta)
    state = steady_analytic(hot, cold, drive).as_state()
    return DesignReport(model, sp, heat_report(state, hot, cold, drive))
