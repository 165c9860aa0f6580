"""Constants, parameter containers, thermal occupations and frame maps.

Units: every rate and angular frequency is stored in s^-1 (rad/s for the
angular ones). Conversions from linear frequencies happen at the edges.

Coherence convention: ``x_tilde``/``y_tilde`` are the full Bloch-vector
components along u(t) = (cos w_d t, sin w_d t, 0) and v(t) = (-sin, cos, 0),
i.e. x_tilde = Tr{(u.sigma) rho}. The lab -> rotating map therefore rotates
(x, y) by -w_d t about z.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ModelValidityWarning, NumericalIntegrityError

#: Tolerance on the Bloch norm exceeding one.
POSITIVITY_EPS = 1e-9
#: Tolerance on population sum p_e + p_g = 1.
TRACE_EPS = 1e-12


@dataclass(frozen=True)
class PhysConstants:
    hbar: float
    h: float
    k_B: float
    e_charge: float
    R_Q: float


def _make_constants() -> PhysConstants:
    h = 6.62607015e-34
    e = 1.602176634e-19
    return PhysConstants(
        hbar=h / (2 * math.pi),
        h=h,
        k_B=1.380649e-23,
        e_charge=e,
        R_Q=h / (4 * e**2),
    )


CONSTANTS = _make_constants()
HBAR = CONSTANTS.hbar


@dataclass(frozen=True)
class BathSpec:
    """A thermal reservoir: Lindblad rate ``gamma`` (1/s) and occupation ``n_bar``.

    ``temperature`` (K) is optional bookkeeping, used for entropy rates.
    """

    gamma: float
    n_bar: float
    label: str = ""
    temperature: float | None = None

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError(f"bath {self.label!r}: gamma must be > 0, got {self.gamma}")
        if not self.n_bar >= 0:
            raise DomainError(f"bath {self.label!r}: n_bar must be >= 0, got {self.n_bar}")
        if self.temperature is not None and not self.temperature > 0:
            raise DomainError(f"bath {self.label!r}: temperature must be > 0")

    @classmethod
    def from_temperature(cls, gamma: float, omega0: float, temperature: float, label: str = ""):
        return cls(gamma, thermal_occupation(omega0, temperature), label, temperature)

    @property
    def decay(self) -> float:
        """Emission rate gamma (n+1)."""
        return self.gamma * (self.n_bar + 1)

    @property
    def excitation(self) -> float:
        """Absorption rate gamma n."""
        return self.gamma * self.n_bar

    @property
    def total(self) -> float:
        """Population relaxation rate gamma (2n+1)."""
        return self.gamma * (2 * self.n_bar + 1)

    @property
    def z_eq(self) -> float:
        """Equilibrium z = p_e - p_g with this bath alone."""
        return -1.0 / (2 * self.n_bar + 1)

    def temperature_at(self, omega0: float) -> float:
        """Temperature, either stored or recovered by inverting the Planck law.

        Returns 0.0 for an empty bath (n_bar = 0).
        """
        if self.temperature is not None:
            return self.temperature
        if self.n_bar == 0:
            return 0.0
        return CONSTANTS.hbar * omega0 / (CONSTANTS.k_B * math.log1p(1.0 / self.n_bar))


@dataclass(frozen=True)
class DriveSpec:
    omega0: float
    g: float
    delta: float = 0.0

    def __post_init__(self):
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")
        if not self.g >= 0:
            raise DomainError(f"g must be >= 0, got {self.g}")
        if not math.isfinite(self.delta):
            raise DomainError("delta must be finite")

    @property
    def omega_d(self) -> float:
        return self.omega0 - self.delta

    @property
    def weak_drive(self) -> bool:
        return self.g < self.omega0 / 10 and abs(self.delta) < self.omega0 / 10

    def check_validity(self) -> bool:
        """Warn (never raise) when g or |delta| is not small against omega0."""
        if not self.weak_drive:
            warnings.warn(
                f"g={self.g:.3g} or |delta|={abs(self.delta):.3g} not << omega0={self.omega0:.3g}; "
                "rotating-wave model outside its validity range",
                ModelValidityWarning,
                stacklevel=2,
            )
            return False
        return True


def gamma_tot(hot: BathSpec, cold: BathSpec) -> float:
    return hot.total + cold.total


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)

    def validate(self) -> BlochVector:
        if self.norm > 1 + POSITIVITY_EPS:
            raise NumericalIntegrityError(f"Bloch norm {self.norm!r} exceeds 1")
        return self


@dataclass(frozen=True)
class RotFrameState:
    """Rotating-frame state Y = (p_e, x_tilde, y_tilde, p_g)."""

    p_e: float
    x_tilde: float
    y_tilde: float
    p_g: float

    @classmethod
    def from_bloch(cls, x: float, y: float, z: float) -> RotFrameState:
        return cls((1 + z) / 2, x, y, (1 - z) / 2)

    @classmethod
    def ground(cls) -> RotFrameState:
        return cls(0.0, 0.0, 0.0, 1.0)

    @property
    def z(self) -> float:
        return self.p_e - self.p_g

    @property
    def norm(self) -> float:
        return math.sqrt(self.x_tilde**2 + self.y_tilde**2 + self.z**2)

    def as_array(self) -> np.ndarray:
        return np.array([self.p_e, self.x_tilde, self.y_tilde, self.p_g])

    def validate(self) -> RotFrameState:
        if abs(self.p_e + self.p_g - 1) > TRACE_EPS:
            raise NumericalIntegrityError(f"population sum {self.p_e + self.p_g!r} != 1")
        if self.norm > 1 + POSITIVITY_EPS:
            raise NumericalIntegrityError(f"Bloch norm {self.norm!r} exceeds 1")
        return self


def thermal_occupation(omega0: float, temperature: float) -> float:
    """Bose-Einstein occupation of a mode at angular frequency ``omega0``."""
    if not omega0 > 0:
        raise DomainError(f"omega0 must be > 0, got {omega0}")
    if not temperature > 0:
        raise DomainError(f"temperature must be > 0, got {temperature}")
    ratio = CONSTANTS.hbar * omega0 / (CONSTANTS.k_B * temperature)
    # expm1 keeps precision at high temperature; overflow means n -> 0
    try:
        return 1.0 / math.expm1(ratio)
    except OverflowError:
        return 0.0


def to_rotating(state: BlochVector, omega_d: float, t: float) -> RotFrameState:
    """Lab frame -> frame rotating at the drive: rotate (x, y) by -omega_d t."""
    c, s = math.cos(omega_d * t), math.sin(omega_d * t)
    xt = c * state.x + s * state.y
    yt = -s * state.x + c * state.y
    return RotFrameState.from_bloch(xt, yt, state.z)


def from_rotating(state: RotFrameState, omega_d: float, t: float) -> BlochVector:
    c, s = math.cos(omega_d * t), math.sin(omega_d * t)
    x = c * state.x_tilde - s * state.y_tilde
    y = s * state.x_tilde + c * state.y_tilde
    return BlochVector(x, y, state.z)
