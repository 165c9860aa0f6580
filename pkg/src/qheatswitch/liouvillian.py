"""Rotating-frame generator of the driven two-bath qubit and its propagation.

The generator matrix has the printed layout acting on
``(p_e, x_tilde/2, y_tilde/2, p_g)`` -- its coherence coordinates are the real
and imaginary parts of rho_eg, half the Bloch components. States exposed to
callers are always :class:`RotFrameState` (full Bloch components); the
halving happens in :func:`to_generator_coords` / :func:`from_generator_coords`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DegeneracyError, DomainError
from .model import BathSpec, DriveSpec, RotFrameState, gamma_tot

_HALF = np.array([1.0, 0.5, 0.5, 1.0])


def to_generator_coords(state: RotFrameState) -> np.ndarray:
    return state.as_array() * _HALF


def from_generator_coords(vec: np.ndarray) -> RotFrameState:
    return RotFrameState(float(vec[0]), float(2 * vec[1]), float(2 * vec[2]), float(vec[3]))


@dataclass(frozen=True)
class Generator:
    matrix: np.ndarray = field(repr=False)
    hot: BathSpec
    cold: BathSpec
    drive: DriveSpec
    gamma_phi: float = 0.0

    @property
    def gamma_tot(self) -> float:
        return gamma_tot(self.hot, self.cold)

    def relaxation_rates(self) -> np.ndarray:
        """Decay rates -Re(lambda) of the non-stationary modes, ascending."""
        ev = np.linalg.eigvals(self.matrix)
        # drop the zero mode (the one closest to the origin)
        ev = np.delete(ev, np.argmin(np.abs(ev)))
        return np.sort(-ev.real)


def build_generator(hot: BathSpec, cold: BathSpec, drive: DriveSpec, gamma_phi: float = 0.0) -> Generator:
    if gamma_phi < 0:
        raise DomainError(f"gamma_phi must be >= 0, got {gamma_phi}")
    down = hot.decay + cold.decay
    up = hot.excitation + cold.excitation
    coh = -0.5 * (hot.total + cold.total) - gamma_phi
    g, d = drive.g, drive.delta
    a = np.array(
        [
            [-down, 0.0, g, up],
            [0.0, coh, -d, 0.0],
            [-g / 2, d, coh, g / 2],
            [down, 0.0, -g, -up],
        ]
    )
    a.setflags(write=False)
    return Generator(a, hot, cold, drive, gamma_phi)


def propagator(gen: Generator, t: float) -> np.ndarray:
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if t == 0:
        return np.eye(4)
    return scipy.linalg.expm(gen.matrix * t)


def propagate(gen: Generator, y0: RotFrameState, t: float) -> RotFrameState:
    if t == 0:
        return y0
    out = from_generator_coords(propagator(gen, t) @ to_generator_coords(y0))
    return out.validate()


@dataclass(frozen=True)
class Trajectory:
    times: tuple[float, ...]
    states: tuple[RotFrameState, ...]
    generator: Generator = field(repr=False)

    def __len__(self):
        return len(self.times)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(s, name) for s in self.states])


def evolve_trajectory(gen: Generator, y0: RotFrameState, t_grid) -> Trajectory:
    times = tuple(float(t) for t in t_grid)
    if not times:
        raise DomainError("empty time grid")
    if times[0] < 0 or any(b <= a for a, b in zip(times, times[1:])):
        raise DomainError("time grid must be strictly increasing and start >= 0")
    # each point from y0 directly: no accumulation of stepping error
    states = tuple(propagate(gen, y0, t) for t in times)
    return Trajectory(times, states, gen)


def steady_numeric(gen: Generator) -> RotFrameState:
    """Stationary state from the smallest right-singular vector of the generator."""
    if not gen.gamma_tot > 0:
        raise DomainError("gamma_tot must be > 0")
    a = gen.matrix
    scale = np.linalg.norm(a)
    _, sv, vt = np.linalg.svd(a)
    if scale == 0 or sv[-2] < 1e-6 * scale:
        raise DegeneracyError(f"null space is not one-dimensional (singular values {sv})")
    vec = vt[-1] / (vt[-1][0] + vt[-1][3])
    # one Newton-type refinement on the bordered system [A; 1 0 0 1] y = [0; 1]
    bordered = np.vstack([a, [1.0, 0.0, 0.0, 1.0]])
    resid = np.append(a @ vec, vec[0] + vec[3] - 1.0)
    vec = vec - np.linalg.lstsq(bordered, resid, rcond=None)[0]
    return from_generator_coords(vec).validate()
