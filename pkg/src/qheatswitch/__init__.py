"""Driven qubit between two thermal baths: classical vs coherent heat flow."""
from .circuit import CircuitSpec, DerivedModel, DesignReport, derive_model, design_report, gate_offset
from .errors import (
    ConfigParseError,
    DegeneracyError,
    DomainError,
    ModelValidityWarning,
    NoRootError,
    NumericalIntegrityError,
    OutputError,
    QHeatError,
    ValidationError,
)
from .liouvillian import Generator, Trajectory, build_generator, evolve_trajectory, propagate, steady_numeric
from .model import (
    CONSTANTS,
    HBAR,
    BathSpec,
    BlochVector,
    DriveSpec,
    PhysConstants,
    RotFrameState,
    from_rotating,
    gamma_tot,
    thermal_occupation,
    to_rotating,
)
from .steady import SteadyState, steady_analytic, steady_analytic_dephasing, undriven_reference
from .switch import (
    SwitchPoint,
    g_star,
    g_star_dephasing,
    g_star_numeric,
    quantum_heat_on_line,
    quantum_heat_on_line_dephasing,
    special_point_report,
)
from .thermo import (
    HeatReport,
    coherent_energy,
    drive_power,
    entropy_production,
    heat_cold,
    heat_components_hot,
    heat_report,
)

__version__ = "0.1.0"
