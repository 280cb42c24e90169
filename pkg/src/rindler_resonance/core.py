"""Kinematics, reduced variables, and shared result types.

Two identical two-level atoms ride parallel uniformly accelerated
trajectories separated by a distance ``z`` perpendicular to the
acceleration.  Everything downstream is controlled by two dimensionless
groups: ``zeta = z*a/(2*c**2)``, comparing the separation to the
crossover length ``c**2/a``, and ``theta = omega0*z/c``, the separation
in units of the transition wavelength.  This module owns the scenario
description, the reduced-variable bookkeeping, and the small shared
vocabulary (parity signs, regime labels, energy-shift records) used by
the scalar and electromagnetic calculations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

__all__ = [
    "SPEED_OF_LIGHT",
    "REDUCED_PLANCK",
    "BOLTZMANN",
    "PhysicalConstants",
    "CONSTANTS",
    "DomainError",
    "UsageError",
    "FieldKindError",
    "FieldKind",
    "Parity",
    "Regime",
    "Scenario",
    "ReducedGeometry",
    "EnergyShift",
    "asinh_ratio",
    "reduced_geometry",
    "unruh_temperature",
    "parity_sign",
    "atomic_correlation_factor",
]

SPEED_OF_LIGHT = 299792458.0  # m/s, exact
REDUCED_PLANCK = 1.054571817e-34  # J*s, CODATA 2018
BOLTZMANN = 1.380649e-23  # J/K, exact

# Regime boundaries in zeta = z*a/(2*c**2).
INERTIAL_ZETA_MAX = 0.1
FARZONE_ZETA_MIN = 10.0

# Below this zeta the direct asinh(zeta)/zeta quotient loses digits.
_ASINH_RATIO_SERIES_CUTOFF = 1e-4


class DomainError(ValueError):
    """A physical parameter lies outside the supported domain."""


class UsageError(TypeError):
    """An operation was invoked with arguments of the wrong kind."""


class FieldKindError(UsageError):
    """An operation received a scenario built for the other field type."""


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants used throughout.

    Attributes
    ----------
    c:
        Speed of light in m/s.
    hbar:
        Reduced Planck constant in J*s.
    k_B:
        Boltzmann constant in J/K.
    """

    c: float = SPEED_OF_LIGHT
    hbar: float = REDUCED_PLANCK
    k_B: float = BOLTZMANN

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "k_B"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise DomainError(f"constant {name} must be finite and positive, got {value!r}")


CONSTANTS = PhysicalConstants()


class FieldKind(enum.Enum):
    SCALAR = "scalar"
    EM = "em"

    @classmethod
    def from_label(cls, label: str) -> "FieldKind":
        try:
            return cls(label.strip().lower())
        except ValueError:
            raise DomainError(f"unknown field kind {label!r}; expected 'scalar' or 'em'") from None


class Parity(enum.Enum):
    """Exchange symmetry of the correlated two-atom state."""

    SYMMETRIC = "sym"
    ANTISYMMETRIC = "anti"

    @classmethod
    def from_label(cls, label: str) -> "Parity":
        key = label.strip().lower()
        aliases = {
            "sym": cls.SYMMETRIC,
            "symmetric": cls.SYMMETRIC,
            "anti": cls.ANTISYMMETRIC,
            "antisymmetric": cls.ANTISYMMETRIC,
        }
        if key not in aliases:
            raise DomainError(f"unknown parity {label!r}; expected 'sym' or 'anti'")
        return aliases[key]


class Regime(enum.Enum):
    """Qualitative regime of the interatomic separation.

    Classification is by ``zeta`` alone: below 0.1 the pair is
    effectively inertial, above 10 the acceleration dominates and the
    far-zone forms apply, in between neither simplification is safe.
    """

    INERTIAL = "Inertial"
    INTERMEDIATE = "Intermediate"
    FARZONE = "FarZone"

    @classmethod
    def classify(cls, zeta: float) -> "Regime":
        if zeta < 0.0:
            raise DomainError(f"zeta must be non-negative, got {zeta}")
        if zeta < INERTIAL_ZETA_MAX:
            return cls.INERTIAL
        if zeta > FARZONE_ZETA_MIN:
            return cls.FARZONE
        return cls.INTERMEDIATE


def parity_sign(parity: Parity) -> float:
    """Sign carried by the correlated state: +1 symmetric, -1 antisymmetric."""
    return 1.0 if parity is Parity.SYMMETRIC else -1.0


def _as_dipole(vec, name: str) -> np.ndarray:
    arr = np.asarray(vec, dtype=float)
    if arr.shape != (3,):
        raise DomainError(f"{name} must be a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Scenario:
    """Full description of one two-atom configuration.

    Parameters
    ----------
    field_kind:
        Which field the atoms couple to.
    parity:
        Exchange symmetry of the shared excitation.
    acceleration:
        Common proper acceleration in m/s^2, zero for inertial atoms.
    separation:
        Interatomic distance in m, perpendicular to the acceleration.
    omega0:
        Atomic transition angular frequency in rad/s.
    coupling:
        Scalar coupling strength (scalar field only).
    dipole_a, dipole_b:
        Transition dipole vectors in C*m (electromagnetic field only).
        Components are taken real.
    """

    field_kind: FieldKind
    parity: Parity
    acceleration: float
    separation: float
    omega0: float
    coupling: Optional[float] = None
    dipole_a: Optional[np.ndarray] = None
    dipole_b: Optional[np.ndarray] = None
    constants: PhysicalConstants = field(default=CONSTANTS)

    def __post_init__(self) -> None:
        if not (self.separation > 0.0 and math.isfinite(self.separation)):
            raise DomainError(f"separation must be positive and finite, got {self.separation}")
        if not (self.acceleration >= 0.0 and math.isfinite(self.acceleration)):
            raise DomainError(f"acceleration must be >= 0 and finite, got {self.acceleration}")
        if not (self.omega0 >= 0.0 and math.isfinite(self.omega0)):
            raise DomainError(f"omega0 must be >= 0 and finite, got {self.omega0}")
        if self.field_kind is FieldKind.SCALAR:
            if self.coupling is None:
                raise DomainError("scalar scenario requires a coupling strength")
            if not math.isfinite(self.coupling):
                raise DomainError(f"coupling must be finite, got {self.coupling}")
            if self.dipole_a is not None or self.dipole_b is not None:
                raise DomainError("scalar scenario does not take dipole vectors")
        else:
            if self.coupling is not None:
                raise DomainError("electromagnetic scenario does not take a scalar coupling")
            if self.dipole_a is None or self.dipole_b is None:
                raise DomainError("electromagnetic scenario requires both dipole vectors")
            object.__setattr__(self, "dipole_a", _as_dipole(self.dipole_a, "dipole_a"))
            object.__setattr__(self, "dipole_b", _as_dipole(self.dipole_b, "dipole_b"))

    @classmethod
    def scalar_field(
        cls,
        *,
        acceleration: float,
        separation: float,
        omega0: float,
        parity: Parity,
        coupling: float = 1.0,
        constants: PhysicalConstants = CONSTANTS,
    ) -> "Scenario":
        return cls(
            field_kind=FieldKind.SCALAR,
            parity=parity,
            acceleration=acceleration,
            separation=separation,
            omega0=omega0,
            coupling=coupling,
            constants=constants,
        )

    @classmethod
    def em_field(
        cls,
        *,
        acceleration: float,
        separation: float,
        omega0: float,
        parity: Parity,
        dipole_a,
        dipole_b,
        constants: PhysicalConstants = CONSTANTS,
    ) -> "Scenario":
        return cls(
            field_kind=FieldKind.EM,
            parity=parity,
            acceleration=acceleration,
            separation=separation,
            omega0=omega0,
            dipole_a=dipole_a,
            dipole_b=dipole_b,
            constants=constants,
        )

    @classmethod
    def from_reduced(
        cls,
        *,
        theta: float,
        zeta: float,
        parity: Parity,
        field_kind: FieldKind = FieldKind.SCALAR,
        separation: float = 1.0,
        coupling: float = 1.0,
        dipole_a=None,
        dipole_b=None,
        constants: PhysicalConstants = CONSTANTS,
    ) -> "Scenario":
        """Build a scenario realizing given reduced variables at a chosen separation.

        Inverts theta = omega0*z/c and zeta = z*a/(2*c**2) for omega0 and a.
        """
        if theta < 0.0 or zeta < 0.0:
            raise DomainError("theta and zeta must be non-negative")
        c = constants.c
        omega0 = theta * c / separation
        acceleration = 2.0 * c * c * zeta / separation
        if field_kind is FieldKind.SCALAR:
            return cls.scalar_field(
                acceleration=acceleration,
                separation=separation,
                omega0=omega0,
                parity=parity,
                coupling=coupling,
                constants=constants,
            )
        return cls.em_field(
            acceleration=acceleration,
            separation=separation,
            omega0=omega0,
            parity=parity,
            dipole_a=dipole_a,
            dipole_b=dipole_b,
            constants=constants,
        )

    def require_field(self, kind: FieldKind) -> None:
        if self.field_kind is not kind:
            raise FieldKindError(
                f"operation requires a {kind.value} scenario, got {self.field_kind.value}"
            )


def asinh_ratio(zeta: float) -> float:
    """Return asinh(zeta)/zeta, continued to 1 at zeta = 0.

    Direct evaluation below zeta = 1e-4 would subtract nearly equal
    quantities inside asinh, so a short even series is used there.
    """
    if zeta < 0.0:
        raise DomainError(f"zeta must be non-negative, got {zeta}")
    if zeta < _ASINH_RATIO_SERIES_CUTOFF:
        z2 = zeta * zeta
        return 1.0 - z2 / 6.0 + 3.0 * z2 * z2 / 40.0
    return math.asinh(zeta) / zeta


@dataclass(frozen=True)
class ReducedGeometry:
    """Reduced variables of one scenario.

    Attributes
    ----------
    zeta:
        z*a/(2*c**2), separation over twice the crossover length.
    big_n:
        1 + zeta**2.
    s_ratio:
        asinh(zeta)/zeta, evaluated safely at zeta = 0.
    light_time:
        Proper-time lapse S = (z/c)*s_ratio between emission and
        absorption along the accelerated trajectories, in s.
    theta:
        omega0*z/c.
    omega_ratio:
        omega0*c/a, or None for inertial atoms (a = 0).
    crossover_length:
        c**2/a in m, infinite for inertial atoms.
    separation, omega0:
        Inputs carried through for convenience, SI units.
    """

    zeta: float
    big_n: float
    s_ratio: float
    light_time: float
    theta: float
    omega_ratio: Optional[float]
    crossover_length: float
    separation: float
    omega0: float
    constants: PhysicalConstants = field(default=CONSTANTS)

    @property
    def acceleration(self) -> float:
        """Proper acceleration reconstructed from zeta, in m/s^2."""
        c = self.constants.c
        return 2.0 * c * c * self.zeta / self.separation

    @property
    def phase(self) -> float:
        """omega0 * light_time in the reduced form theta * s_ratio."""
        return self.theta * self.s_ratio

    @property
    def regime(self) -> Regime:
        return Regime.classify(self.zeta)


def reduced_geometry(
    acceleration: float,
    separation: float,
    omega0: float,
    constants: PhysicalConstants = CONSTANTS,
) -> ReducedGeometry:
    """Map (a, z, omega0) to the dimensionless groups driving the shift."""
    if not (separation > 0.0 and math.isfinite(separation)):
        raise DomainError(f"separation must be positive and finite, got {separation}")
    if not (acceleration >= 0.0 and math.isfinite(acceleration)):
        raise DomainError(f"acceleration must be >= 0 and finite, got {acceleration}")
    if not (omega0 >= 0.0 and math.isfinite(omega0)):
        raise DomainError(f"omega0 must be >= 0 and finite, got {omega0}")
    c = constants.c
    zeta = separation * acceleration / (2.0 * c * c)
    ratio = asinh_ratio(zeta)
    if acceleration > 0.0:
        omega_ratio: Optional[float] = omega0 * c / acceleration
        crossover = c * c / acceleration
    else:
        omega_ratio = None
        crossover = math.inf
    return ReducedGeometry(
        zeta=zeta,
        big_n=1.0 + zeta * zeta,
        s_ratio=ratio,
        light_time=(separation / c) * ratio,
        theta=omega0 * separation / c,
        omega_ratio=omega_ratio,
        crossover_length=crossover,
        separation=separation,
        omega0=omega0,
        constants=constants,
    )


def scenario_geometry(scenario: Scenario) -> ReducedGeometry:
    """Reduced geometry of a scenario, using its own constants."""
    return reduced_geometry(
        scenario.acceleration, scenario.separation, scenario.omega0, scenario.constants
    )


def unruh_temperature(acceleration: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Unruh temperature hbar*a/(2*pi*c*k_B) in K; zero for a = 0."""
    if not (acceleration >= 0.0 and math.isfinite(acceleration)):
        raise DomainError(f"acceleration must be >= 0 and finite, got {acceleration}")
    return constants.hbar * acceleration / (2.0 * math.pi * constants.c * constants.k_B)


def atomic_correlation_factor(u: float, omega0: float, parity: Parity) -> float:
    """Two-atom correlation along the trajectory pair: +-cos(omega0*u).

    The sign is the parity sign; ``u`` is the proper-time difference.
    Field-specific prefactors are applied by the callers.
    """
    return parity_sign(parity) * math.cos(omega0 * u)


@dataclass(frozen=True)
class EnergyShift:
    """Resonance energy shift of one scenario.

    ``reduced`` is the dimensionless shape factor; ``si_value`` is the
    shift in J, equal to ``prefactor * reduced``.  ``warning`` is set
    when the requested evaluation is outside its comfort zone (for
    example a far-zone asymptote used at moderate zeta).
    """

    reduced: float
    prefactor: float
    si_value: float
    regime: Regime
    parity: Parity
    field_kind: FieldKind
    warning: Optional[str] = None
