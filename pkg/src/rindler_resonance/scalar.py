"""Resonance energy shift for atoms coupled to a massless scalar field.

The radiation-reaction part of the field correlations alone drives the
resonance shift, so the result is free of the thermal-like noise terms
and reduces to a single closed form: a cosine of the phase omega0*S
accumulated over the light-signal lapse S between the two accelerated
trajectories, scaled by 1/sqrt(1 + zeta**2).
"""

from __future__ import annotations

import math
from typing import Optional, Union

import numpy as np

from .core import (
    DomainError,
    EnergyShift,
    FieldKind,
    ReducedGeometry,
    Regime,
    Scenario,
    parity_sign,
    scenario_geometry,
)

__all__ = [
    "scalar_chi_density",
    "scalar_resonance_energy",
    "scalar_inertial_limit",
    "scalar_farzone_asymptote",
]

ArrayLike = Union[float, np.ndarray]


def scalar_chi_density(omega: ArrayLike, geom: ReducedGeometry) -> ArrayLike:
    """Spectral density sin(omega * S) of the scalar pair susceptibility.

    ``S`` is the light-signal lapse of the reduced geometry.  Accepts a
    scalar or an array of angular frequencies.
    """
    values = np.sin(np.asarray(omega, dtype=float) * geom.light_time)
    if values.ndim == 0:
        return float(values)
    return values


def _scalar_prefactor(scenario: Scenario) -> float:
    lam = scenario.coupling
    c = scenario.constants.c
    return lam * lam / (16.0 * math.pi * c * c * scenario.separation)


def _shift(scenario: Scenario, reduced: float, regime: Regime, warning: Optional[str] = None) -> EnergyShift:
    pref = _scalar_prefactor(scenario)
    return EnergyShift(
        reduced=reduced,
        prefactor=pref,
        si_value=pref * reduced,
        regime=regime,
        parity=scenario.parity,
        field_kind=FieldKind.SCALAR,
        warning=warning,
    )


def scalar_resonance_energy(scenario: Scenario) -> EnergyShift:
    """Closed-form resonance shift, valid at every acceleration.

    The reduced value is -p * cos(omega0 * S) / sqrt(1 + zeta**2) with
    p the parity sign; the symmetric state is shifted down at small
    separation.  At zero acceleration this reproduces the inertial
    expression bit for bit.
    """
    scenario.require_field(FieldKind.SCALAR)
    geom = scenario_geometry(scenario)
    sign = -parity_sign(scenario.parity)
    reduced = sign * math.cos(geom.phase) / math.sqrt(geom.big_n)
    return _shift(scenario, reduced, geom.regime)


def scalar_inertial_limit(scenario: Scenario) -> EnergyShift:
    """Shift of the same pair at rest: -p * cos(omega0 * z / c).

    The scenario's acceleration is ignored.
    """
    scenario.require_field(FieldKind.SCALAR)
    geom = scenario_geometry(scenario)
    reduced = -parity_sign(scenario.parity) * math.cos(geom.theta)
    return _shift(scenario, reduced, Regime.INERTIAL)


def scalar_farzone_asymptote(scenario: Scenario) -> EnergyShift:
    """Leading behaviour for separations far beyond the crossover length.

    Reduced value -p * cos((theta/zeta) * ln(2*zeta)) / zeta, i.e. the
    shift falls off as 1/z**2 in SI terms and oscillates in ln(z).
    Requires acceleration > 0; below zeta = 1 the asymptote is not
    meaningful and the result carries a warning.
    """
    scenario.require_field(FieldKind.SCALAR)
    if scenario.acceleration <= 0.0:
        raise DomainError("far-zone asymptote requires a positive acceleration")
    geom = scenario_geometry(scenario)
    zeta = geom.zeta
    sign = -parity_sign(scenario.parity)
    reduced = sign * math.cos((geom.theta / zeta) * math.log(2.0 * zeta)) / zeta
    warning = None
    if zeta < 1.0:
        warning = f"far-zone asymptote evaluated at zeta = {zeta:.3g} < 1; expect O(1) error"
    return _shift(scenario, reduced, geom.regime, warning)
