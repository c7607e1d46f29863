"""Shared domain types and unit conventions.

Everything is dimensionless. Each run declares which frequency scale is 1:
Gamma = 1 for structured-bath runs, omega_eg = 1 for free-space runs. Times
and detunings are expressed in the corresponding reduced units.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

__all__ = [
    "PulseSchedule",
    "TwoLevelDrive",
    "Lorentzian",
    "Exponential",
    "FreeSpaceCubic",
    "BathModel",
    "UnsupportedModel",
    "SweepRow",
    "SweepResult",
    "x_factor",
    "round12",
    "make_row",
]


class UnsupportedModel(ValueError):
    """The requested operation is not defined for this bath model."""


@dataclass(frozen=True)
class PulseSchedule:
    """Geometry of a 2pi-pulse train.

    The total evolution time is 2 * n_cycles * tau, with an instantaneous
    phase-flip kick at t_start + k*tau for k = 1..2*n_cycles (the final kick
    at the end of the run is included; it only flips a global sign).
    """

    tau: float
    n_cycles: int
    t_start: float = 0.0

    def __post_init__(self) -> None:
        if not self.tau > 0:
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if self.n_cycles < 1 or int(self.n_cycles) != self.n_cycles:
            raise ValueError(f"n_cycles must be an integer >= 1, got {self.n_cycles}")

    def total_time(self) -> float:
        return (2 * self.n_cycles) * self.tau

    def kick_times(self) -> np.ndarray:
        k = np.arange(1, 2 * self.n_cycles + 1)
        return self.t_start + k * self.tau


@dataclass(frozen=True)
class TwoLevelDrive:
    """Weak off-resonant perturbation coupling |g> to |e>.

    v is the (complex) coupling amplitude, delta the detuning of the drive
    from the transition, both in rad/time.
    """

    v: complex
    delta: float

    def is_perturbative(self, total_time: float, threshold: float = 0.1) -> bool:
        """First-order treatment is trusted when |v| * T stays below threshold."""
        return abs(self.v) * total_time <= threshold


@dataclass(frozen=True)
class Lorentzian:
    """1-D structured vacuum, rho(x) = rho0*Gamma/pi / (x^2 + Gamma^2)."""

    rho0: float
    gamma: float

    def __post_init__(self) -> None:
        _require_positive(rho0=self.rho0, gamma=self.gamma)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        return self.rho0 * self.gamma / math.pi / (x * x + self.gamma**2)


@dataclass(frozen=True)
class Exponential:
    """1-D structured vacuum, rho(x) = rho0/(2*Gamma) * exp(-|x|/Gamma)."""

    rho0: float
    gamma: float

    def __post_init__(self) -> None:
        _require_positive(rho0=self.rho0, gamma=self.gamma)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        return self.rho0 / (2.0 * self.gamma) * np.exp(-np.abs(x) / self.gamma)


@dataclass(frozen=True)
class FreeSpaceCubic:
    """Free-space mode weight (x+1)^3 on x in [-1, cutoff], zero outside.

    Here x = (omega - omega_eg)/omega_eg; the hard lower bound -1 is the
    physical zero-frequency edge.
    """

    cutoff: float = 1.0

    def __post_init__(self) -> None:
        _require_positive(cutoff=self.cutoff)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        w = (x + 1.0) ** 3
        return np.where((x >= -1.0) & (x <= self.cutoff), w, 0.0)


BathModel = Union[Lorentzian, Exponential, FreeSpaceCubic]


def _require_positive(**fields: float) -> None:
    for name, value in fields.items():
        if not value > 0:
            raise ValueError(f"{name} must be > 0, got {value}")


def x_factor(delta: float, t: float) -> complex:
    """Single-interval interference factor X(t) = exp(-i*delta*t) - 1.

    Evaluated as -2*sin(y/2)*(sin(y/2) + i*cos(y/2)) with y = delta*t, which
    is the same quantity without the catastrophic cancellation of the direct
    difference near delta*t = 2*pi*k.  |X|^2 = 4*sin^2(delta*t/2).
    """
    h = 0.5 * delta * t
    s, c = math.sin(h), math.cos(h)
    return complex(-2.0 * s * s, -2.0 * s * c)


def round12(value: float) -> float:
    """Round to 12 significant digits (the CSV wire precision).

    Sweep values are rounded at construction so that a written file parses
    back to bit-identical rows.
    """
    if math.isnan(value) or math.isinf(value):
        return value
    return float(f"{value:.12g}")


@dataclass(frozen=True)
class SweepRow:
    """One tabulated point: ratio = p_pulsed/p_bare, NaN when p_bare is 0."""

    param: float
    p_pulsed: float
    p_bare: float
    ratio: float
    extras: tuple[float, ...] = ()


def make_row(param: float, p_pulsed: float, p_bare: float,
             extras: tuple[float, ...] = ()) -> SweepRow:
    """Build a SweepRow with wire-precision values and the ratio rule applied."""
    pp = round12(p_pulsed)
    pb = round12(p_bare)
    ratio = round12(pp / pb) if pb > 0 else math.nan
    return SweepRow(round12(param), pp, pb, ratio,
                    tuple(round12(e) for e in extras))


@dataclass(frozen=True)
class SweepResult:
    """Ordered sweep rows plus the resolved run parameters that produced them."""

    rows: tuple[SweepRow, ...]
    metadata: dict[str, str] = field(default_factory=dict)

    def column(self, name: str) -> list[float]:
        return [getattr(r, name) for r in self.rows]
