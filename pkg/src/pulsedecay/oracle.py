"""Brute-force time-domain propagation with instantaneous phase-flip kicks.

This is the independent verification route for the closed forms and the
quadrature layer: it integrates the interaction-picture equations of motion
exactly as written (explicit exp(+/- i delta t) phases, no rotating-frame
transformation) with a fixed-step 4th-order Runge-Kutta scheme.  The step is
locked to a commensurate division of tau so every kick instant is hit
exactly; kick-time jitter would otherwise be a first-order error source.

A kick multiplies the ground-sector amplitude(s) by -1: c_g in the driven
two-level case, every photon amplitude c_k in the continuum case.  The
excited amplitude is never touched.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import BathModel, PulseSchedule, TwoLevelDrive, UnsupportedModel

__all__ = [
    "StepTooCoarse",
    "NonPerturbative",
    "DiscretizedContinuum",
    "KickedState",
    "discretize",
    "evolve_two_level",
    "evolve_continuum",
    "suggested_step",
]

# Emission beyond this is no longer comparable to the first-order results.
PERTURBATIVE_EMISSION_LIMIT = 1e-2


class StepTooCoarse(ValueError):
    """The requested step violates dt <= tau/100 or dt * max_rate <= 1e-2."""


class NonPerturbative(RuntimeError):
    """Total emission left the perturbative window during the run."""


@dataclass(frozen=True, eq=False)
class DiscretizedContinuum:
    """Uniformly sampled continuum: mode detunings delta_k and couplings g_k.

    Couplings satisfy |g_k|^2 = rho(x_k) * dx so that sums over modes
    approximate the corresponding density integrals.
    """

    detunings: np.ndarray
    couplings: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.detunings, dtype=float)
        g = np.asarray(self.couplings, dtype=float)
        if d.ndim != 1 or d.shape != g.shape or d.size < 2:
            raise ValueError("detunings and couplings must be equal-length 1-D, >= 2 modes")
        if np.any(g < 0):
            raise ValueError("couplings must be nonnegative")
        object.__setattr__(self, "detunings", d)
        object.__setattr__(self, "couplings", g)

    def coupling_weight(self) -> float:
        """Sum of |g_k|^2, the discrete analogue of the density integral."""
        return float(np.sum(self.couplings**2))


@dataclass
class KickedState:
    """Propagated amplitudes: c_e plus either c_g or the mode amplitudes."""

    c_e: complex
    c_g: complex | None
    c_modes: np.ndarray | None
    t: float

    def norm(self) -> float:
        n = abs(self.c_e) ** 2
        if self.c_g is not None:
            n += abs(self.c_g) ** 2
        if self.c_modes is not None:
            n += float(np.sum(np.abs(self.c_modes) ** 2))
        return n

    def emission(self) -> float:
        if self.c_modes is None:
            raise ValueError("emission is defined for continuum states only")
        return float(np.sum(np.abs(self.c_modes) ** 2))


def discretize(model: BathModel, n_modes: int,
               support: tuple[float, float]) -> DiscretizedContinuum:
    """Midpoint-sample a bath density on a uniform grid over a finite support."""
    a, b = support
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise UnsupportedModel(f"support must be a finite interval, got {support}")
    if n_modes < 2:
        raise ValueError("n_modes must be >= 2")
    dx = (b - a) / n_modes
    x = a + (np.arange(n_modes) + 0.5) * dx
    g = np.sqrt(model.density(x) * dx)
    return DiscretizedContinuum(x, g)


def suggested_step(sched: PulseSchedule, max_rate: float) -> float:
    """Largest step satisfying the coarseness preconditions for this run."""
    dt = sched.tau / 100.0
    if max_rate > 0:
        dt = min(dt, 1e-2 / max_rate)
    return dt


def _check_step(dt: float, tau: float, max_rate: float) -> int:
    if not dt > 0:
        raise StepTooCoarse(f"dt must be > 0, got {dt}")
    slack = 1.0 + 1e-12
    if dt > tau / 100.0 * slack:
        raise StepTooCoarse(f"dt = {dt} exceeds tau/100 = {tau / 100.0}")
    if dt * max_rate > 1e-2 * slack:
        raise StepTooCoarse(
            f"dt * max_rate = {dt * max_rate} exceeds 1e-2; refine the step"
        )
    # Lock to a commensurate division so kicks land exactly on step boundaries.
    return int(math.ceil(tau / dt - 1e-9))


def evolve_two_level(drive: TwoLevelDrive, sched: PulseSchedule,
                     with_kicks: bool, dt: float) -> KickedState:
    """Propagate c_g = 1, c_e = 0 through the kicked drive; RK4 fixed step.

    Equations of motion (interaction picture):
        dc_e/dt = -i v   c_g exp(-i delta t)
        dc_g/dt = -i v^* c_e exp(+i delta t)
    """
    n_sub = _check_step(dt, sched.tau, max(abs(drive.v), abs(drive.delta)))
    h = sched.tau / n_sub
    v = complex(drive.v)
    vc = v.conjugate()
    delta = drive.delta

    def rhs(t: float, ce: complex, cg: complex) -> tuple[complex, complex]:
        ph = cmath.exp(-1j * delta * t)
        return -1j * v * cg * ph, -1j * vc * ce * ph.conjugate()

    ce, cg = 0j, 1.0 + 0j
    for k in range(2 * sched.n_cycles):
        base = sched.t_start + k * sched.tau
        for i in range(n_sub):
            t = base + i * h
            k1e, k1g = rhs(t, ce, cg)
            k2e, k2g = rhs(t + 0.5 * h, ce + 0.5 * h * k1e, cg + 0.5 * h * k1g)
            k3e, k3g = rhs(t + 0.5 * h, ce + 0.5 * h * k2e, cg + 0.5 * h * k2g)
            k4e, k4g = rhs(t + h, ce + h * k3e, cg + h * k3g)
            ce += h / 6.0 * (k1e + 2.0 * (k2e + k3e) + k4e)
            cg += h / 6.0 * (k1g + 2.0 * (k2g + k3g) + k4g)
        if with_kicks:
            cg = -cg
    return KickedState(ce, cg, None, sched.t_start + sched.total_time())


def evolve_continuum(modes: DiscretizedContinuum, sched: PulseSchedule,
                     with_kicks: bool, dt: float,
                     coupling_scale: float = 1.0) -> KickedState:
    """Propagate c_e = 1 through the single-excitation continuum dynamics.

        dc_e/dt = -i sum_k g_k c_k exp(-i delta_k t)
        dc_k/dt = -i g_k c_e exp(+i delta_k t)

    Kicks flip the sign of every c_k at t = t_start + k*tau.  Raises
    NonPerturbative when the final emission exceeds 1e-2 (beyond first-order
    comparability).
    """
    dl = modes.detunings
    g = modes.couplings * coupling_scale
    max_rate = float(np.max(np.abs(dl))) if dl.size else 0.0
    n_sub = _check_step(dt, sched.tau, max_rate)
    h = sched.tau / n_sub

    def rhs(t: float, ce: complex, ck: np.ndarray):
        ph = np.exp(-1j * dl * t)
        dce = -1j * np.dot(g, ck * ph)
        dck = -1j * g * ce * np.conj(ph)
        return dce, dck

    ce = 1.0 + 0j
    ck = np.zeros(dl.size, dtype=complex)
    for k in range(2 * sched.n_cycles):
        base = sched.t_start + k * sched.tau
        for i in range(n_sub):
            t = base + i * h
            k1e, k1 = rhs(t, ce, ck)
            k2e, k2 = rhs(t + 0.5 * h, ce + 0.5 * h * k1e, ck + 0.5 * h * k1)
            k3e, k3 = rhs(t + 0.5 * h, ce + 0.5 * h * k2e, ck + 0.5 * h * k2)
            k4e, k4 = rhs(t + h, ce + h * k3e, ck + h * k3)
            ce += h / 6.0 * (k1e + 2.0 * (k2e + k3e) + k4e)
            ck += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4)
        if with_kicks:
            ck = -ck
    state = KickedState(ce, None, ck, sched.t_start + sched.total_time())
    if state.emission() > PERTURBATIVE_EMISSION_LIMIT:
        raise NonPerturbative(
            f"emission {state.emission():.3e} exceeds {PERTURBATIVE_EMISSION_LIMIT}; "
            "reduce coupling_scale for first-order comparisons"
        )
    return state
