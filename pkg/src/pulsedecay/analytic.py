"""First-order closed forms for a kicked, weakly driven two-level system.

The drive populates |e> from |g> with amplitude v and detuning delta.  A
train of instantaneous kicks (the net effect of ultrashort 2pi pulses on an
auxiliary transition) flips the sign of the |g> amplitude every tau.  One
cycle of two kicked intervals turns the free interference factor X(2*tau)
into X(tau)^2, and N cycles give the net probability

    p_pulsed = |v|^2 * tan^2(delta*tau/2) * sin^2(delta*tau*N) / (delta/2)^2
             = tan^2(delta*tau/2) * p_bare(t = 2*N*tau).

Internally everything uses the pole-free rational-trig rewrite
16*sin^4(delta*tau/2)/delta^2 * [sin^2(delta*tau*N)/sin^2(delta*tau)]; the
tan form appears only in ``suppression_factor``, which raises at its poles.
"""
from __future__ import annotations

import cmath
import math

from ._num import POLE_WINDOW, sinc
from .core import PulseSchedule, TwoLevelDrive, x_factor

__all__ = [
    "PoleAtOddPi",
    "p_bare",
    "amplitude_pulsed",
    "p_pulsed",
    "suppression_factor",
]


class PoleAtOddPi(ValueError):
    """delta*tau sits at an odd multiple of pi, where tan^2(delta*tau/2) diverges."""


def p_bare(drive: TwoLevelDrive, t: float) -> float:
    """Free transition probability |v|^2 sin^2(delta t/2)/(delta/2)^2 at time t.

    The delta -> 0 limit |v|^2 t^2 is taken through the sinc series, never
    through a 0/0 evaluation.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    half = 0.5 * drive.delta * t
    s = sinc(half)
    return abs(drive.v) ** 2 * (t * t) * (s * s)


def amplitude_pulsed(drive: TwoLevelDrive, sched: PulseSchedule) -> complex:
    """Transition amplitude after n_cycles kicked cycles, first order in v.

    Closed form of the cycle sum:

        i*v * X(tau)^2/(-i*delta) * sum_{p=0}^{N-1} exp(-2i*delta*tau*p - i*delta*t0)

    with the geometric sum evaluated as exp(-i*delta*tau*(N-1)) * sin(delta*tau*N)
    / sin(delta*tau) (pole-reduced near delta*tau = m*pi).  Exactly 0 at
    delta = 0, where X(tau) vanishes.
    """
    delta = drive.delta
    if delta == 0.0:
        return 0j
    tau, n = sched.tau, sched.n_cycles
    z = delta * tau
    # Same float path as p_bare(t=total_time) so |amplitude|^2 and p_pulsed agree.
    y = 0.5 * delta * sched.total_time()

    sz = math.sin(z)
    if abs(sz) >= POLE_WINDOW:
        ratio = math.sin(y) / sz
    else:
        m = round(z / math.pi)
        r = z - m * math.pi
        sign = -1.0 if (m * (n - 1)) % 2 else 1.0
        ratio = sign * n * sinc(n * r) / sinc(r)

    geom = cmath.exp(-1j * z * (n - 1)) * ratio
    prefactor = 1j * drive.v * x_factor(delta, tau) ** 2 / (-1j * delta)
    return prefactor * geom * cmath.exp(-1j * delta * sched.t_start)


def p_pulsed(drive: TwoLevelDrive, sched: PulseSchedule) -> float:
    """Net kicked transition probability at the end of the train (pole-free form).

    Equals |v|^2 tan^2(delta*tau/2) sin^2(delta*tau*N)/(delta/2)^2 wherever the
    tan form is defined, and stays finite at delta*tau = m*pi via the Fejer
    bracket limit N^2.
    """
    tau, n = sched.tau, sched.n_cycles
    x = 0.5 * drive.delta * tau
    y = 0.5 * drive.delta * sched.total_time()

    s2x = math.sin(2.0 * x)
    if abs(s2x) >= POLE_WINDOW:
        bracket = (math.sin(y) / s2x) ** 2
    else:
        m = round(2.0 * x / math.pi)
        r = 2.0 * x - m * math.pi
        bracket = (n * sinc(n * r) / sinc(r)) ** 2

    sx = math.sin(x)
    # 16 sin^4(x)/delta^2 == 4 tau^2 sin^2(x) sinc^2(x), finite at delta = 0.
    return abs(drive.v) ** 2 * 4.0 * tau * tau * (sx * sx) * sinc(x) ** 2 * bracket


def suppression_factor(delta: float, tau: float) -> float:
    """Ratio p_pulsed/p_bare at equal total time: tan^2(delta*tau/2).

    Raises PoleAtOddPi where delta*tau is an odd multiple of pi and the ratio
    diverges.
    """
    half = 0.5 * delta * tau
    if abs(math.cos(half)) < 1e-9:
        raise PoleAtOddPi(
            f"delta*tau = {delta * tau!r} is at an odd multiple of pi; "
            "the suppression factor diverges there"
        )
    return math.tan(half) ** 2
