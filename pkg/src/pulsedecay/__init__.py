"""Suppression of decay into a continuum by trains of instantaneous 2pi-pulse kicks.

Layers:

* ``core``      shared value types and unit conventions
* ``analytic``  first-order closed forms for the kicked two-level system
* ``continuum`` emission integrals over structured vacua, oscillatory quadrature
* ``oracle``    brute-force time-domain propagator used for cross-validation
* ``cli``       parameter sweeps and figure-data generation (``pulsedecay`` command)
"""
from .analytic import PoleAtOddPi, amplitude_pulsed, p_bare, p_pulsed, suppression_factor
from .continuum import (
    QuadratureNonConvergence,
    QuadratureSpec,
    einstein_a,
    emission_rate,
    fejer_bracket,
    free_space_I,
    free_space_I0,
    integrand_pulsed,
    integrate,
    p_emission_bare,
    p_emission_pulsed,
    truncated_support,
)
from .core import (
    BathModel,
    Exponential,
    FreeSpaceCubic,
    Lorentzian,
    PulseSchedule,
    SweepResult,
    SweepRow,
    TwoLevelDrive,
    UnsupportedModel,
    make_row,
    round12,
    x_factor,
)
from .oracle import (
    DiscretizedContinuum,
    KickedState,
    NonPerturbative,
    StepTooCoarse,
    discretize,
    evolve_continuum,
    evolve_two_level,
    suggested_step,
)

__version__ = "0.1.0"
