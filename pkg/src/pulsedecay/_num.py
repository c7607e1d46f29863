"""Small numeric helpers shared by the closed-form and quadrature layers."""
from __future__ import annotations

import math

import numpy as np

# Below this argument the sin(y)/y series is used (4th-order, error ~ y^6/5040).
TAYLOR_CUT = 1e-6
# |sin z| below this switches Dirichlet-kernel ratios to the pole-reduced form.
POLE_WINDOW = 1e-2


def sinc(y: float) -> float:
    """sin(y)/y with a series fallback near y = 0 (not the numpy pi-scaled sinc)."""
    if abs(y) < TAYLOR_CUT:
        y2 = y * y
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0
    return math.sin(y) / y


def sinc_arr(y: np.ndarray) -> np.ndarray:
    """Vectorized sin(y)/y with the same series fallback as ``sinc``."""
    y = np.asarray(y, dtype=float)
    small = np.abs(y) < TAYLOR_CUT
    safe = np.where(small, 1.0, y)
    out = np.sin(safe) / safe
    y2 = y * y
    return np.where(small, 1.0 - y2 / 6.0 + y2 * y2 / 120.0, out)


def dirichlet_ratio_sq(z: np.ndarray, n: int) -> np.ndarray:
    """Fejer-kernel-like bracket sin^2(n z)/sin^2(z), finite everywhere.

    Away from z = m*pi the ratio is evaluated directly.  Inside the pole
    window it is reduced with z = m*pi + r, where the identity
    sin(n z)/sin(z) = +/- n * sinc(n r)/sinc(r) removes the 0/0; the limit at
    r = 0 is exactly n^2.
    """
    z = np.asarray(z, dtype=float)
    sz = np.sin(z)
    near = np.abs(sz) < POLE_WINDOW

    direct = (np.sin(float(n) * z) / np.where(near, 1.0, sz)) ** 2

    r = z - np.round(z / math.pi) * math.pi
    reduced = (float(n) * sinc_arr(float(n) * r) / sinc_arr(r)) ** 2

    return np.where(near, reduced, direct)
