"""Exponential expansion of the centrifugal barrier about the well minimum.

Replacing l(l+1)/r^2 by a three-term series in y = exp(-b(r-re)) makes the
rotating problem solvable in closed form. The coefficients are fixed by
matching value, slope and curvature of (re/r)^2 at r = re.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .units import MoleculeParams


@dataclass(frozen=True)
class PekerisCoeffs:
    """Expansion coefficients for one value of nu = b*re."""

    D0: float
    D1: float
    D2: float
    nu: float


def pekeris_coeffs(nu: float) -> PekerisCoeffs:
    """Coefficients D0 = 1 - 3/nu + 3/nu^2, D1 = 4/nu - 6/nu^2, D2 = -1/nu + 3/nu^2."""
    if not nu > 0:
        raise ValueError(f"nu must be positive, got {nu!r}")
    return PekerisCoeffs(
        D0=1.0 - 3.0 / nu + 3.0 / nu**2,
        D1=4.0 / nu - 6.0 / nu**2,
        D2=-1.0 / nu + 3.0 / nu**2,
        nu=nu,
    )


def rotational_potential_at(
    c: PekerisCoeffs,
    l: int,
    p: MoleculeParams,
    r,
    mode: str = "pekeris",
):
    """Centrifugal potential at r in eV.

    mode="pekeris": B0(l)*(D0 + D1*y + D2*y^2) with y = exp(-b(r-re));
    mode="exact":   E0*l*(l+1)*(re/r)^2. Both agree at r = re.
    """
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    b0 = p.B0(l)
    if mode == "pekeris":
        y = np.exp(-p.b * (r - p.re))
        return b0 * (c.D0 + c.D1 * y + c.D2 * y * y)
    if mode == "exact":
        return b0 * (p.re / r) ** 2
    raise ValueError(f"mode must be 'pekeris' or 'exact', got {mode!r}")
