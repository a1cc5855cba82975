"""Independent shooting eigensolver for the transformed radial equation.

Integrates phi'' = f(r) phi with f = (2 m(r)/hbar^2)(U_eff - E) outward on a
uniform grid using the three-point O(h^6) update, counts interior sign
changes, and bisects on the node count to locate level n. The result is an
independent check on the closed-form spectrum: both routes are built from
the same effective potential but share no algebra beyond that.

Boundary handling. The energy window is anchored by a variational bound:
for any positive mass profile an eigenvalue must exceed min U_eff, so the
bisection floor is that minimum with a small margin. When the mass profile
is singular inside the physical domain the integration starts just outside
the singular radius, at the closest point where the stencil is stable at
the floor energy, and is seeded with the regular local power law there
(the analogue of the r^(l+1) seed at the centrifugal singularity).
Eigenvalues are refined by re-solving at half step; the difference between
the two passes is reported as the grid error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numba
import numpy as np

from .errors import NoSuchLevelError, SingularMassError
from .ordering import (
    MassProfile,
    OrderingScheme,
    a0_scale,
    reference_coupling_poly,
)
from .pekeris import pekeris_coeffs, rotational_potential_at
from .units import HBAR_C, MoleculeParams

#: Stencil stability bound: h^2 |f| / 12 must stay below this on the grid.
STENCIL_LIMIT = 0.7

#: Top of the bisection window (eV); just below the dissociation threshold.
ENERGY_CEILING = -1e-12


def morse_potential(mol: MoleculeParams, r):
    """Morse curve De*(y^2 - 2y), y = exp(-b(r-re)), in eV."""
    y = np.exp(-mol.b * (np.asarray(r, dtype=float) - mol.re))
    return mol.De * (y * y - 2.0 * y)


@dataclass(frozen=True)
class OracleProblem:
    """One eigenproblem: physics inputs plus a uniform integration grid."""

    molecule: MoleculeParams
    scheme: OrderingScheme
    epsilon: float
    l: int
    centrifugal_mode: str = "pekeris"
    r_min: float = 1e-3
    r_max: float = 0.0
    n_points: int = 40001
    auto_grid: bool = False

    def __post_init__(self) -> None:
        if self.centrifugal_mode not in ("pekeris", "exact"):
            raise ValueError(f"centrifugal_mode must be 'pekeris' or 'exact', got {self.centrifugal_mode!r}")
        if not 0.0 <= self.epsilon < 1.0:
            raise ValueError(f"epsilon must satisfy 0 <= eps < 1, got {self.epsilon!r}")
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if self.r_min <= 0:
            raise ValueError("r_min must be positive")
        mol = self.molecule
        if self.r_max < mol.re + 30.0 / mol.b:
            raise ValueError("r_max must be at least re + 30/b")
        if self.step > (self.r_max - self.r_min) / 20000.0:
            raise ValueError("step too coarse: need at least 20001 grid points")
        sing = self.singular_radius
        if sing is not None and sing >= self.r_min:
            raise SingularMassError(
                f"mass profile singular at r = {sing:.6g} inside the grid "
                f"[{self.r_min:.6g}, {self.r_max:.6g}]"
            )

    @property
    def step(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points - 1)

    @property
    def singular_radius(self) -> float | None:
        if self.epsilon == 0.0:
            return None
        return self.molecule.re - math.log(1.0 / self.epsilon) / self.molecule.b

    def profile(self) -> MassProfile:
        return MassProfile.from_molecule(self.molecule, self.epsilon)

    @classmethod
    def default(
        cls,
        molecule: MoleculeParams,
        scheme: OrderingScheme,
        epsilon: float,
        l: int,
        centrifugal_mode: str = "pekeris",
        n_points: int = 40001,
    ) -> "OracleProblem":
        """Problem with the default grid: [stable inner start, re + 40/b]."""
        r_max = molecule.re + 40.0 / molecule.b
        r_min = _default_r_min(molecule, scheme, epsilon, l, centrifugal_mode, r_max, n_points)
        return cls(
            molecule=molecule,
            scheme=scheme,
            epsilon=epsilon,
            l=l,
            centrifugal_mode=centrifugal_mode,
            r_min=r_min,
            r_max=r_max,
            n_points=n_points,
            auto_grid=True,
        )


@dataclass(frozen=True)
class OracleResult:
    """Converged eigenvalue with its self-consistency estimate."""

    n: int
    E: float
    converged: bool
    grid_error_estimate: float


def _u_eff(
    mol: MoleculeParams,
    scheme: OrderingScheme,
    epsilon: float,
    l: int,
    mode: str,
    r,
):
    """Effective potential: Morse + coupling terms + centrifugal (eV)."""
    prof = MassProfile.from_molecule(mol, epsilon)
    c1, c2 = reference_coupling_poly(scheme, prof)
    y = np.exp(-mol.b * (np.asarray(r, dtype=float) - mol.re))
    u = morse_potential(mol, r) + c1 * y + c2 * y * y
    if l > 0:
        u = u + rotational_potential_at(pekeris_coeffs(mol.nu), l, mol, r, mode)
    return u


def _u_eff_singular(mol, scheme, epsilon, l, mode) -> float:
    """U_eff evaluated at the singular radius (finite; only the mass diverges)."""
    prof = MassProfile.from_molecule(mol, epsilon)
    c1, c2 = reference_coupling_poly(scheme, prof)
    y = 1.0 / epsilon
    u = mol.De * (y * y - 2.0 * y) + c1 * y + c2 * y * y
    if l > 0:
        r_sing = mol.re - math.log(y) / mol.b
        d = pekeris_coeffs(mol.nu)
        if mode == "pekeris":
            u += mol.B0(l) * (d.D0 + d.D1 * y + d.D2 * y * y)
        else:
            u += mol.B0(l) * (mol.re / r_sing) ** 2
    return float(u)


def _mass_factor(mol: MoleculeParams, epsilon: float, r):
    """2 m(r) / hbar^2 in 1/(eV * angstrom^2)."""
    y = np.exp(-mol.b * (np.asarray(r, dtype=float) - mol.re))
    t = epsilon * y
    if np.any(t >= 1.0):
        raise SingularMassError("grid touches the mass singularity")
    return 2.0 * (mol.m0 / (1.0 - t) ** 2) / HBAR_C**2


def _default_r_min(mol, scheme, epsilon, l, mode, r_max, n_points) -> float:
    """Innermost start point with a stable stencil at the floor energy."""
    base = 1e-3
    r_sing = None
    if epsilon > 0.0:
        rs = mol.re - math.log(1.0 / epsilon) / mol.b
        if rs > 0.0:
            r_sing = rs
            h_est = (r_max - max(base, rs)) / (n_points - 1)
            base = max(base, rs + 3.0 * h_est)
    probe = np.linspace(base, mol.re, 8193)
    u = _u_eff(mol, scheme, epsilon, l, mode, probe)
    floor = _energy_floor(u)
    f = _mass_factor(mol, epsilon, probe) * (u - floor)
    h0 = (r_max - base) / (n_points - 1)
    bad = np.where(h0 * h0 * np.abs(f) / 12.0 > STENCIL_LIMIT)[0]
    if bad.size == 0:
        return base
    if bad.max() + 1 >= probe.size:
        raise SingularMassError(
            f"no stable integration start for {mol.name} at eps={epsilon}"
        )
    return float(probe[bad.max() + 1])


def _energy_floor(u: np.ndarray) -> float:
    """Variational floor: eigenvalues of phi'' = w(u-E)phi exceed min(u)."""
    umin = float(u.min())
    return umin - 0.05 * max(abs(umin), 1.0)


@lru_cache(maxsize=32)
def _assembled(p: OracleProblem):
    r = np.linspace(p.r_min, p.r_max, p.n_points)
    u = _u_eff(p.molecule, p.scheme, p.epsilon, p.l, p.centrifugal_mode, r)
    c = _mass_factor(p.molecule, p.epsilon, r)
    u_sing = None
    sing = p.singular_radius
    if sing is not None and (p.r_min - sing) < 0.5 / p.molecule.b:
        u_sing = _u_eff_singular(p.molecule, p.scheme, p.epsilon, p.l, p.centrifugal_mode)
    return r, u, c, sing, u_sing


def effective_rhs(p: OracleProblem, E: float):
    """The coefficient function f with phi'' = f(r) phi, as a callable of r."""
    def f(r):
        u = _u_eff(p.molecule, p.scheme, p.epsilon, p.l, p.centrifugal_mode, r)
        return _mass_factor(p.molecule, p.epsilon, r) * (u - E)
    return f


@numba.njit(cache=True)
def _numerov_kernel(f, h, y0, y1):  # pragma: no cover - compiled
    n = f.shape[0]
    c = h * h / 12.0
    am = 1.0 - c * f[0]
    a0 = 1.0 - c * f[1]
    prev = y0
    cur = y1
    nodes = 0
    for i in range(2, n):
        ap = 1.0 - c * f[i]
        nxt = ((12.0 - 10.0 * a0) * cur - am * prev) / ap
        if nxt * cur < 0.0:
            nodes += 1
        prev = cur
        cur = nxt
        am = a0
        a0 = ap
        if abs(cur) > 1e250:
            prev *= 1e-250
            cur *= 1e-250
    return cur, nodes


def _seed(p: OracleProblem, E: float, r0: float, h: float, sing, u_sing) -> tuple[float, float]:
    """Starting pair (phi0, phi1) for the outward integration.

    Regular inner boundary: phi(r_min) = 0 with a linear (or r^(l+1) for the
    exact centrifugal mode) second value. Singular inner boundary: the local
    regular power law (d/d0)^s with s from the indicial equation
    s(s-1) = (U_eff(sing) - E)/A0; falls back to the zero seed when the
    indicial exponent is complex.
    """
    if sing is not None and u_sing is not None:
        a0 = a0_scale(MassProfile.from_molecule(p.molecule, p.epsilon))
        cval = (u_sing - E) / a0
        disc = 1.0 + 4.0 * cval
        if disc > 0.0:
            s = 0.5 * (1.0 + math.sqrt(disc))
            d0 = r0 - sing
            return 1.0, math.exp(min(s * math.log1p(h / d0), 500.0))
    if p.centrifugal_mode == "exact" and p.l > 0:
        return 0.0, h ** (p.l + 1)
    return 0.0, h


def numerov_shoot(p: OracleProblem, E: float) -> tuple[float, int]:
    """Terminal value (up to positive rescaling) and interior node count."""
    r, u, c, sing, u_sing = _assembled(p)
    h = p.step
    f = np.ascontiguousarray(c * (u - E))
    y0, y1 = _seed(p, E, float(r[0]), h, sing, u_sing)
    return _numerov_kernel(f, h, y0, y1)


def _bisect_level(p: OracleProblem, n: int, tol: float) -> float:
    _, u, _, _, _ = _assembled(p)
    lo = _energy_floor(u)
    hi = ENERGY_CEILING
    _, count_hi = numerov_shoot(p, hi)
    if count_hi < n + 1:
        raise NoSuchLevelError(
            f"{p.molecule.name}: no level n={n} below E=0 "
            f"(node count reaches only {count_hi})"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        _, count = numerov_shoot(p, mid)
        if count >= n + 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _refined(p: OracleProblem) -> OracleProblem:
    n_fine = 2 * p.n_points - 1
    if p.auto_grid:
        return OracleProblem.default(
            p.molecule, p.scheme, p.epsilon, p.l, p.centrifugal_mode, n_points=n_fine
        )
    return replace(p, n_points=n_fine)


def solve_level(p: OracleProblem, n: int, tol: float = 1e-7) -> OracleResult:
    """Locate level n by node-count bisection, refined at half step.

    converged means the two passes agree within tol; their difference is the
    grid error estimate. The reported eigenvalue is from the finer pass.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    coarse = _bisect_level(p, n, tol)
    fine = _bisect_level(_refined(p), n, tol)
    err = abs(fine - coarse)
    return OracleResult(n=n, E=fine, converged=err <= tol, grid_error_estimate=err)
