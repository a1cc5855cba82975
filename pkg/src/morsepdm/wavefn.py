"""Radial wave functions of the bound levels.

For a varying mass the reduced radial function is

    psi(r) ~ exp(-b*x*(r-re)) * (1 - eps*y)^((S-1)/2) * F(-n, n+2x+S+1; 2x+1; eps*y)

with y = exp(-b(r-re)), x the level variable, S the inner-edge exponent and
F a terminating hypergeometric sum (a Jacobi polynomial in disguise). At
eps = 0 the solution collapses to the familiar generalized-Laguerre form in
the variable 2*sqrt(gamma1)*y. Normalization is by quadrature; the printed
closed-form normalization series is retained only as a logged diagnostic
because it cannot be trusted as transcribed.

Profiles are evaluated with logarithmic prefactors: the bare factors
overflow double precision near the inner wall for heavy molecules.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre

from .errors import (
    ComplexExponentError,
    ConstantMassError,
    InvalidParameterError,
    SingularMassError,
    UnboundLevelError,
)
from .spectrum import SpectrumInputs, eps_nl, gamma1, gamma2, n_max
from .units import MoleculeParams

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WaveParams:
    """Everything needed to evaluate one varying-mass level profile."""

    eps_nl: float
    S: float
    epsilon: float
    b: float
    re: float
    n: int


@dataclass(frozen=True)
class RadialSolution:
    """A sampled, normalized reduced radial function."""

    grid: np.ndarray
    values: np.ndarray
    node_count: int
    norm: float


def exponent_S(gamma1: float, gamma2: float, eps_nl: float, epsilon: float) -> float:
    """Inner-edge exponent S = sqrt(1 + 4*eps_nl^2 + (4/eps)(gamma1/eps - gamma2)).

    The wave function behaves like (1 - eps*y)^((S+1)/2) at the mass
    singularity before the sqrt(m) factor is stripped.
    """
    if epsilon == 0.0:
        raise ConstantMassError("S is undefined at eps = 0; use the Laguerre branch")
    radicand = 1.0 + 4.0 * eps_nl**2 + (4.0 / epsilon) * (gamma1 / epsilon - gamma2)
    if radicand < 0.0:
        raise ComplexExponentError(
            f"edge exponent radicand {radicand!r} < 0; no real solution at this level"
        )
    return math.sqrt(radicand)


def jacobi_P(n: int, p: float, q: float, x):
    """Jacobi polynomial P_n^(p,q)(x) by the three-term recurrence."""
    if n < 0 or n != int(n):
        raise InvalidParameterError(f"degree must be a non-negative integer, got {n!r}")
    if p <= -1.0 or q <= -1.0:
        raise InvalidParameterError(f"parameters must exceed -1, got p={p!r}, q={q!r}")
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 0.5 * (p - q) + 0.5 * (p + q + 2.0) * x
    for k in range(2, n + 1):
        a1 = 2.0 * k * (k + p + q) * (2.0 * k + p + q - 2.0)
        a2 = (2.0 * k + p + q - 1.0) * ((2.0 * k + p + q) * (2.0 * k + p + q - 2.0) * x + p * p - q * q)
        a3 = 2.0 * (k + p - 1.0) * (k + q - 1.0) * (2.0 * k + p + q)
        p0, p1 = p1, (a2 * p1 - a3 * p0) / a1
    return p1


def hyp2F1_terminating(n: int, bparam: float, cparam: float, zarg):
    """Terminating series 2F1(-n, b; c; z) as a finite sum of n+1 terms."""
    if n < 0 or n != int(n):
        raise InvalidParameterError(f"degree must be a non-negative integer, got {n!r}")
    if cparam <= 0.0 and cparam == round(cparam):
        raise InvalidParameterError(f"lower parameter must not be a non-positive integer, got {cparam!r}")
    z = np.asarray(zarg, dtype=float)
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(n):
        term = term * (((-n + k) * (bparam + k)) / ((cparam + k) * (k + 1.0))) * z
        total = total + term
    return total


def wave_params(inp: SpectrumInputs, n: int) -> WaveParams:
    """Level variable and edge exponent for a bound varying-mass level."""
    if inp.epsilon == 0.0:
        raise ConstantMassError("wave_params requires eps > 0; use the Laguerre branch")
    x = eps_nl(inp, n)
    if x <= 0.0:
        raise UnboundLevelError(
            f"{inp.molecule.name}: level n={n}, l={inp.l} is unbound "
            f"(eps_nl = {x:.6g} <= 0, n_max = {n_max(inp)})"
        )
    S = exponent_S(gamma1(inp), gamma2(inp), x, inp.epsilon)
    return WaveParams(eps_nl=x, S=S, epsilon=inp.epsilon, b=inp.molecule.b, re=inp.molecule.re, n=n)


def default_grid(mol: MoleculeParams, epsilon: float, n_points: int = 4001) -> np.ndarray:
    """Sampling grid [max(1e-3, re-5/b), re+40/b], denser near the minimum.

    Half the points are uniform in y = exp(-b(r-re)) (which concentrates
    them around and inside re), half uniform in r for the long tail. With a
    varying mass the grid starts just outside the singular radius.
    """
    b, re_ = mol.b, mol.re
    lo = max(1e-3, re_ - 5.0 / b)
    if epsilon > 0.0:
        r_sing = re_ - math.log(1.0 / epsilon) / b
        lo = max(lo, r_sing + 1e-6 / b)
    hi = re_ + 40.0 / b
    n_half = n_points // 2
    z = np.linspace(math.exp(-b * (hi - re_)), math.exp(-b * (lo - re_)), n_half)
    r_z = re_ - np.log(z) / b
    r_lin = np.linspace(lo, hi, n_points - n_half)
    return np.unique(np.concatenate([r_z, r_lin]))


def _pdm_log_prefactor(wp: WaveParams, r: np.ndarray, exponent_shift: float) -> np.ndarray:
    y = np.exp(-wp.b * (r - wp.re))
    t = wp.epsilon * y
    if np.any(t >= 1.0):
        raise SingularMassError("grid extends to or beyond the mass singularity")
    return -wp.b * wp.eps_nl * (r - wp.re) + 0.5 * (wp.S + exponent_shift) * np.log1p(-t)


def _pdm_raw(wp: WaveParams, r, exponent_shift: float = -1.0) -> np.ndarray:
    """Unnormalized profile; shift -1 gives psi, +1 gives phi = psi/sqrt(m)-shape."""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    y = np.exp(-wp.b * (r - wp.re))
    series = hyp2F1_terminating(
        wp.n, wp.n + 2.0 * wp.eps_nl + wp.S + 1.0, 2.0 * wp.eps_nl + 1.0, wp.epsilon * y
    )
    with np.errstate(under="ignore"):
        pref = np.exp(_pdm_log_prefactor(wp, r, exponent_shift))
    return pref * series


def _constmass_raw(inp: SpectrumInputs, n: int, x_level: float, r) -> np.ndarray:
    r = np.atleast_1d(np.asarray(r, dtype=float))
    mol = inp.molecule
    xvar = 2.0 * math.sqrt(gamma1(inp)) * np.exp(-mol.b * (r - mol.re))
    with np.errstate(under="ignore"):
        pref = np.exp(x_level * np.log(xvar) - 0.5 * xvar)
    return pref * eval_genlaguerre(n, 2.0 * x_level, xvar)


def count_nodes(values: np.ndarray) -> int:
    """Interior sign changes, ignoring exactly-zero (underflowed) samples."""
    s = np.sign(values)
    s = s[s != 0]
    if s.size < 2:
        return 0
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _composite_simpson(fn, lo: float, hi: float, n_panels: int) -> float:
    r = np.linspace(lo, hi, 2 * n_panels + 1)
    v = fn(r)
    h = (hi - lo) / (2 * n_panels)
    return h / 3.0 * (v[0] + v[-1] + 4.0 * v[1:-1:2].sum() + 2.0 * v[2:-1:2].sum())


def quadrature_norm(fn, lo: float, hi: float, rtol: float = 1e-9) -> float:
    """Adaptive composite Simpson of fn on [lo, hi], doubled until stable."""
    n_panels = 2048
    prev = _composite_simpson(fn, lo, hi, n_panels)
    for _ in range(10):
        n_panels *= 2
        cur = _composite_simpson(fn, lo, hi, n_panels)
        if abs(cur - prev) <= rtol * abs(cur):
            return cur
        prev = cur
    warnings.warn("quadrature normalization did not reach the requested tolerance")
    return prev


def _finalize(grid: np.ndarray, raw_fn) -> RadialSolution:
    lo, hi = float(grid[0]), float(grid[-1])
    integral = quadrature_norm(lambda r: raw_fn(r) ** 2, lo, hi)
    scale = 1.0 / math.sqrt(integral)
    values = scale * raw_fn(grid)
    # independent check of the unit norm on a dense uniform grid
    dense = np.linspace(lo, hi, 65537)
    norm = float(np.trapezoid((scale * raw_fn(dense)) ** 2, dense))
    return RadialSolution(grid=grid, values=values, node_count=count_nodes(values), norm=norm)


def psi_pdm(inp: SpectrumInputs, n: int, grid: np.ndarray | None = None) -> RadialSolution:
    """Normalized varying-mass radial function of bound level (n, l)."""
    if not 0.0 < inp.epsilon < 1.0:
        raise ConstantMassError("psi_pdm requires 0 < eps < 1; use psi_constmass at eps = 0")
    wp = wave_params(inp, n)
    if grid is None:
        grid = default_grid(inp.molecule, inp.epsilon)
    return _finalize(np.asarray(grid, dtype=float), lambda r: _pdm_raw(wp, r, -1.0))


def phi_pdm(inp: SpectrumInputs, n: int, grid: np.ndarray | None = None) -> RadialSolution:
    """Companion solution of the derivative-free equation; psi = phi/(1-eps*y).

    Exposed so the sqrt(mass) relation between the two routes can be
    verified pointwise.
    """
    if not 0.0 < inp.epsilon < 1.0:
        raise ConstantMassError("phi_pdm requires 0 < eps < 1")
    wp = wave_params(inp, n)
    if grid is None:
        grid = default_grid(inp.molecule, inp.epsilon)
    return _finalize(np.asarray(grid, dtype=float), lambda r: _pdm_raw(wp, r, +1.0))


def psi_constmass(inp: SpectrumInputs, n: int, grid: np.ndarray | None = None) -> RadialSolution:
    """Normalized constant-mass radial function (generalized Laguerre form)."""
    if inp.epsilon != 0.0:
        raise ValueError("psi_constmass requires eps = 0")
    x = eps_nl(inp, n)
    if x <= 0.0:
        raise UnboundLevelError(
            f"{inp.molecule.name}: level n={n}, l={inp.l} is unbound "
            f"(eps_nl = {x:.6g} <= 0, n_max = {n_max(inp)})"
        )
    if grid is None:
        grid = default_grid(inp.molecule, 0.0)
    return _finalize(np.asarray(grid, dtype=float), lambda r: _constmass_raw(inp, n, x, r))


def _hyp3F2_unit(a1: float, a2: float, a3: float, b1: float, b2: float, terms: int) -> float:
    total = 1.0
    term = 1.0
    for j in range(terms):
        term *= (a1 + j) * (a2 + j) * (a3 + j) / ((b1 + j) * (b2 + j) * (j + 1.0))
        total += term
        if term == 0.0:
            break
    return total


def normalization_series_check(
    wp: WaveParams, gamma1_value: float, gamma2_value: float
) -> float:
    """Evaluate the printed closed-form normalization series and log its
    ratio to the quadrature norm.

    The series as printed contains suspect pieces (a Gamma(n+m) with m the
    summation index, an unmatched second lower parameter of the 3F2), so the
    result is diagnostic only: it is logged, never asserted. Returns the
    ratio series/quadrature, or NaN with a warning when the series is
    undefined or non-positive.
    """
    s_check = exponent_S(gamma1_value, gamma2_value, wp.eps_nl, wp.epsilon)
    if not math.isclose(s_check, wp.S, rel_tol=1e-9):
        warnings.warn(
            f"edge exponent from the supplied coefficients ({s_check!r}) does not "
            f"match the wave parameters ({wp.S!r})"
        )
    n, x, S = wp.n, wp.eps_nl, wp.S
    if n == 0:
        warnings.warn("normalization series is undefined at n = 0 (contains Gamma(0))")
        return float("nan")
    lg = math.lgamma
    # terms in log space; signs tracked separately
    logs: list[float] = []
    signs: list[float] = []
    m_cap = 400
    best = -math.inf
    for m in range(m_cap):
        f_m = _hyp3F2_unit(
            2.0 * x + m, -float(n), n + 2.0 * x + S + 1.0,
            2.0 * x + m + S + 2.0, 2.0 * x + 1.0, terms=n,
        )
        if f_m == 0.0:
            continue
        lnum = lg(n + 2.0 * x + S + 1.0 + m) - lg(n + 2.0 * x + S + 1.0) + lg(n + m)
        lden = lg(m + 1.0) + lg(m + 2.0 * x + 1.0) + lg(m + 2.0 * x + S + 2.0)
        lterm = lnum - lden + math.log(abs(f_m))
        logs.append(lterm)
        signs.append(math.copysign(1.0, f_m) * (-1.0) ** m)
        best = max(best, lterm)
        if m > 10 and lterm < best - 45.0:
            break
    if not logs:
        warnings.warn("normalization series produced no finite terms")
        return float("nan")
    scaled = sum(s * math.exp(v - best) for s, v in zip(signs, logs))
    if scaled <= 0.0:
        warnings.warn("normalization series sum is non-positive; diagnostic only")
        return float("nan")
    log_pref = math.log(n) + lg(S + 2.0) - math.log(2.0 * wp.b) - lg(n + 2.0 * x + 1.0)
    log_bracket = log_pref + best + math.log(scaled)
    log_series = -0.5 * log_bracket - lg(2.0 * x + 1.0)
    # quadrature constant for the same unnormalized profile
    lo = max(1e-3, wp.re - 5.0 / wp.b)
    if wp.epsilon > 0.0:
        lo = max(lo, wp.re - math.log(1.0 / wp.epsilon) / wp.b + 1e-6 / wp.b)
    hi = wp.re + 40.0 / wp.b
    integral = quadrature_norm(lambda r: _pdm_raw(wp, r, -1.0) ** 2, lo, hi)
    ratio = math.exp(log_series + 0.5 * math.log(integral))
    log.info(
        "normalization diagnostic n=%d: series constant exp(%.6g), quadrature "
        "constant exp(%.6g), ratio %.6g",
        n, log_series, -0.5 * math.log(integral), ratio,
    )
    if not math.isfinite(ratio):
        warnings.warn("normalization series diverged or overflowed")
    return ratio
