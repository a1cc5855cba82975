"""Closed-form bound-state energies of the rotating Morse oscillator with a
position-dependent mass.

The spectral route is: build the dimensionless quadratic coefficients
(gamma1, gamma2) of the transformed equation, solve for the level variable
eps_nl, then invert E = B0(l)*D0 - A0*eps_nl^2. The mass-coupling terms in
gamma1/gamma2 follow the published-data convention (see
ordering.reference_coupling_poly). A level is bound while eps_nl > 0, which
is what normalizability of the corresponding wave function requires.

Note on alternative parameterizations: the same spectrum is sometimes
written via (Q1, Q2) or (q1, q2) pairs; these are A0*gamma2/2 and
sqrt(A0*gamma1) up to the rotational terms. The gamma route is the single
source of truth here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import (
    DegenerateDenominatorError,
    NoBoundStatesError,
    NoSpectrumError,
)
from .ordering import MassProfile, OrderingScheme, reference_coupling_poly
from .pekeris import PekerisCoeffs, pekeris_coeffs
from .units import MoleculeParams

#: Denominators of the level formula smaller than this end the spectrum.
DENOMINATOR_GUARD = 1e-12

BoundClass = Literal["bound", "marginal", "unbound"]


@dataclass(frozen=True)
class SpectrumInputs:
    """One spectral problem: molecule, ordering, mass coupling, and l."""

    molecule: MoleculeParams
    scheme: OrderingScheme
    epsilon: float
    l: int

    def __post_init__(self) -> None:
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if not 0.0 <= self.epsilon < 1.0:
            raise ValueError(f"epsilon must satisfy 0 <= eps < 1, got {self.epsilon!r}")

    @property
    def V1(self) -> float:
        """Strength of the repulsive exponential, equal to De."""
        return self.molecule.De

    @property
    def V2(self) -> float:
        """Strength of the attractive exponential, equal to 2*De."""
        return 2.0 * self.molecule.De

    def profile(self) -> MassProfile:
        return MassProfile.from_molecule(self.molecule, self.epsilon)

    def pekeris(self) -> PekerisCoeffs:
        return pekeris_coeffs(self.molecule.nu)


@dataclass(frozen=True)
class EnergyLevel:
    """A single (n, l) level with its classification.

    bound: eps_nl > 0 (normalizable); marginal: eps_nl <= 0 but the inverted
    energy is still negative; unbound otherwise.
    """

    n: int
    l: int
    eps_nl: float
    E: float
    bound_class: BoundClass


def coupling_terms(inp: SpectrumInputs) -> tuple[float, float]:
    """(linear, quadratic) coupling energies entering gamma2 and gamma1.

    The extra potential of the solved Hamiltonian is
    -linear*y + quadratic*y^2 in y = exp(-b(r-re)); the numerical
    eigensolver consumes the same pair.
    """
    c1, c2 = reference_coupling_poly(inp.scheme, inp.profile())
    return -c1, c2


def gamma1(inp: SpectrumInputs) -> float:
    """Quadratic spectral coefficient; must be positive for any spectrum."""
    mol = inp.molecule
    d = inp.pekeris()
    _, quad_term = coupling_terms(inp)
    g1 = inp.V1 / mol.A0 + inp.l * (inp.l + 1) * d.D2 / mol.nu**2 + quad_term / mol.A0
    if g1 <= 0.0:
        raise NoSpectrumError(
            f"gamma1 = {g1!r} <= 0 for {mol.name} (scheme {inp.scheme}, eps={inp.epsilon}); "
            "no bound spectrum exists"
        )
    return g1


def gamma2(inp: SpectrumInputs) -> float:
    """Linear spectral coefficient."""
    mol = inp.molecule
    d = inp.pekeris()
    lin_term, _ = coupling_terms(inp)
    return inp.V2 / mol.A0 - inp.l * (inp.l + 1) * d.D1 / mol.nu**2 + lin_term / mol.A0


def eps_nl(inp: SpectrumInputs, n: int) -> float:
    """Level variable of the n-th state.

    eps_nl = [n(n+1)eps - (2n+1)sqrt(gamma1) + gamma2] /
             [2 sqrt(gamma1) - (2n+1)eps].
    At eps = 0 this reduces to gamma2/(2 sqrt(gamma1)) - (n + 1/2).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    g1 = gamma1(inp)
    g2 = gamma2(inp)
    root = math.sqrt(g1)
    den = 2.0 * root - (2 * n + 1) * inp.epsilon
    if abs(den) < DENOMINATOR_GUARD:
        raise DegenerateDenominatorError(
            f"level denominator 2*sqrt(gamma1) - (2n+1)*eps = {den!r} at n={n}"
        )
    return (n * (n + 1) * inp.epsilon - (2 * n + 1) * root + g2) / den


def energy(inp: SpectrumInputs, n: int) -> EnergyLevel:
    """Energy of level (n, l) via E = B0(l)*D0 - A0*eps_nl^2."""
    x = eps_nl(inp, n)
    d = inp.pekeris()
    e = inp.molecule.B0(inp.l) * d.D0 - inp.molecule.A0 * x * x
    if x > 0.0:
        cls: BoundClass = "bound"
    elif e < 0.0:
        cls = "marginal"
    else:
        cls = "unbound"
    return EnergyLevel(n=n, l=inp.l, eps_nl=x, E=e, bound_class=cls)


def swave_energy(inp: SpectrumInputs, n: int) -> EnergyLevel:
    """Vibrational (l = 0) energy; named entry point for the general path."""
    if inp.l != 0:
        raise ValueError(f"swave_energy requires l = 0, got l = {inp.l}")
    return energy(inp, n)


def n_max(inp: SpectrumInputs, convention: str = "strict") -> int:
    """Largest bound vibrational index.

    convention="strict": largest n with eps_nl > 0 and a positive level
    denominator (normalizability). convention="table": one more level is
    counted when its inverted energy is still negative, matching the
    published counting.
    """
    if convention not in ("strict", "table"):
        raise ValueError(f"convention must be 'strict' or 'table', got {convention!r}")
    if eps_nl(inp, 0) <= 0.0:
        raise NoBoundStatesError(
            f"{inp.molecule.name}: even n=0 is unbound (eps_00 <= 0)"
        )
    g1 = gamma1(inp)
    root = math.sqrt(g1)
    n = 0
    while True:
        den = 2.0 * root - (2 * (n + 1) + 1) * inp.epsilon
        if den < DENOMINATOR_GUARD:
            break
        if eps_nl(inp, n + 1) <= 0.0:
            break
        n += 1
        if n > 100_000:  # pragma: no cover - defensive
            raise RuntimeError("runaway level count")
    if convention == "strict":
        return n
    den = 2.0 * root - (2 * (n + 1) + 1) * inp.epsilon
    if den >= DENOMINATOR_GUARD and energy(inp, n + 1).E < 0.0:
        return n + 1
    return n
