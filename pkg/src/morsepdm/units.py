"""Physical constants, unit conventions, and the built-in molecule registry.

Internal unit system: energies in eV, lengths in angstrom, masses as rest
energies in eV. Every spectral scale is derived from the per-molecule energy
scale E0 = (hbar c)^2 / (2 m0 c^2 re^2), whose tabulated value is
authoritative; the value recomputed from the amu mass must agree with it to
1e-4 relative but is used only as a consistency check. This keeps the
closed-form and numerical routes on a single shared constant.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .errors import ConfigError, UnknownMoleculeError

HBAR_C = 1973.29
"""hbar*c in eV*angstrom."""

AMU_TO_EV = 931.494e6
"""Rest energy of one atomic mass unit, in eV."""

#: Relative tolerance for agreement between the tabulated E0 and the value
#: recomputed from (m_amu, re) with the constants above.
E0_CONSISTENCY_RTOL = 1e-4


@dataclass(frozen=True)
class MoleculeParams:
    """Morse-model parameters of one diatomic molecule.

    Attributes:
        name: registry identifier, e.g. "H2".
        De: dissociation energy in eV.
        re: equilibrium internuclear separation in angstrom.
        m_amu: reduced mass in amu.
        nu: dimensionless well width, nu = b*re.
        E0: energy scale (hbar c)^2/(2 m0 c^2 re^2) in eV.
    """

    name: str
    De: float
    re: float
    m_amu: float
    nu: float
    E0: float

    def __post_init__(self) -> None:
        for label in ("De", "re", "m_amu", "nu", "E0"):
            value = getattr(self, label)
            if not value > 0:
                raise ValueError(f"{self.name}: {label} must be positive, got {value!r}")
        ref = self.e0_from_constants()
        if abs(self.E0 - ref) > E0_CONSISTENCY_RTOL * ref:
            raise ValueError(
                f"{self.name}: E0={self.E0!r} eV is inconsistent with the value "
                f"{ref!r} eV derived from m_amu and re (tolerance {E0_CONSISTENCY_RTOL})"
            )

    def e0_from_constants(self) -> float:
        """E0 recomputed from the amu mass; a consistency check only."""
        return HBAR_C**2 / (2.0 * self.m_amu * AMU_TO_EV * self.re**2)

    @property
    def b(self) -> float:
        """Morse width parameter in 1/angstrom."""
        return self.nu / self.re

    @property
    def A0(self) -> float:
        """Vibrational energy scale (hbar c)^2 b^2 / (2 m0 c^2) = E0*nu^2, eV."""
        return self.E0 * self.nu**2

    @property
    def m0(self) -> float:
        """Asymptotic mass as a rest energy in eV, tied to the tabulated E0."""
        return HBAR_C**2 / (2.0 * self.E0 * self.re**2)

    def B0(self, l: int) -> float:
        """Rotational energy scale E0*l*(l+1) in eV."""
        return self.E0 * l * (l + 1)


def derive_scales(p: MoleculeParams) -> tuple[float, float, Callable[[int], float]]:
    """Return (b, A0, B0) for a molecule, with B0 a map l -> energy."""
    return p.b, p.A0, p.B0


_TABLE_ROWS = (
    # name, De (eV), re (angstrom), m (amu), nu, E0 (eV)
    ("H2", 4.7446, 0.7416, 0.50391, 1.440558, 0.754171966e-2),
    ("LiH", 2.515287, 1.5956, 0.8801221, 1.7998368, 0.932764099e-3),
    ("HCl", 4.61907, 1.2746, 0.9801045, 2.38057, 1.312630806e-3),
    ("CO", 11.2256, 1.1283, 6.8606719, 2.59441, 2.393023577e-4),
)

REGISTRY: dict[str, MoleculeParams] = {
    row[0]: MoleculeParams(*row) for row in _TABLE_ROWS
}

ENV_MOLECULE_DIR = "MORSEPDM_MOLECULES"

_REQUIRED_KEYS = ("name", "De_eV", "re_angstrom", "m_amu", "nu")


def parse_molecule_file(path: str | Path) -> MoleculeParams:
    """Parse a flat 'key = value' molecule config file.

    Required keys: name, De_eV, re_angstrom, m_amu, nu. Optional: E0_eV;
    when absent, E0 is derived from the constants. Lines starting with '#'
    are comments.
    """
    path = Path(path)
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    missing = [k for k in _REQUIRED_KEYS if k not in entries]
    if missing:
        raise ConfigError(f"{path}: missing keys {', '.join(missing)}")
    name = entries["name"]
    try:
        de = float(entries["De_eV"])
        re_ = float(entries["re_angstrom"])
        m_amu = float(entries["m_amu"])
        nu = float(entries["nu"])
        e0 = float(entries["E0_eV"]) if "E0_eV" in entries else None
    except ValueError as exc:
        raise ConfigError(f"{path}: non-numeric value ({exc})") from None
    if e0 is None:
        e0 = HBAR_C**2 / (2.0 * m_amu * AMU_TO_EV * re_**2)
    try:
        return MoleculeParams(name, de, re_, m_amu, nu, e0)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def load_molecule_dir(directory: str | Path) -> dict[str, MoleculeParams]:
    """Load every readable molecule config file in a directory."""
    directory = Path(directory)
    if not directory.is_dir():
        raise ConfigError(f"{directory}: not a directory")
    loaded: dict[str, MoleculeParams] = {}
    for path in sorted(directory.iterdir()):
        if path.is_file():
            mol = parse_molecule_file(path)
            loaded[mol.name] = mol
    return loaded


def registry_lookup(
    name: str, extra: dict[str, MoleculeParams] | None = None
) -> MoleculeParams:
    """Look up a molecule by (case-insensitive) name.

    `extra` entries, e.g. from load_molecule_dir, are merged over the
    built-in registry.
    """
    table = dict(REGISTRY)
    if extra:
        table.update(extra)
    for key, value in table.items():
        if key.casefold() == name.casefold():
            return value
    known = ", ".join(sorted(table))
    raise UnknownMoleculeError(f"unknown molecule {name!r}; registered: {known}")


def registry_from_environment() -> dict[str, MoleculeParams]:
    """Molecules from the directory named by MORSEPDM_MOLECULES, if set."""
    directory = os.environ.get(ENV_MOLECULE_DIR)
    if not directory:
        return {}
    return load_molecule_dir(directory)


def available_molecules(extra: dict[str, MoleculeParams] | None = None) -> Iterable[str]:
    table = dict(REGISTRY)
    if extra:
        table.update(extra)
    return sorted(table)
