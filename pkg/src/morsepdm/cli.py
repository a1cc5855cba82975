"""Command-line interface.

Subcommands: spectrum (closed-form level sweeps), table (regression diff
against the built-in reference energies), wavefunction and potential (curve
CSVs), oracle (numerical eigensolver comparison). Output is deterministic:
fixed 9-significant-digit formatting and fixed row order (molecule, eps, l,
n ascending). Exit status: 0 success, 1 reference tolerance exceeded,
2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import refdata
from .errors import (
    ConfigError,
    DegenerateDenominatorError,
    MorsePDMError,
    NoSpectrumError,
    NoSuchLevelError,
    SingularMassError,
)
from .numerov import OracleProblem, morse_potential, solve_level
from .ordering import MassProfile, OrderingScheme, preset, reference_coupling_poly
from .pekeris import pekeris_coeffs, rotational_potential_at
from .spectrum import SpectrumInputs, energy, n_max
from .units import (
    MoleculeParams,
    registry_from_environment,
    registry_lookup,
)
from .wavefn import default_grid, psi_constmass, psi_pdm


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: command plus the selectors it sweeps over."""

    command: str
    molecule: MoleculeParams
    scheme: OrderingScheme
    ordering_label: str
    epsilons: tuple[float, ...]
    n_values: tuple[int, ...]
    l_values: tuple[int, ...]
    fmt: str
    out: str | None


@dataclass(frozen=True)
class TableDiffReport:
    """Recomputation of one reference table, cell by cell."""

    table_id: int
    rows: tuple[tuple, ...]  # (molecule, n, l, eps, reference, computed, |diff|)
    max_abs_diff: float


def _fmt(value) -> str:
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".9g")
    return str(value)


def _emit(args, colnames, rows, comments=(), meta=None) -> None:
    if args.format == "csv":
        lines = [f"# {c}" for c in comments]
        lines.append(",".join(colnames))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        doc = {
            "command": args.command,
            "meta": dict(meta or {}),
            "columns": list(colnames),
            "rows": [list(row) for row in rows],
        }
        text = json.dumps(doc, indent=2, sort_keys=True, allow_nan=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str, label: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise ConfigError(f"--{label}: expected an integer or 'lo..hi', got {text!r}") from None


def _parse_epsilons(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"--epsilon: expected comma-separated numbers, got {text!r}") from None
    for v in values:
        if not 0.0 <= v < 1.0:
            raise ConfigError(f"--epsilon: values must satisfy 0 <= eps < 1, got {v}")
    if not values:
        raise ConfigError("--epsilon: empty list")
    return values


def _parse_ordering(text: str) -> tuple[OrderingScheme, str]:
    if "," in text:
        parts = text.split(",")
        if len(parts) != 3:
            raise ConfigError(f"--ordering: expected 'a,alpha,gamma', got {text!r}")
        try:
            a, alpha, gamma = (float(p) for p in parts)
        except ValueError:
            raise ConfigError(f"--ordering: non-numeric triple {text!r}") from None
        try:
            scheme = OrderingScheme(a, alpha, gamma)
        except ValueError as exc:
            raise ConfigError(f"--ordering: {exc}") from None
        # semicolons keep the label CSV-safe
        return scheme, f"{a:g};{alpha:g};{gamma:g}"
    return preset(text), text.strip().casefold()


def _molecule(args) -> MoleculeParams:
    extra = registry_from_environment()
    return registry_lookup(args.molecule, extra)


def _run_config(args) -> RunConfig:
    scheme, label = _parse_ordering(args.ordering)
    return RunConfig(
        command=args.command,
        molecule=_molecule(args),
        scheme=scheme,
        ordering_label=label,
        epsilons=_parse_epsilons(args.epsilon),
        n_values=_parse_range(args.n, "n") if getattr(args, "n", None) else (0,),
        l_values=_parse_range(args.l, "l"),
        fmt=args.format,
        out=args.out,
    )


def cmd_spectrum(args) -> int:
    cfg = _run_config(args)
    mol = cfg.molecule
    rows = []
    for eps in cfg.epsilons:
        for l in cfg.l_values:
            inp = SpectrumInputs(mol, cfg.scheme, eps, l)
            for n in cfg.n_values:
                try:
                    level = energy(inp, n)
                    rows.append(
                        (mol.name, cfg.ordering_label, eps, n, l,
                         level.eps_nl, level.E, level.bound_class)
                    )
                except (DegenerateDenominatorError, NoSpectrumError):
                    rows.append(
                        (mol.name, cfg.ordering_label, eps, n, l,
                         float("nan"), float("nan"), "unbound")
                    )
    _emit(
        args,
        ("molecule", "ordering", "epsilon", "n", "l", "eps_nl", "E_eV", "bound_class"),
        rows,
        meta={"molecule": mol.name, "ordering": cfg.ordering_label},
    )
    return 0


def compute_table(table_id: int) -> TableDiffReport:
    """Recompute every cell of one reference table (Weyl ordering)."""
    extra = registry_from_environment()
    rows = []
    worst = 0.0
    for mol_name, n, l, eps, reference in refdata.table_cells(table_id):
        mol = registry_lookup(mol_name, extra)
        inp = SpectrumInputs(mol, preset("weyl"), eps, l)
        computed = -energy(inp, n).E  # binding energy, positive
        diff = abs(computed - reference)
        worst = max(worst, diff)
        rows.append((mol_name, n, l, eps, reference, computed, diff))
    return TableDiffReport(table_id=table_id, rows=tuple(rows), max_abs_diff=worst)


def cmd_table(args) -> int:
    report = compute_table(args.table_id)
    tol = refdata.TABLE_TOLERANCE[args.table_id]
    _emit(
        args,
        ("molecule", "n", "l", "epsilon", "reference_minus_E_eV", "computed_minus_E_eV", "abs_diff_eV"),
        report.rows,
        comments=(
            f"table {report.table_id}",
            f"max_abs_diff_eV {_fmt(report.max_abs_diff)} tolerance_eV {_fmt(tol)}",
        ),
        meta={
            "table": report.table_id,
            "max_abs_diff_eV": report.max_abs_diff,
            "tolerance_eV": tol,
        },
    )
    return 0 if report.max_abs_diff <= tol else 1


def cmd_potential(args) -> int:
    cfg = _run_config(args)
    mol = cfg.molecule
    scheme, label = cfg.scheme, cfg.ordering_label
    if len(cfg.epsilons) != 1:
        raise ConfigError("potential expects a single --epsilon value")
    eps = cfg.epsilons[0]
    if len(cfg.l_values) != 1:
        raise ConfigError("potential expects a single --l value")
    l = cfg.l_values[0]
    r_lo = args.rmin if args.rmin is not None else 1e-3
    r_hi = args.rmax if args.rmax is not None else mol.re + 10.0 / mol.b
    if r_lo <= 0 or r_hi <= r_lo:
        raise ConfigError("potential requires 0 < rmin < rmax")
    r = np.linspace(r_lo, r_hi, args.points)
    c1, c2 = reference_coupling_poly(scheme, MassProfile.from_molecule(mol, eps))
    y = np.exp(-mol.b * (r - mol.re))
    v_morse = morse_potential(mol, r)
    u_extra = c1 * y + c2 * y * y
    d = pekeris_coeffs(mol.nu)
    v_rot_pek = rotational_potential_at(d, l, mol, r, "pekeris") if l else np.zeros_like(r)
    v_rot_exact = rotational_potential_at(d, l, mol, r, "exact") if l else np.zeros_like(r)
    rows = [
        (float(ri), float(vm), float(ux), float(vp), float(ve))
        for ri, vm, ux, vp, ve in zip(r, v_morse, u_extra, v_rot_pek, v_rot_exact)
    ]
    _emit(
        args,
        ("r_angstrom", "V_morse_eV", "U_extra_eV", "V_rot_pekeris_eV", "V_rot_exact_eV"),
        rows,
        comments=(f"molecule={mol.name} ordering={label} epsilon={_fmt(eps)} l={l}",),
        meta={"molecule": mol.name, "ordering": label, "epsilon": eps, "l": l},
    )
    return 0


def cmd_wavefunction(args) -> int:
    cfg = _run_config(args)
    mol, label = cfg.molecule, cfg.ordering_label
    if len(cfg.epsilons) != 1:
        raise ConfigError("wavefunction expects a single --epsilon value")
    eps = cfg.epsilons[0]
    if len(cfg.n_values) != 1 or len(cfg.l_values) != 1:
        raise ConfigError("wavefunction expects single --n and --l values")
    n, l = cfg.n_values[0], cfg.l_values[0]
    inp = SpectrumInputs(mol, cfg.scheme, eps, l)
    if args.rmin is not None or args.rmax is not None or args.points != 2001:
        lo = args.rmin if args.rmin is not None else float(default_grid(mol, eps)[0])
        hi = args.rmax if args.rmax is not None else float(default_grid(mol, eps)[-1])
        grid = np.linspace(lo, hi, args.points)
    else:
        grid = default_grid(mol, eps)
    sol = psi_pdm(inp, n, grid) if eps > 0 else psi_constmass(inp, n, grid)
    rows = [(float(r), float(v)) for r, v in zip(sol.grid, sol.values)]
    _emit(
        args,
        ("r_angstrom", "psi"),
        rows,
        comments=(
            f"molecule={mol.name} n={n} l={l} epsilon={_fmt(eps)} ordering={label} "
            f"node_count={sol.node_count} norm={_fmt(sol.norm)}",
        ),
        meta={
            "molecule": mol.name,
            "n": n,
            "l": l,
            "epsilon": eps,
            "ordering": label,
            "node_count": sol.node_count,
            "norm": sol.norm,
        },
    )
    return 0


def cmd_oracle(args) -> int:
    cfg = _run_config(args)
    mol, scheme, label = cfg.molecule, cfg.scheme, cfg.ordering_label
    modes = ("pekeris", "exact") if args.centrifugal == "both" else (args.centrifugal,)
    rows = []
    for eps in cfg.epsilons:
        for l in cfg.l_values:
            inp = SpectrumInputs(mol, scheme, eps, l)
            for n in cfg.n_values:
                try:
                    e_closed = energy(inp, n).E
                except MorsePDMError:
                    e_closed = float("nan")
                results = {}
                status = "ok"
                for mode in modes:
                    try:
                        problem = OracleProblem.default(
                            mol, scheme, eps, l, mode, n_points=args.points
                        )
                        results[mode] = solve_level(problem, n, tol=args.tol)
                    except (NoSuchLevelError, SingularMassError) as exc:
                        results[mode] = None
                        status = type(exc).__name__
                pek = results.get("pekeris")
                exa = results.get("exact")
                e_pek = pek.E if pek else float("nan")
                e_exa = exa.E if exa else float("nan")
                pek_err = (e_exa - e_pek) if (pek and exa) else float("nan")
                closed_diff = (e_pek - e_closed) if pek else float("nan")
                rows.append(
                    (
                        mol.name, label, eps, n, l, e_closed, e_pek, e_exa,
                        pek_err, closed_diff,
                        pek.grid_error_estimate if pek else float("nan"),
                        exa.grid_error_estimate if exa else float("nan"),
                        int(pek.converged) if pek else 0,
                        int(exa.converged) if exa else 0,
                        status,
                    )
                )
    _emit(
        args,
        (
            "molecule", "ordering", "epsilon", "n", "l", "E_closed_eV",
            "E_oracle_pekeris_eV", "E_oracle_exact_eV", "pekeris_error_eV",
            "closed_vs_oracle_diff_eV", "grid_error_pekeris_eV",
            "grid_error_exact_eV", "converged_pekeris", "converged_exact",
            "status",
        ),
        rows,
        meta={"molecule": mol.name, "ordering": label, "tol_eV": args.tol},
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsepdm",
        description="Bound states of diatomic Morse oscillators with a position-dependent mass.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, molecule=True):
        if molecule:
            p.add_argument("--molecule", required=True, help="registry name, e.g. H2")
        p.add_argument("--ordering", default="weyl", help="preset name or explicit 'a,alpha,gamma'")
        p.add_argument("--epsilon", default="0", help="comma list of mass couplings in [0, 1)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("spectrum", help="closed-form level sweep")
    common(p)
    p.add_argument("--n", required=True, help="vibrational range 'lo..hi' or single value")
    p.add_argument("--l", default="0", help="rotational range 'lo..hi' or single value")

    p = sub.add_parser("table", help="diff against a built-in reference table")
    p.add_argument("table_id", type=int, choices=sorted(refdata.TABLE_TOLERANCE))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)

    p = sub.add_parser("potential", help="potential-curve samples")
    common(p)
    p.add_argument("--l", default="0")
    p.add_argument("--rmin", type=float, default=None)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=2001)

    p = sub.add_parser("wavefunction", help="normalized radial wave function samples")
    common(p)
    p.add_argument("--n", required=True)
    p.add_argument("--l", default="0")
    p.add_argument("--rmin", type=float, default=None)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--points", type=int, default=2001)

    p = sub.add_parser("oracle", help="numerical eigensolver comparison")
    common(p)
    p.add_argument("--n", required=True)
    p.add_argument("--l", default="0")
    p.add_argument("--centrifugal", choices=("pekeris", "exact", "both"), default="both")
    p.add_argument("--tol", type=float, default=1e-7, help="bisection tolerance in eV")
    p.add_argument("--points", type=int, default=40001)

    return parser


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "table": cmd_table,
    "potential": cmd_potential,
    "wavefunction": cmd_wavefunction,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MorsePDMError as exc:
        print(f"morsepdm: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream consumer closed the pipe (e.g. piping into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
