import math

import pytest

from morsepdm import (
    DegenerateDenominatorError,
    NoBoundStatesError,
    NoSpectrumError,
    OrderingScheme,
    SpectrumInputs,
    energy,
    eps_nl,
    gamma1,
    gamma2,
    n_max,
    preset,
    registry_lookup,
    swave_energy,
)

WEYL = preset("weyl")


def inputs(name, eps=0.0, l=0, scheme=WEYL):
    return SpectrumInputs(registry_lookup(name), scheme, eps, l)


# --- spectral coefficients -------------------------------------------------


def test_gamma1_h2_swave():
    inp = inputs("H2")
    mol = inp.molecule
    assert gamma1(inp) == pytest.approx(mol.De / mol.A0, rel=1e-14)
    assert gamma1(inp) == pytest.approx(303.16, abs=5e-3)


def test_gamma1_weyl_independent_of_eps():
    for eps in (0.0, 0.3, 0.8):
        inp = inputs("H2", eps)
        assert gamma1(inp) == pytest.approx(303.157, abs=1e-3)


def test_gamma1_bendaniel_duke_quadratic_term():
    inp = inputs("H2", 0.5, scheme=preset("bendaniel-duke"))
    mol = inp.molecule
    # quadratic coupling carries the re^2 convention of the reference data
    expected = mol.De / mol.A0 + mol.re**2 * 1.0 * 0.25
    assert gamma1(inp) == pytest.approx(expected, rel=1e-14)


def test_gamma2_h2_swave():
    inp = inputs("H2")
    mol = inp.molecule
    assert gamma2(inp) == pytest.approx(2.0 * mol.De / mol.A0, rel=1e-14)
    assert gamma2(inp) == pytest.approx(606.31, abs=1e-2)


def test_gamma2_weyl_linear_term():
    inp = inputs("H2", 0.4)
    mol = inp.molecule
    expected = 2.0 * mol.De / mol.A0 + mol.re**2 * 0.5 * 0.4
    assert gamma2(inp) == pytest.approx(expected, rel=1e-14)


def test_gamma2_l_dependence():
    mol = registry_lookup("H2")
    d1 = 4.0 / mol.nu - 6.0 / mol.nu**2
    diff = gamma2(inputs("H2", l=1)) - gamma2(inputs("H2", l=0))
    assert diff == pytest.approx(-2.0 * d1 / mol.nu**2, rel=1e-12)


def test_no_spectrum_error():
    # strongly negative quadratic coefficient drives gamma1 below zero
    scheme = OrderingScheme(-1.001, 0.0, 0.0)
    inp = inputs("H2", 0.9, scheme=scheme)
    with pytest.raises(NoSpectrumError):
        gamma1(inp)


# --- level variable ---------------------------------------------------------


def test_eps_nl_h2_ground():
    inp = inputs("H2")
    mol = inp.molecule
    expected = math.sqrt(mol.De / mol.A0) - 0.5
    assert eps_nl(inp, 0) == pytest.approx(expected, rel=1e-14)
    assert eps_nl(inp, 0) == pytest.approx(16.911, abs=5e-4)


def test_eps_nl_constant_mass_reduction():
    for name in ("H2", "CO"):
        for l in (0, 4):
            inp = inputs(name, 0.0, l)
            g1, g2 = gamma1(inp), gamma2(inp)
            for n in (0, 3, 11):
                expected = g2 / (2.0 * math.sqrt(g1)) - (n + 0.5)
                assert eps_nl(inp, n) == pytest.approx(expected, rel=1e-13)


def test_eps_nl_beyond_top():
    assert eps_nl(inputs("H2"), 17) == pytest.approx(-0.089, abs=1e-3)


def test_degenerate_denominator():
    mol = registry_lookup("H2")
    n = 19
    eps_star = 2.0 * math.sqrt(mol.De / mol.A0) / (2 * n + 1)
    inp = inputs("H2", eps_star)
    with pytest.raises(DegenerateDenominatorError):
        eps_nl(inp, n)


# --- energies ---------------------------------------------------------------


def test_energy_h2_constant_mass_ground():
    level = energy(inputs("H2"), 0)
    assert level.E == pytest.approx(-4.476013, abs=1e-5)
    assert level.bound_class == "bound"


def test_energy_h2_pdm_ground():
    level = energy(inputs("H2", 0.1), 0)
    assert level.E == pytest.approx(-4.50225, abs=5e-4)


def test_energy_co_table_corner():
    level = energy(inputs("CO", 0.8, l=10), 10)
    assert level.E == pytest.approx(-10.7329, abs=5e-4)


def test_energy_lih_table_cell():
    level = energy(inputs("LiH", 0.2, l=5), 5)
    assert level.E == pytest.approx(-1.77179, abs=5e-4)


def test_marginal_and_unbound_classes():
    # one level past the strict top at l = 0: negative energy, not bound
    level = energy(inputs("H2"), 17)
    assert level.eps_nl < 0 and level.E < 0
    assert level.bound_class == "marginal"
    # high l can push the inverted energy positive
    level = energy(inputs("H2", l=10), 17)
    assert level.eps_nl < 0 and level.E > 0
    assert level.bound_class == "unbound"


def test_swave_named_entry_point():
    inp = inputs("HCl")
    assert swave_energy(inp, 10).E == pytest.approx(-1.546520, abs=1e-5)
    assert swave_energy(inputs("LiH"), 25).E == pytest.approx(-0.033949, abs=1e-5)
    with pytest.raises(ValueError):
        swave_energy(inputs("H2", l=1), 0)


def test_swave_matches_closed_expression(molecule):
    inp = SpectrumInputs(molecule, WEYL, 0.0, 0)
    for n in (0, 2, 9):
        expected = -molecule.A0 * (math.sqrt(molecule.De / molecule.A0) - n - 0.5) ** 2
        assert swave_energy(inp, n).E == pytest.approx(expected, rel=1e-12)


def test_general_path_reduces_to_swave(molecule):
    inp = SpectrumInputs(molecule, WEYL, 0.0, 0)
    for n in (0, 5):
        assert energy(inp, n) == swave_energy(inp, n)


def test_constant_mass_rotating_reduction(molecule):
    """Independent evaluation through the (p1, p2) form of the spectrum."""
    nu = molecule.nu
    for l in (1, 5, 10):
        inp = SpectrumInputs(molecule, WEYL, 0.0, l)
        p1 = molecule.De / molecule.A0 - (l * (l + 1) / nu**2) * (2.0 / nu - 3.0 / nu**2)
        p2 = molecule.De / molecule.A0 - (l * (l + 1) / nu**2) * (1.0 / nu - 3.0 / nu**2)
        d0 = 1.0 - 3.0 / nu + 3.0 / nu**2
        for n in (0, 4):
            expected = molecule.B0(l) * d0 - molecule.A0 * (p1 / math.sqrt(p2) - n - 0.5) ** 2
            assert energy(inp, n).E == pytest.approx(expected, rel=1e-12)


# --- level counting ---------------------------------------------------------


def test_n_max_conventions():
    strict = {"H2": 16, "HCl": 24, "LiH": 28, "CO": 82}
    table = {"H2": 17, "HCl": 25, "LiH": 29, "CO": 83}
    for name, expected in strict.items():
        inp = inputs(name)
        assert n_max(inp, "strict") == expected
        assert n_max(inp, "table") == table[name]


def test_footnote_energies():
    footnotes = {"H2": (17, -1.231e-4), "HCl": (24, -1.303e-3),
                 "LiH": (29, -1.270e-3), "CO": (83, -5.533e-7)}
    for name, (n, e_ref) in footnotes.items():
        assert energy(inputs(name), n).E == pytest.approx(e_ref, abs=1e-6)


def test_no_bound_states_error():
    # extreme l drives gamma2 negative while gamma1 stays positive
    inp = inputs("CO", l=400)
    assert eps_nl(inp, 0) < 0
    with pytest.raises(NoBoundStatesError):
        n_max(inp)


def test_bad_convention_rejected():
    with pytest.raises(ValueError):
        n_max(inputs("H2"), "loose")


# --- cross-scheme and sweep properties ---------------------------------------


def table_grid():
    for n, l in [(0, 0), (0, 5), (0, 10), (5, 0), (5, 5), (5, 10),
                 (6, 0), (6, 5), (6, 10), (10, 0), (10, 5), (10, 10)]:
        for eps in (0.1, 0.2, 0.4, 0.6, 0.8):
            yield n, l, eps


def test_weyl_equals_li_kuhn_energies(molecule):
    lk = preset("li-kuhn")
    for n, l, eps in table_grid():
        e_w = energy(SpectrumInputs(molecule, WEYL, eps, l), n).E
        e_lk = energy(SpectrumInputs(molecule, lk, eps, l), n).E
        assert e_w == pytest.approx(e_lk, rel=1e-14)


def test_binding_monotone_in_eps(molecule):
    for n, l in [(0, 0), (5, 5), (10, 10)]:
        prev = -energy(SpectrumInputs(molecule, WEYL, 0.0, l), n).E
        for eps in (0.1, 0.2, 0.4, 0.6, 0.8):
            cur = -energy(SpectrumInputs(molecule, WEYL, eps, l), n).E
            assert cur >= prev - 1e-12
            prev = cur


def test_levels_increase_with_n(molecule):
    # weak-coupling regime; at large eps the closed-form family inverts
    for eps in (0.0, 0.1, 0.2, 0.4):
        inp = SpectrumInputs(molecule, WEYL, eps, 0)
        top = n_max(inp, "strict")
        levels = [energy(inp, n).E for n in range(top + 1)]
        assert all(b > a for a, b in zip(levels, levels[1:]))


def test_input_validation():
    with pytest.raises(ValueError):
        inputs("H2", l=-1)
    with pytest.raises(ValueError):
        inputs("H2", eps=1.0)
    with pytest.raises(ValueError):
        eps_nl(inputs("H2"), -1)


def test_strength_parameters():
    inp = inputs("CO")
    assert inp.V1 == inp.molecule.De
    assert inp.V2 == 2.0 * inp.molecule.De
