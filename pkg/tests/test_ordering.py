import math

import numpy as np
import pytest

from morsepdm import (
    MassProfile,
    OrderingScheme,
    SingularMassError,
    UnknownOrderingError,
    extra_potential_poly,
    lin_coeff,
    mass_at,
    ordering_potential_at,
    pct_term_at,
    preset,
    quad_coeff,
    reference_coupling_poly,
    registry_lookup,
)
from morsepdm.ordering import a0_scale

PRESET_TRIPLES = {
    "weyl": (1.0, 0.0, 0.0),
    "li-kuhn": (0.0, 0.0, -0.5),
    "bendaniel-duke": (0.0, 0.0, 0.0),
    "zhu-kroemer": (0.0, -0.5, -0.5),
    "gora-williams": (0.0, -1.0, 0.0),
}


def h2_profile(eps):
    return MassProfile.from_molecule(registry_lookup("H2"), eps)


@pytest.mark.parametrize("name,triple", sorted(PRESET_TRIPLES.items()))
def test_presets(name, triple):
    s = preset(name)
    assert (s.a, s.alpha, s.gamma) == triple
    assert s.beta == -1.0 - s.alpha - s.gamma
    assert preset(name.upper()) == s


def test_unknown_preset_lists_names():
    with pytest.raises(UnknownOrderingError) as err:
        preset("bogus")
    assert "weyl" in str(err.value)


def test_a_equal_minus_one_rejected():
    with pytest.raises(ValueError):
        OrderingScheme(-1.0, 0.0, 0.0)


def test_lin_coeff_values():
    assert lin_coeff(preset("weyl")) == 0.5
    assert lin_coeff(preset("li-kuhn")) == 0.5
    assert lin_coeff(preset("bendaniel-duke")) == 1.0


def test_quad_coeff_values():
    assert quad_coeff(preset("weyl")) == 0.0
    assert quad_coeff(preset("li-kuhn")) == 0.0
    assert quad_coeff(preset("bendaniel-duke")) == 1.0


def test_coeffs_symmetric_under_alpha_gamma_swap():
    for a, alpha, gamma in [(0.3, -0.2, 0.6), (1.5, 0.1, -0.7), (0.0, -0.9, 0.4)]:
        s1 = OrderingScheme(a, alpha, gamma)
        s2 = OrderingScheme(a, gamma, alpha)
        assert lin_coeff(s1) == pytest.approx(lin_coeff(s2), rel=1e-15)
        assert quad_coeff(s1) == pytest.approx(quad_coeff(s2), rel=1e-15)


def test_mass_constant_limit():
    p = h2_profile(0.0)
    r = np.linspace(0.05, 5.0, 7)
    assert mass_at(p, r) == pytest.approx(p.m0, rel=1e-15)


def test_mass_far_field():
    p = h2_profile(0.5)
    assert mass_at(p, p.re + 60.0 / p.b) == pytest.approx(p.m0, rel=1e-12)


def test_mass_at_minimum():
    p = h2_profile(0.5)
    assert mass_at(p, p.re) == pytest.approx(4.0 * p.m0, rel=1e-14)


def test_mass_singularity_raises():
    p = h2_profile(0.5)
    r_sing = p.re - math.log(2.0) / p.b
    with pytest.raises(SingularMassError):
        mass_at(p, r_sing)
    assert p.singular_radius == pytest.approx(r_sing, rel=1e-14)


def test_ordering_potential_vanishes_at_constant_mass():
    s = preset("bendaniel-duke")
    p = h2_profile(0.0)
    r = np.linspace(0.1, 4.0, 50)
    assert np.allclose(ordering_potential_at(s, p, r), 0.0)
    assert np.allclose(pct_term_at(p, r), 0.0)


def test_ordering_potential_vanishes_for_ambiguity_free_constraint():
    # alpha = 0 and a = gamma removes every ordering term
    s = OrderingScheme(a=0.7, alpha=0.0, gamma=0.7)
    p = h2_profile(0.3)
    r = np.linspace(p.re - 0.2, p.re + 4.0, 100)
    assert np.max(np.abs(ordering_potential_at(s, p, r))) <= 1e-12 * a0_scale(p)


def test_ordering_potential_matches_poly_at_re():
    s = preset("weyl")
    p = h2_profile(0.3)
    c1, c2 = extra_potential_poly(s, p)
    total = ordering_potential_at(s, p, p.re) + pct_term_at(p, p.re)
    assert total == pytest.approx(c1 + c2, rel=1e-12)


def test_pct_closed_form_at_minimum():
    p = h2_profile(0.2)
    # -A0 * eps * y * (1 - eps*y) with y = 1
    assert pct_term_at(p, p.re) == pytest.approx(-0.16 * a0_scale(p), rel=1e-12)


def test_pct_vanishes_far_out():
    p = h2_profile(0.4)
    assert abs(pct_term_at(p, p.re + 50.0 / p.b)) < 1e-20


def test_extra_poly_weyl():
    p = h2_profile(0.25)
    c1, c2 = extra_potential_poly(preset("weyl"), p)
    assert c1 == pytest.approx(-a0_scale(p) * 0.25 / 2.0, rel=1e-15)
    assert c2 == 0.0


def test_extra_poly_zhu_kroemer_exactly_zero():
    p = h2_profile(0.5)
    assert extra_potential_poly(preset("zhu-kroemer"), p) == (0.0, 0.0)


def test_extra_poly_zero_coupling():
    for name in PRESET_TRIPLES:
        assert extra_potential_poly(preset(name), h2_profile(0.0)) == (0.0, 0.0)


def test_polynomial_equivalence_property():
    """Central theorem: ordering + correction is exactly quadratic in y."""
    mol = registry_lookup("H2")
    for name in sorted(PRESET_TRIPLES):
        s = preset(name)
        for eps in np.arange(0.0, 0.95, 0.1):
            p = MassProfile.from_molecule(mol, float(eps))
            a0 = a0_scale(p)
            lo = 1e-3
            if p.singular_radius is not None:
                lo = max(lo, p.singular_radius + 0.05 / p.b)
            r = np.linspace(lo, p.re + 10.0 / p.b, 120)
            y = np.exp(-p.b * (r - p.re))
            c1, c2 = extra_potential_poly(s, p)
            total = ordering_potential_at(s, p, r) + pct_term_at(p, r)
            assert np.max(np.abs(total - (c1 * y + c2 * y * y))) <= 1e-12 * a0


def test_weyl_equals_li_kuhn():
    for eps in np.arange(0.0, 0.95, 0.1):
        p = h2_profile(float(eps))
        assert extra_potential_poly(preset("weyl"), p) == pytest.approx(
            extra_potential_poly(preset("li-kuhn"), p), rel=1e-15
        )


def test_reference_coupling_is_re2_scaled():
    p = h2_profile(0.3)
    c1, c2 = extra_potential_poly(preset("bendaniel-duke"), p)
    r1, r2 = reference_coupling_poly(preset("bendaniel-duke"), p)
    assert r1 == pytest.approx(p.re**2 * c1, rel=1e-15)
    assert r2 == pytest.approx(p.re**2 * c2, rel=1e-15)


def test_profile_rejects_bad_eps():
    mol = registry_lookup("H2")
    with pytest.raises(ValueError):
        MassProfile.from_molecule(mol, 1.0)
    with pytest.raises(ValueError):
        MassProfile.from_molecule(mol, -0.1)
