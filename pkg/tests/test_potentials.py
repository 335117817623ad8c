"""Catalog mappings, closed forms, spectra, and wavefunction assembly."""

import math

import numpy as np
import pytest

from specbound import (
    Coulomb,
    DeformedRosenMorse,
    GeneralizedMorse,
    InvalidParameters,
    KratzerFues,
    Mie,
    NoBoundState,
    NoncentralRadial,
    OutOfDomain,
    PoschlTeller,
    Pseudoharmonic,
    UnitsConfig,
    UnsupportedAngularMomentum,
    WoodsSaxon,
    closed_form_energy,
    count_nodes,
    default_grid,
    golden_section_minimize,
    make_potential,
    potential_value,
    simpson_integrate,
    spectrum,
    to_parametric,
    wavefunction,
)

UNITS = UnitsConfig()


# ---------------------------------------------------------------- validation

def test_parameter_validation():
    with pytest.raises(InvalidParameters):
        GeneralizedMorse(V1=-100.0, V2=20.0, a=1.0)
    with pytest.raises(InvalidParameters):
        KratzerFues(De=10.0, re=-1.0)
    with pytest.raises(InvalidParameters):
        PoschlTeller(V0=10.0, a=1.0, eta=0.0)
    with pytest.raises(InvalidParameters):
        NoncentralRadial(alpha=1.0, lam=0.0)
    with pytest.raises(InvalidParameters):
        UnitsConfig(hbar=0.0)


def test_one_dimensional_families_reject_l():
    for spec in (GeneralizedMorse(100, 20, 1), DeformedRosenMorse(4, 8, 0.5, 1),
                 WoodsSaxon(5, 10, 1), PoschlTeller(10, 1, 1),
                 NoncentralRadial(alpha=-1.0, lam=0.0)):
        with pytest.raises(UnsupportedAngularMomentum):
            to_parametric(spec, 1, UNITS)


def test_make_potential_maps_lambda_keyword():
    spec = make_potential("noncentral_radial", {"alpha": -1.0, "lambda": 1.0})
    assert spec.lam == 1.0
    with pytest.raises(InvalidParameters):
        make_potential("nonexistent", {})
    with pytest.raises(InvalidParameters):
        make_potential("coulomb", {"bogus": 1.0})


# ------------------------------------------------------------ potential values

def test_potential_values():
    assert potential_value(Mie(V0=5.0, a=1.0), 1.0) == pytest.approx(-2.5)
    assert potential_value(KratzerFues(De=10.0, re=1.0), 1.0) == 0.0
    morse = GeneralizedMorse(V1=100.0, V2=20.0, a=1.0)
    x_star = math.log(2 * 100.0 / 20.0) / 1.0
    assert potential_value(morse, x_star) == pytest.approx(-20.0**2 / 400.0)
    x_min, v_min = golden_section_minimize(lambda x: potential_value(morse, x),
                                           x_star - 2, x_star + 2)
    assert v_min == pytest.approx(-1.0, abs=1e-10)
    with pytest.raises(OutOfDomain):
        potential_value(Mie(V0=5.0, a=1.0), -1.0)


def test_poschl_teller_is_sech_squared_well():
    pt = PoschlTeller(V0=10.0, a=1.0, eta=1.0)
    for x in (-1.3, 0.0, 0.8):
        assert potential_value(pt, x) == pytest.approx(-10.0 / math.cosh(x) ** 2, abs=1e-12)


def test_rosen_morse_eta_is_a_translation():
    # eta > 0 only shifts the profile, so the spectrum cannot depend on it
    e1 = spectrum(DeformedRosenMorse(4.0, 8.0, 0.5, 1.0), 0, UNITS, n_max=0)[0].energy
    e2 = spectrum(DeformedRosenMorse(4.0, 8.0, 0.5, 2.5), 0, UNITS, n_max=0)[0].energy
    assert e1 == pytest.approx(e2, rel=1e-12)


# ------------------------------------------------------------- coefficient maps

def test_coulomb_coefficients():
    form, cmap = to_parametric(Coulomb(e2=1.0), 0, UNITS)
    pc = form.coeff_at(-0.3)
    assert (pc.c1, pc.c2, pc.c3) == (2.0, 0.0, 0.0)
    assert pc.lambda1 == pytest.approx(0.6)
    assert pc.lambda2 == pytest.approx(2.0)
    assert pc.lambda3 == 0.0


def test_woods_saxon_coefficients():
    form, _ = to_parametric(WoodsSaxon(5.0, 10.0, 1.0), 0, UNITS)
    pc = form.coeff_at(-5.2)
    assert (pc.c1, pc.c2, pc.c3) == (1.0, -2.0, -1.0)
    assert pc.lambda1 == pytest.approx(20.0)
    assert pc.lambda2 == pytest.approx(30.0)
    assert pc.lambda3 == pytest.approx(10.4)


def test_step_family_coefficients_carry_doubled_c2():
    # the first-derivative coefficient of the transformed equation is
    # (1 - 2 eta s)/(s (1 - eta s)), hence c2 = -2 eta, not -eta
    eta = 1.7
    form, _ = to_parametric(DeformedRosenMorse(4.0, 8.0, 0.5, eta), 0, UNITS)
    pc = form.coeff_at(-0.1)
    assert (pc.c1, pc.c2, pc.c3) == (1.0, -2 * eta, -eta)
    c = 1.0 / (2 * 0.5**2)
    kappa, gamma = c * 4.0, c * 8.0 * eta
    assert pc.lambda1 == pytest.approx(gamma * eta)
    assert pc.lambda2 == pytest.approx(kappa * eta + gamma)
    assert pc.lambda3 == pytest.approx(c * (4.0 + 0.1))


def test_pseudoharmonic_coefficients():
    form, _ = to_parametric(Pseudoharmonic(V0=2.0, r0=1.0), 0, UNITS)
    pc = form.coeff_at(1.0)
    assert pc.c1 == 1.5
    assert pc.lambda1 == pytest.approx(1.0)
    assert pc.lambda2 == pytest.approx(0.5 * (1.0 + 4.0))
    assert pc.lambda3 == pytest.approx(1.0)


def test_morse_coefficient_signs():
    form, _ = to_parametric(GeneralizedMorse(100.0, 20.0, 1.0), 0, UNITS)
    pc = form.coeff_at(-0.4)
    assert (pc.c1, pc.c2, pc.c3) == (1.0, 0.0, 0.0)
    assert pc.lambda1 == pytest.approx(2.0)          # fixed decay scale
    assert pc.lambda2 == pytest.approx(2.0 * 20.0 / 10.0)
    assert pc.lambda3 == pytest.approx(0.8)          # positive for E < 0


# ------------------------------------------------------------------ spectra

def test_coulomb_spectrum_exact():
    states = spectrum(Coulomb(e2=1.0), 0, UNITS, n_max=2)
    expected = [-0.5, -0.125, -1.0 / 18.0]
    assert len(states) == 3
    for st, e in zip(states, expected):
        assert st.energy == pytest.approx(e, abs=1e-12)


def test_coulomb_degeneracy_in_principal_number():
    e10 = spectrum(Coulomb(e2=1.0), 0, UNITS, n_max=1)[1].energy
    e01 = spectrum(Coulomb(e2=1.0), 1, UNITS, n_max=0)[0].energy
    assert e10 == pytest.approx(e01, abs=1e-12)


def test_noncentral_reduces_to_coulomb():
    for ell in (0, 1, 2):
        lam = ell * (ell + 1) / 2.0
        nc = spectrum(NoncentralRadial(alpha=-1.0, lam=lam), 0, UNITS, n_max=1)
        cb = spectrum(Coulomb(e2=1.0), ell, UNITS, n_max=1)
        for a, b in zip(nc, cb):
            assert a.energy == pytest.approx(b.energy, abs=1e-12)


def test_units_scaling_coulomb():
    units = UnitsConfig(hbar=2.0, mass=0.5)
    st = spectrum(Coulomb(e2=1.0), 0, units, n_max=0)[0]
    assert st.energy == pytest.approx(-0.5 * 1.0 / (4.0 * 2.0), abs=1e-12)
    assert closed_form_energy(Coulomb(1.0), 0, units, 0) == pytest.approx(st.energy,
                                                                          rel=1e-12)


def test_morse_has_single_level_at_desk_parameters():
    spec = GeneralizedMorse(100.0, 20.0, 1.0)
    states = spectrum(spec, 0, UNITS, n_max=8)
    assert len(states) == 1
    w = math.sqrt(2.0) * 20.0 / 10.0
    assert states[0].energy == pytest.approx(-(w - 1) ** 2 / 8.0, rel=1e-12)
    with pytest.raises(NoBoundState):
        closed_form_energy(spec, 0, UNITS, 1)


def test_kratzer_ground_level_is_two():
    # De = 10, re = 1 gives 1 + 4 L3 = 81 and E0 = 10 - 800/100 exactly
    states = spectrum(KratzerFues(10.0, 1.0), 0, UNITS, n_max=1)
    assert states[0].energy == pytest.approx(2.0, rel=1e-12)
    assert states[1].energy == pytest.approx(10.0 - 800.0 / 144.0, rel=1e-12)


def test_poschl_teller_ladder():
    states = spectrum(PoschlTeller(10.0, 1.0, 1.0), 0, UNITS, n_max=6)
    assert [st.n for st in states] == [0, 1, 2, 3]
    for st, e in zip(states, [-8.0, -4.5, -2.0, -0.5]):
        assert st.energy == pytest.approx(e, rel=1e-12)


def test_woods_saxon_desk_level():
    states = spectrum(WoodsSaxon(5.0, 10.0, 1.0), 0, UNITS, n_max=4)
    assert len(states) == 1
    assert states[0].energy == pytest.approx(-5.28125, rel=1e-13)


def test_woods_saxon_shallow_pocket_has_no_levels():
    # V1 >= V2 leaves no pocket below the left asymptote
    assert spectrum(WoodsSaxon(5.0, 2.0, 1.0), 0, UNITS, n_max=3) == []


def test_mie_closed_form_structure():
    spec = Mie(V0=5.0, a=1.0)
    lam2 = 2 * 1.0 * 5.0
    lam3 = 5.0 / 2.0 * 2.0
    for n in range(3):
        expected = -0.5 * (lam2 / (2 * n + 1 + math.sqrt(1 + 4 * lam3))) ** 2
        assert closed_form_energy(spec, 0, UNITS, n) == pytest.approx(expected, rel=1e-14)


def test_pseudoharmonic_ground_energy():
    st = spectrum(Pseudoharmonic(2.0, 1.0), 0, UNITS, n_max=0)[0]
    assert st.energy == pytest.approx(math.sqrt(17.0) - 2.0, rel=1e-12)


def test_spectrum_monotone_increasing():
    for spec, l in [(Mie(5.0, 1.0), 1), (KratzerFues(10.0, 1.0), 2),
                    (Pseudoharmonic(2.0, 1.0), 1)]:
        states = spectrum(spec, l, UNITS, n_max=3)
        energies = [st.energy for st in states]
        assert energies == sorted(energies)
        assert all(b > a for a, b in zip(energies, energies[1:]))


# ------------------------------------------------------------- wavefunctions

def test_coulomb_ground_state_shape():
    st = spectrum(Coulomb(e2=1.0), 0, UNITS, n_max=0)[0]
    # R(r) is proportional to exp(-r) at l = 0, n = 0
    ratio = wavefunction(st, 2.0) / wavefunction(st, 1.0)
    assert ratio == pytest.approx(math.exp(-1.0), rel=1e-12)
    # normalization holds to 1e-8 against a much finer quadrature, i.e. the
    # stored constant reflects the true integral, not just its own grid
    x = np.linspace(0.0, 80.0, 48001)
    psi = wavefunction(st, x)
    assert simpson_integrate(psi * psi * x**2, x[1] - x[0]) == pytest.approx(1.0, abs=1e-8)


def test_wavefunction_boundary_decay():
    st = spectrum(KratzerFues(10.0, 1.0), 0, UNITS, n_max=0)[0]
    # q10 = 4 at these parameters, so R ~ r^4 near the origin
    assert abs(wavefunction(st, 1e-4)) < 1e-12
    assert wavefunction(st, 0.0) == 0.0


def test_wavefunction_out_of_domain():
    st = spectrum(Coulomb(e2=1.0), 0, UNITS, n_max=0)[0]
    with pytest.raises(OutOfDomain):
        wavefunction(st, -1.0)


def test_node_counts_match_level_index():
    cases = [
        (Coulomb(e2=1.0), 0, 3),
        (KratzerFues(10.0, 1.0), 0, 3),
        (PoschlTeller(10.0, 1.0, 1.0), 0, 3),
        (Pseudoharmonic(2.0, 1.0), 0, 3),
    ]
    for spec, l, n_max in cases:
        states = spectrum(spec, l, UNITS, n_max=n_max)
        grid = default_grid(spec, l, UNITS, n_max=n_max)
        x = np.linspace(grid.x_min, grid.x_max, 10_000)
        for st in states:
            interior = wavefunction(st, x[1:-1])
            assert count_nodes(interior) == st.n, (spec.family, st.n)


def test_orthogonality_same_family():
    states = spectrum(Coulomb(e2=1.0), 0, UNITS, n_max=2)
    grid = default_grid(Coulomb(e2=1.0), 0, UNITS)
    x = grid.points()
    psis = [wavefunction(st, x) for st in states]
    w = x**2
    for i in range(3):
        for j in range(i + 1, 3):
            overlap = simpson_integrate(psis[i] * psis[j] * w, grid.h)
            assert abs(overlap) < 1e-6


def test_morse_wavefunction_overflow_guard():
    # far into the repulsive wall s is huge; the state must evaluate to 0,
    # not overflow
    st = spectrum(GeneralizedMorse(100.0, 20.0, 1.0), 0, UNITS, n_max=0)[0]
    vals = wavefunction(st, np.array([-200.0, -50.0, 30.0]))
    assert np.all(np.isfinite(vals))
    assert abs(vals[0]) == 0.0
