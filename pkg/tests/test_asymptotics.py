import math

import pytest

from cpaniso.asymptotics import (
    conductor_dielectric_coeffs,
    excited_nr_hs,
    excited_ret_hs,
    nr_F_plasma,
    nr_image_shift_coefficient,
    plasma_dielectric_c5,
    ret_F_conductor_dielectric_hs,
    ret_F_conductor_hs,
    ret_F_conductor_lossless_hs,
    ret_F_plasma,
    ret_F_plasma_dielectric_hs,
    ret_F_slab_conductor,
    ret_F_slab_dielectric,
)
from cpaniso.materials import Material, dielectric, drude_conductor, lossless_plasma, vacuum
from cpaniso.shifts import F_plasma_closed, Transition

SQ = math.sqrt(math.pi / 2.0)


def test_nr_image_coefficient():
    assert nr_image_shift_coefficient(Material(vacuum(), vacuum()), 1.0) == 0.0
    m = Material(lossless_plasma(1e6), lossless_plasma(1e6))
    assert nr_image_shift_coefficient(m, 1.0) == pytest.approx(math.pi / 2, rel=1e-4)
    m = Material(dielectric(2.0), dielectric(1.0))
    assert nr_image_shift_coefficient(m, 1.0) == pytest.approx(math.pi / 6, rel=1e-10)


def test_ret_conductor_hs_values():
    e = ret_F_conductor_hs(2.0, 50.0)     # sigma0*Z = 100
    assert e.F_par == pytest.approx(0.5 * (1 - (21 / 16) * SQ / 10 + 2.25 / 100), rel=1e-14)
    assert e.F_par == pytest.approx(0.4290, abs=5e-4)
    assert e.F_perp == pytest.approx(0.5 * (1 - (7 / 12) * SQ / 10 + 0.5 / 100), rel=1e-14)
    assert e.F_perp == pytest.approx(0.46595, abs=5e-5)
    big = ret_F_conductor_hs(1e9, 1.0)
    assert big.F_par == pytest.approx(0.5, abs=1e-4)
    assert big.F_perp == pytest.approx(0.5, abs=1e-4)
    assert e.regime_tag == "retarded"


def test_ret_conductor_lossless_hs_values():
    e = ret_F_conductor_lossless_hs(1.0, 20.0)
    assert e.F_par == pytest.approx(0.45, rel=1e-14)
    assert e.F_perp == pytest.approx(0.48, rel=1e-14)
    big = ret_F_conductor_lossless_hs(1e9, 1.0)
    assert big.F_par == pytest.approx(0.5, abs=1e-6)


def test_conductor_dielectric_coeffs_n1():
    c92p, c92q, c5p, c5q = conductor_dielectric_coeffs(1.0)
    assert c92p == pytest.approx((7.0 / 8.0) * SQ, rel=1e-13)
    assert c92q == pytest.approx(0.2349964007466563, rel=1e-10)   # (3/16) sqrt(pi/2)
    assert c92q == pytest.approx((3.0 / 16.0) * SQ, rel=1e-10)
    assert c5p == pytest.approx(1.5, rel=1e-14)
    assert c5q == pytest.approx(0.75, rel=1e-14)


def test_conductor_dielectric_coeffs_against_oracle():
    # 60-digit evaluations of the hypergeometric brackets (frozen)
    _, c92q2, _, _ = conductor_dielectric_coeffs(2.0)
    assert c92q2 == pytest.approx(0.3260851041462071, rel=1e-11)
    _, c92q3, _, _ = conductor_dielectric_coeffs(3.0)
    assert c92q3 == pytest.approx(0.3468734771711930, rel=1e-11)
    # inside the Taylor window: pinned 60-digit value
    assert conductor_dielectric_coeffs(1.00005)[1] == pytest.approx(0.2350070817425702, abs=1e-11)
    # crossing the window edge moves the value only by slope * dn
    a = conductor_dielectric_coeffs(1.0 + 0.99e-4)[1]
    b = conductor_dielectric_coeffs(1.0 + 1.01e-4)[1]
    assert a == pytest.approx(b, abs=1e-6)
    e = ret_F_conductor_dielectric_hs(2.0, 2.0, 50.0)
    assert e.F_par < 0.5 and e.F_perp < 0.5


def test_plasma_dielectric_c5_identities():
    c5p, c5q = plasma_dielectric_c5(1.0)
    assert c5p == 1.25 and c5q == 0.75    # exact float arithmetic
    c5p2, _ = plasma_dielectric_c5(2.0)
    assert c5p2 == pytest.approx(13.0 / 12.0, rel=1e-15)
    # n -> inf: C5_par -> 1, C5_perp -> 2/5
    c5pi, c5qi = plasma_dielectric_c5(1e9)
    assert c5pi == pytest.approx(1.0, abs=1e-8)
    assert c5qi == pytest.approx(0.4, abs=1e-8)
    e = ret_F_plasma_dielectric_hs(1.0, 1.0, 20.0)
    assert e.F_par == pytest.approx(0.5 * (1 - 1.25 / 20), rel=1e-14)


def test_nr_F_plasma_limits():
    # perfect reflector constants
    e = nr_F_plasma(1e8, 0.01)
    assert e.F_par / 0.01 == pytest.approx(math.pi / 8, rel=1e-6)
    assert e.F_perp / 0.01 == pytest.approx(math.pi / 4, rel=1e-6)
    # vacuum limit
    e = nr_F_plasma(1e-5, 0.01)
    assert abs(e.F_par) < 1e-7 and abs(e.F_perp) < 1e-7
    assert e.regime_tag == "nonretarded"


def test_nr_F_plasma_matches_exact():
    for wp in (0.29, 1.0, 2.0):
        e = nr_F_plasma(wp, 0.003)
        fp, fq = F_plasma_closed(wp, 0.003)
        assert e.F_par == pytest.approx(fp, rel=1e-4)
        assert e.F_perp == pytest.approx(fq, rel=1e-4)


def test_nr_F_plasma_matches_image_route():
    # independent check: the nonretarded bracket equals
    # (1/4) * image_factor_integral for the plasma/vacuum pair
    from cpaniso.shifts import image_factor_integral
    for wp in (0.29, 1.0, 3.0):
        m = Material(lossless_plasma(wp), vacuum())
        bracket = nr_F_plasma(wp, 1.0).F_par
        assert bracket == pytest.approx(image_factor_integral(m, 1.0) / 4.0, rel=1e-10)


def test_ret_F_plasma_values_and_limit():
    e = ret_F_plasma(2.0, 50.0)
    expect_par = 0.5 - (5 / 8) / 50 + (5 - 8) / 8 / 2500 + (648 - 105) / 256 / 125000
    assert e.F_par == pytest.approx(expect_par, rel=1e-13)
    assert ret_F_plasma(2.0, 1e9).F_par == pytest.approx(0.5, abs=1e-9)
    assert ret_F_plasma(2.0, 1e9).F_perp == pytest.approx(0.5, abs=1e-9)


def test_ret_F_plasma_matches_exact():
    e = ret_F_plasma(2.0, 50.0)
    fp, fq = F_plasma_closed(2.0, 50.0)
    assert abs(e.F_par - fp) / 0.5 < 0.01
    assert abs(e.F_perp - fq) / 0.5 < 0.01


def test_asymptote_improves_into_regime():
    # relative error must drop by >= 2x when moving 3x deeper into a regime
    for wp in (0.29, 2.0):
        err = {}
        for zw in (0.03, 0.01):
            fp, _ = F_plasma_closed(wp, zw)
            err[zw] = abs(nr_F_plasma(wp, zw).F_par - fp) / fp
        assert err[0.01] <= err[0.03] / 2.0
        err = {}
        for zw in (30.0, 90.0):
            fp, _ = F_plasma_closed(wp, zw)
            err[zw] = abs(ret_F_plasma(wp, zw).F_par - fp) / fp
        assert err[90.0] <= err[30.0] / 2.0


def test_ret_F_slab_conductor_values():
    e = ret_F_slab_conductor(1.0)
    expect = 0.125 + 3 * (0.5 - 0.125 + math.log(3.0) / 16 - math.log(1.5))
    assert e.F_par == pytest.approx(expect, rel=1e-13)
    assert e.F_par == pytest.approx(0.2396, abs=2e-4)
    # perfect-reflector recovery and empty-slab limit
    big = ret_F_slab_conductor(1e6)
    assert big.F_par == pytest.approx(0.5, abs=1e-4)
    assert big.F_perp == pytest.approx(0.5, abs=1e-4)
    small = ret_F_slab_conductor(1e-9)
    assert abs(small.F_par) < 1e-6 and abs(small.F_perp) < 1e-6


def test_ret_F_slab_dielectric_values():
    z = ret_F_slab_dielectric(1.0, 1.0, 0.37)
    assert z.F_par == 0.0 and z.F_perp == pytest.approx(0.0, abs=1e-16)
    e = ret_F_slab_dielectric(2.0, 2.0, 0.1)
    assert e.F_par == pytest.approx(0.0575, rel=1e-12)
    assert e.F_perp == pytest.approx(0.1 * (1.0 - 0.2 - 0.1), rel=1e-12)


def test_excited_nr_hs_values():
    m = Material(dielectric(math.sqrt(2.0)), dielectric(math.sqrt(2.0)))  # product 4
    t = Transition(-1.0, 1.0, 1.0)
    dE, dG = excited_nr_hs(t, m, 1.0)
    assert dE == pytest.approx(-(4.0 - 1.0) / 9.0 * 3.0 / (32 * math.pi), rel=1e-13)
    assert dE == pytest.approx(-1.0 / (32 * math.pi), rel=1e-13)
    assert dG == 0.0
    zero = excited_nr_hs(t, Material(vacuum(), vacuum()), 1.0)
    assert zero == (0.0, 0.0)
    with pytest.raises(ValueError):
        excited_nr_hs(Transition(1.0, 1.0, 0.0), m, 1.0)


def test_excited_ret_hs_values():
    # lossless n real, mu_perp = 0, 2|w|Z = pi/2 -> cos term kills the shift
    m = Material(dielectric(2.0), dielectric(2.0))
    t = Transition(-1.0, 1.0, 0.0)
    dE, _ = excited_ret_hs(t, m, math.pi / 4.0)
    assert dE == pytest.approx(0.0, abs=1e-15)
    vacs = excited_ret_hs(Transition(-1.0, 1.0, 1.0), Material(vacuum(), vacuum()), 1.0)
    assert vacs == (0.0, 0.0)


def test_excited_ret_hs_perp_independent():
    t = Transition(-1.0, 0.7, 1.3)
    m1 = Material(drude_conductor(1.0, 0.2), vacuum())
    m2 = Material(drude_conductor(1.0, 0.2), dielectric(3.0))
    m3 = Material(drude_conductor(1.0, 0.2), drude_conductor(0.5, 0.7))
    assert excited_ret_hs(t, m1, 2.0) == excited_ret_hs(t, m2, 2.0) == excited_ret_hs(t, m3, 2.0)
