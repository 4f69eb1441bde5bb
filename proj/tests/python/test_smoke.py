import cmath

import pytest

import gl2gauss as g


def test_ring():
    r = g.Ring(3, 2)
    assert (r.modulus, r.unit_order, r.generator) == (9, 6, 2)
    assert r.dlog(5) == 5
    with pytest.raises(g.Error):
        g.Ring(4, 2)


def test_gauss_sum_closed_matches_brute():
    r = g.Ring(5, 2)
    for c in range(r.unit_order):
        for x in (1, 3, 5, 7):
            assert g.g_closed(r, c, x) == g.g_brute(r, c, x)


def test_gauss_sum_against_floating_point():
    r = g.Ring(3, 2)
    c = 1
    expected = sum(
        cmath.exp(2j * cmath.pi * (c * r.dlog(x) / 6 + x / 9)) for x in range(1, 9) if x % 3
    )
    assert abs(complex(g.g_closed(r, c, 1)) - expected) < 1e-9


def test_odoni_level_two():
    r = g.Ring(3, 2)
    assert g.odoni_value(r) == g.root_of_unity(72, 9, 1) * 3


def test_tau_vanishes_for_p_dividing_r():
    r = g.Ring(3, 2)
    spec = g.CharSpec("x2", alpha=0, eps=2, omega=[0, 0, 0])
    assert g.tau(r, spec, 3).is_zero()
    assert g.degree(r, spec) == 6


def test_tau_closed_matches_subgroup_sum():
    r = g.Ring(3, 2)
    for fam in ("x1", "x2", "x3"):
        for spec in g.enumerate_specs(fam, r)[::5]:
            assert g.tau(r, spec, 1) == g.tau(r, spec, 1, method="subgroup")


def test_character_degree_at_identity():
    r = g.Ring(3, 2)
    spec = g.enumerate_specs("x3", r)[0]
    assert g.chi(r, spec, [1, 0, 0, 1]).as_integer() == 8


def test_counts():
    assert g.counts(g.Ring(3, 2)) == {"X1": 12, "X2": 24, "X3": 18}


def test_psum():
    res = g.psum(3, 2, 2, 2)
    assert res["case"] == "i"
    assert res["P1"].as_integer() == 6
    assert res["P"] == g.psum_brute(3, 2, 2, 2)


def test_x4_recursion():
    r = g.Ring(3, 3)
    theta = g.enumerate_specs("x2", g.Ring(3, 2))[0]
    value, method = g.tau_x4(r, 0, theta, 3)
    assert method == "recursion-closed"
    zero, _ = g.tau_x4(r, 1, theta, 3)
    assert zero.is_zero()
    assert not value.is_zero()


def test_verify_suite():
    out = g.verify("gauss", 3, 2)
    assert out["passed"]
    assert len(out["cases"]) == 6
