"""End-to-end smoke tests for the python bindings."""

import pytest

import mapforge as mf


def test_burnside_k4():
    assert mf.burnside_count("K4", "L", "iso") == 11
    assert mf.burnside_count("K4", "O", "iso") == 3
    assert mf.burnside_count("K4", "N", "iso") == 8


def test_orbit_partition_matches_burnside():
    reps = mf.orbit_partition("K4", "L", "iso")
    assert len(reps) == 11
    keys = [r.canonical_key() for r in reps]
    assert keys == sorted(keys)


def test_map_invariants_roundtrip():
    reps = mf.orbit_partition("B2", "O", "iso")
    torus = [r for r in reps if r.invariants()["genus"] == 1]
    assert len(torus) == 1
    inv = torus[0].invariants()
    assert inv["v"] == 1 and inv["e"] == 2 and inv["chi"] == 0
    assert torus[0].dual().invariants()["chi"] == 0


def test_rooted_poly_display():
    assert mf.rooted_poly("B2")["display"] == "4/x^2+5/x+2+x"


def test_kn_counts_variants():
    assert mf.kn_counts(5) == (45, 1080, 1035)
    with pytest.raises(ValueError):
        mf.kn_counts(5, "proof")


def test_bouquet_class_counts():
    assert mf.bouquet_class_counts(4) == (17, 173, 156)


def test_smanifold_fixtures():
    o20, p10 = mf.O20(), mf.P10()
    assert o20.invariants()["chi"] == 2 and p10.invariants()["chi"] == 1
    assert mf.classify(o20) == "D1"
    assert mf.subdivide(o20).invariants()["f"] == 80


def test_lift_quotient_roundtrip():
    base = mf.Map(1, [3, 2, 1, 0])  # one loop on the plane
    lifted, deck = mf.lift_with_deck(base, 3, [1, 2, 1, 2])
    assert lifted.invariants()["v"] == 3
    quotient, theta = mf.quotient(lifted, deck)
    assert quotient.is_isomorphic(base)
    assert theta is not None


def test_budget_error():
    with pytest.raises(RuntimeError):
        mf.burnside_count("K4", "L", "iso", budget=10)
