import math

import pytest

from twinphoton.thermal import (
    FockCutoff,
    choose_cutoff,
    mean_from_temperature,
    tail_mass,
    thermal_weight,
)

NBARS = (0.05, 0.3, 1.0, 2.5, 10.0)


def brute_tail(nbar, n_max, moment_order, extra=2000):
    """Reference tail sum_{n>n_max} p_n (n+2)^m by plain direct summation."""
    return sum(
        thermal_weight(nbar, n) * (n + 2.0) ** moment_order
        for n in range(n_max + 1, n_max + 1 + extra)
    )


def test_thermal_weight_examples():
    assert thermal_weight(1.0, 0) == pytest.approx(0.5, abs=1e-15)
    assert thermal_weight(0.0, 3) == 0.0
    assert thermal_weight(0.0, 0) == 1.0
    assert thermal_weight(0.3, 1) == pytest.approx(0.3 / 1.69, abs=1e-15)


def test_thermal_weight_partial_sums_match_geometric_closed_form():
    for nbar in NBARS:
        r = nbar / (1.0 + nbar)
        total = 0.0
        for n in range(201):
            total += thermal_weight(nbar, n)
            assert total == pytest.approx(1.0 - r ** (n + 1), abs=1e-12)


def test_thermal_weight_ratio_is_constant():
    for nbar in NBARS:
        r = nbar / (1.0 + nbar)
        for n in range(0, 60, 7):
            ratio = thermal_weight(nbar, n + 1) / thermal_weight(nbar, n)
            assert ratio == pytest.approx(r, rel=1e-13)


def test_thermal_weight_rejects_bad_input():
    with pytest.raises(ValueError):
        thermal_weight(-0.5, 0)
    with pytest.raises(ValueError):
        thermal_weight(1.0, -1)


def test_choose_cutoff_vacuum():
    assert choose_cutoff(0.0, 1e-12, 0) == (0, 0.0)
    assert choose_cutoff(0.0, 1e-12, 2) == (0, 0.0)


def test_choose_cutoff_geometric_example():
    n, tail = choose_cutoff(1.0, 1e-6, 0)
    assert n == 19
    assert tail == pytest.approx(0.5**20, rel=1e-12)


def test_choose_cutoff_weighted_is_minimal_against_brute_force():
    # the returned N certifies the bound and N-1 must not
    for nbar, tol in ((1.0, 1e-6), (0.3, 1e-8), (2.5, 1e-6)):
        for moment_order in (1, 2):
            n, tail = choose_cutoff(nbar, tol, moment_order)
            assert tail < tol
            assert brute_tail(nbar, n, moment_order) < tol
            assert brute_tail(nbar, n - 1, moment_order) >= tol
            # reported tail is a valid upper bound on the true tail
            assert tail >= brute_tail(nbar, n, moment_order) * (1.0 - 1e-12)


def test_choose_cutoff_monotone_in_tolerance():
    for nbar in NBARS:
        last = -1
        for tol in (1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12):
            n, _ = choose_cutoff(nbar, tol, 2)
            assert n >= last
            last = n


def test_choose_cutoff_rejects_bad_input():
    with pytest.raises(ValueError):
        choose_cutoff(1.0, 0.0, 2)
    with pytest.raises(ValueError):
        choose_cutoff(1.0, -1e-6, 2)
    with pytest.raises(ValueError):
        choose_cutoff(1.0, 1e-6, 3)
    with pytest.raises(ValueError):
        choose_cutoff(-1.0, 1e-6, 2)


def test_tail_mass_matches_brute_force():
    for nbar in (0.3, 1.0, 2.5):
        for n_max in (0, 3, 12):
            for moment_order in (0, 1, 2):
                assert tail_mass(nbar, n_max, moment_order) == pytest.approx(
                    brute_tail(nbar, n_max, moment_order), rel=1e-10
                )


def test_fock_cutoff_choose_respects_tolerance():
    for tol in (1e-6, 1e-10):
        cutoff = FockCutoff.choose(1.0, 0.3, tol)
        assert cutoff.tail_bound < tol
        # per-mode tails are certified independently and add up
        assert brute_tail(1.0, cutoff.n_max1, 2) + brute_tail(0.3, cutoff.n_max2, 2) < tol


def test_fock_cutoff_vacuum_is_exact():
    assert FockCutoff.choose(0.0, 0.0, 1e-12) == FockCutoff(0, 0, 0.0)


def test_fock_cutoff_explicit_reports_computed_tail():
    cutoff = FockCutoff.explicit(10, 12, 1.0, 1.0)
    expected = brute_tail(1.0, 10, 2) + brute_tail(1.0, 12, 2)
    assert cutoff.n_max1 == 10 and cutoff.n_max2 == 12
    assert cutoff.tail_bound == pytest.approx(expected, rel=1e-10)


def test_mean_from_temperature_examples():
    assert mean_from_temperature(math.log(2.0)) == pytest.approx(1.0, abs=1e-15)
    assert mean_from_temperature(100.0) < 1e-40
    assert mean_from_temperature(math.log(13.0 / 3.0)) == pytest.approx(0.3, abs=1e-12)


def test_mean_from_temperature_rejects_bad_ratio():
    for x in (0.0, -1.0, math.nan):
        with pytest.raises(ValueError):
            mean_from_temperature(x)
