"""Gap-system solver, homotopy, minimum curve, and the pair-spread checker."""

import json
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from circlepol import (TWO_PI, InvalidGapVectorsError, apply_transport,
                       check_pair_inequality, config_from_gaps, custom_kernel,
                       equally_spaced, homotopy_config, min_curve,
                       polarization, riesz_kernel, rotate, solve_gap_system,
                       solve_transport)
from helpers import cyclic_allclose, random_config


def second_difference(deltas):
    d = np.asarray(deltas)
    return -np.roll(d, 1) + 2.0 * d - np.roll(d, -1)


def test_identity_transport_is_zero():
    rng = np.random.default_rng(20)
    c = random_config(rng, 5)
    plan = solve_transport(c, c)
    assert_allclose(plan.deltas, 0.0, atol=1e-12)


def test_rotated_target_gives_zero_plan():
    rng = np.random.default_rng(21)
    c = random_config(rng, 4, min_sep=0.1, rotate=False)
    plan = solve_transport(c, rotate(c, 0.5))
    # same gap multiset, but rotation may shift the gap labels cyclically;
    # identical labelled gaps happen when the rotation keeps the order
    if plan.source_gaps == plan.target_gaps:
        assert_allclose(plan.deltas, 0.0, atol=1e-12)


def test_worked_three_point_plan():
    src = config_from_gaps([math.pi, math.pi / 2, math.pi / 2])
    plan = solve_transport(src, equally_spaced(3))
    assert_allclose(plan.deltas, (0.0, math.pi / 6, math.pi / 6), atol=1e-12)
    assert plan.zero_index == 0
    assert plan.max_delta == pytest.approx(math.pi / 6)


def test_plan_invariants_on_random_pairs():
    rng = np.random.default_rng(22)
    for _ in range(100):
        n = int(rng.integers(2, 65))
        source = random_config(rng, n)
        target = random_config(rng, n)
        plan = solve_transport(source, target)
        deltas = np.array(plan.deltas)
        assert deltas.min() >= 0.0
        assert deltas.min() <= 1e-12  # at least one zero
        residual = second_difference(deltas) - (
            np.array(plan.target_gaps) - np.array(plan.source_gaps))
        assert np.abs(residual).max() <= 1e-10


def test_transported_config_matches_target_gaps():
    rng = np.random.default_rng(23)
    for _ in range(50):
        n = int(rng.integers(2, 17))
        source = random_config(rng, n)
        target = random_config(rng, n)
        plan = solve_transport(source, target)
        deltas = np.array(plan.deltas)
        sep = source.separation
        if deltas.max() > sep / 2.0:
            continue  # beyond the step bound; endpoint still checked via gaps
        moved = apply_transport(source, deltas)
        assert cyclic_allclose(moved.gaps, target.gaps, atol=1e-9)


def test_solver_is_deterministic():
    rng = np.random.default_rng(24)
    a = random_config(rng, 9)
    b = random_config(rng, 9)
    assert solve_transport(a, b) == solve_transport(a, b)


def test_solver_matches_least_squares_oracle():
    rng = np.random.default_rng(25)
    for n in (2, 3, 5, 16, 40):
        beta = rng.normal(size=n)
        beta -= beta.mean()
        mine = solve_gap_system(beta)
        matrix = (2.0 * np.eye(n) - np.roll(np.eye(n), 1, axis=1)
                  - np.roll(np.eye(n), -1, axis=1))
        general, *_ = np.linalg.lstsq(matrix, beta, rcond=None)
        general -= general.min()
        assert_allclose(mine, general, atol=1e-9)


def test_solver_input_validation():
    with pytest.raises(InvalidGapVectorsError):
        solve_gap_system([0.5, 0.5, 0.5])
    with pytest.raises(ValueError):
        solve_transport(equally_spaced(3), equally_spaced(4))


def test_homotopy_endpoints_and_interpolation():
    src = config_from_gaps([math.pi, math.pi / 2, math.pi / 2])
    plan = solve_transport(src, equally_spaced(3))
    at0 = homotopy_config(src, plan, 0.0)
    assert at0.angles == pytest.approx(src.angles, abs=1e-12)
    at1 = homotopy_config(src, plan, 1.0)
    assert_allclose(at1.gaps, np.full(3, TWO_PI / 3), atol=1e-10)
    mid = homotopy_config(src, plan, 0.5)
    want = (5 * math.pi / 6, 7 * math.pi / 12, 7 * math.pi / 12)
    assert cyclic_allclose(mid.gaps, want, atol=1e-10)
    with pytest.raises(ValueError):
        homotopy_config(src, plan, 1.5)


def test_homotopy_anchor_never_moves_and_separation_grows():
    rng = np.random.default_rng(26)
    src = random_config(rng, 6)
    plan = solve_transport(src, equally_spaced(6))
    anchor = src.angles[plan.zero_index]
    for t in np.linspace(0.0, 1.0, 7):
        cfg = homotopy_config(src, plan, float(t))
        assert min(abs(a - anchor) for a in cfg.angles) < 1e-12
        assert cfg.separation >= t * TWO_PI / 6 - 1e-12


def test_min_curve_constant_for_equally_spaced_source():
    src = equally_spaced(4)
    plan = solve_transport(src, equally_spaced(4))
    rows = min_curve(riesz_kernel(2), src, plan, 5)
    assert_allclose(rows[:, 1], rows[0, 1], rtol=1e-12)


def test_min_curve_worked_example_monotone_to_endpoint():
    src = config_from_gaps([math.pi, math.pi / 2, math.pi / 2])
    plan = solve_transport(src, equally_spaced(3))
    rows = min_curve(riesz_kernel(2), src, plan, 101)
    h = rows[:, 1]
    assert np.all(np.diff(h) >= -1e-10)
    assert h[-1] == pytest.approx(9.0 / 4.0, abs=1e-10)
    assert rows[0, 0] == 0.0 and rows[-1, 0] == 1.0
    with pytest.raises(ValueError):
        min_curve(riesz_kernel(2), src, plan, 1)


def test_min_curve_start_bounds_polarization():
    rng = np.random.default_rng(27)
    k = riesz_kernel(2)
    for n in (3, 5, 8):
        src = random_config(rng, n)
        plan = solve_transport(src, equally_spaced(n))
        rows = min_curve(k, src, plan, 11)
        assert rows[0, 1] >= polarization(k, src).value - 1e-12
        assert rows[-1, 1] == pytest.approx(
            polarization(k, equally_spaced(n)).value, abs=1e-10)


def test_plan_json_round_trip():
    src = config_from_gaps([math.pi, math.pi / 2, math.pi / 2])
    plan = solve_transport(src, equally_spaced(3))
    parsed = json.loads(plan.to_json())
    assert parsed == plan.to_dict()
    assert parsed["deltas"] == pytest.approx(plan.deltas)


def test_pair_inequality_strict_case():
    report = check_pair_inequality(riesz_kernel(2), 0.0, math.pi / 2,
                                   math.pi / 8, samples=1000)
    assert report.max_violation == 0.0
    assert report.between_min_margin > 0.0
    assert report.complement_min_margin > 0.0
    assert report.strict_expected


def test_pair_inequality_linear_kernel_non_strict():
    linear = custom_kernel(lambda t: math.pi - t, value_at_zero=math.pi,
                           strictly_convex=False, label="linear")
    report = check_pair_inequality(linear, 0.0, math.pi / 2,
                                   math.pi / 8, samples=1000)
    assert report.max_violation <= 1e-12
    assert not report.strict_expected


def test_pair_inequality_coincident_convention():
    report = check_pair_inequality(riesz_kernel(2), 1.0, 1.0, 0.3,
                                   samples=500)
    assert report.between_min_margin == math.inf
    assert report.between_max_violation == 0.0
    assert report.complement_min_margin > 0.0


def test_pair_inequality_eps_validation():
    # complement from z2 = pi/2 back to z1 = 0 has length 3*pi/2
    with pytest.raises(ValueError):
        check_pair_inequality(riesz_kernel(2), 0.0, math.pi / 2,
                              3 * math.pi / 4)
    with pytest.raises(ValueError):
        check_pair_inequality(riesz_kernel(2), 0.0, math.pi / 2, 0.0)
