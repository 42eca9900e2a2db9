"""Tests for the numeric zeta/gamma helpers and the leading-term regimes."""

from __future__ import annotations

import math

import numpy as np
import pytest

from circlepol.asymptotics import (
    asymptotic_ratio,
    classify_regime,
    dominant_term,
    gamma_real,
    zeta_real,
)
from circlepol.exact_series import (
    bernoulli_numbers,
    exact_polarization_polynomial,
    zeta_even_exact,
)

# Apery's constant, zeta(3), to full double precision.
ZETA_3 = 1.2020569031595942854


def _zeta_euler_maclaurin(s: float, cutoff: int = 24, order: int = 6) -> float:
    """Independent zeta oracle: partial sum plus Euler-Maclaurin tail.

    zeta(s) = sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)

    With cutoff 24 and six correction terms the truncation error is far
    below 1e-15 for every s exercised here.
    """
    total = sum(k ** -s for k in range(1, cutoff))
    total += cutoff ** (1.0 - s) / (s - 1.0)
    total += 0.5 * cutoff ** -s
    bern = bernoulli_numbers(2 * order)
    rising = s
    for j in range(1, order + 1):
        total += (float(bern[2 * j]) / math.factorial(2 * j)
                  * rising * cutoff ** (1.0 - s - 2 * j))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return total


# ---------------------------------------------------------------------------
# zeta_real
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_zeta_real_matches_exact_even_values(k):
    exact = float(zeta_even_exact(k)) * math.pi ** (2 * k)
    assert math.isclose(zeta_real(2.0 * k), exact, rel_tol=1e-12)


def test_zeta_oracle_self_check_on_even_values():
    # The Euler-Maclaurin oracle must itself reproduce the exact values
    # before we trust it at odd arguments.
    for k in (1, 2, 3):
        exact = float(zeta_even_exact(k)) * math.pi ** (2 * k)
        assert math.isclose(_zeta_euler_maclaurin(2.0 * k), exact,
                            rel_tol=1e-14)


def test_zeta_real_at_three_against_two_oracles():
    assert math.isclose(_zeta_euler_maclaurin(3.0), ZETA_3, rel_tol=1e-13)
    assert math.isclose(zeta_real(3.0), ZETA_3, rel_tol=1e-12)


@pytest.mark.parametrize("s", [1.0 + 1e-6, 1.5, 2.5, 7.3, 19.0, 49.5])
def test_zeta_real_matches_euler_maclaurin_across_range(s):
    assert math.isclose(zeta_real(s), _zeta_euler_maclaurin(s),
                        rel_tol=1e-12)


def test_zeta_real_is_decreasing_and_tends_to_one():
    values = [zeta_real(s) for s in (1.1, 1.5, 2.0, 4.0, 10.0, 40.0)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert math.isclose(zeta_real(50.0), 1.0, rel_tol=1e-14)


@pytest.mark.parametrize("s", [1.0, 0.5, 0.0, -2.0])
def test_zeta_real_rejects_arguments_at_or_below_one(s):
    with pytest.raises(ValueError):
        zeta_real(s)


# ---------------------------------------------------------------------------
# gamma_real
# ---------------------------------------------------------------------------


def test_gamma_real_special_values():
    assert math.isclose(gamma_real(0.5), math.sqrt(math.pi), rel_tol=1e-13)
    assert math.isclose(gamma_real(1.0), 1.0, rel_tol=1e-13)
    assert math.isclose(gamma_real(1.5), math.sqrt(math.pi) / 2.0,
                        rel_tol=1e-13)


def test_gamma_real_matches_factorials():
    for m in range(1, 16):
        assert math.isclose(gamma_real(float(m)), math.factorial(m - 1),
                            rel_tol=1e-12)


def test_gamma_real_matches_stdlib_on_random_arguments():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.05, 12.0, size=50):
        assert math.isclose(gamma_real(float(x)), math.gamma(float(x)),
                            rel_tol=1e-12)


def test_gamma_real_recurrence():
    rng = np.random.default_rng(11)
    for x in rng.uniform(0.1, 8.0, size=20):
        x = float(x)
        assert math.isclose(gamma_real(x + 1.0), x * gamma_real(x),
                            rel_tol=1e-12)


@pytest.mark.parametrize("x", [0.0, -0.5, -3.0])
def test_gamma_real_rejects_nonpositive(x):
    with pytest.raises(ValueError):
        gamma_real(x)


# ---------------------------------------------------------------------------
# dominant_term / classify_regime
# ---------------------------------------------------------------------------


def test_dominant_term_exponent_two_is_quarter_n_squared():
    for n in (2, 5, 16, 1000):
        assert math.isclose(dominant_term(2.0, n), n * n / 4.0,
                            rel_tol=1e-12)


def test_dominant_term_exponent_four_is_n_fourth_over_48():
    for n in (3, 10, 64):
        assert math.isclose(dominant_term(4.0, n), n ** 4 / 48.0,
                            rel_tol=1e-12)


def test_dominant_term_exponent_zero_is_linear_identity():
    # At exponent 0 the gamma ratio collapses: Gamma(1/2)/Gamma(1) = sqrt(pi),
    # so the prefactor is exactly 1 and the term equals n.
    for n in (1, 2, 7, 500):
        assert math.isclose(dominant_term(0.0, n), float(n), rel_tol=1e-12)


def test_dominant_term_at_boundary_is_n_log_n_over_pi():
    assert math.isclose(dominant_term(1.0, 3), 3.0 * math.log(3.0) / math.pi,
                        rel_tol=1e-15)
    assert dominant_term(1.0, 1) == 0.0


def test_dominant_term_monotone_in_n():
    for s in (0.5, 1.0, 2.0, 3.5):
        values = [dominant_term(s, n) for n in range(2, 40)]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_dominant_term_sublinear_regime_is_exactly_linear():
    for s in (0.25, 0.5, 0.9):
        per_point = [dominant_term(s, n) / n for n in (2, 10, 100)]
        assert max(per_point) - min(per_point) < 1e-12 * per_point[0]


def test_dominant_term_rejects_bad_arguments():
    with pytest.raises(ValueError):
        dominant_term(-0.5, 4)
    with pytest.raises(ValueError):
        dominant_term(2.0, 0)


def test_classify_regime_tags():
    assert classify_regime(2.0).tag == "s_gt_1"
    assert classify_regime(1.0).tag == "s_eq_1"
    assert classify_regime(0.5).tag == "s_in_0_1"
    assert classify_regime(0.0).tag == "s_in_0_1"


def test_classify_regime_boundary_tolerance():
    assert classify_regime(1.0 + 1e-15).tag == "s_eq_1"
    assert classify_regime(1.0 - 1e-15).tag == "s_eq_1"
    assert classify_regime(1.0 + 1e-13).tag == "s_gt_1"
    assert classify_regime(1.0 - 1e-13).tag == "s_in_0_1"


def test_classify_regime_dominant_callable_agrees():
    regime = classify_regime(3.0)
    for n in (2, 9, 30):
        assert regime.dominant(n) == dominant_term(3.0, n)


# ---------------------------------------------------------------------------
# asymptotic_ratio
# ---------------------------------------------------------------------------


def test_asymptotic_ratio_exact_polynomial_exponent_two():
    poly = exact_polarization_polynomial(1)
    for n in (2, 8, 64):
        value = float(poly.evaluate(n))
        assert math.isclose(asymptotic_ratio(2.0, n, value), 1.0,
                            rel_tol=1e-12)


def test_asymptotic_ratio_exact_polynomial_exponent_four():
    # n^2/24 + n^4/48 against the n^4/48 leading term: ratio is 1 + 2/n^2.
    poly = exact_polarization_polynomial(2)
    for n in (4, 8, 16, 32):
        value = float(poly.evaluate(n))
        expected = 1.0 + 2.0 / (n * n)
        assert math.isclose(asymptotic_ratio(4.0, n, value), expected,
                            rel_tol=1e-12)


def test_asymptotic_ratio_rejects_vanishing_dominant_term():
    with pytest.raises(ValueError):
        asymptotic_ratio(1.0, 1, 0.7)
