"""
Tests for the arithmetico-geometric cosine sum and odd-cycle distance spectra.
"""

import math

import numpy as np
import pytest
from pytest import mark, raises

from conftest import pinned_settings
from skew_gain.analyzers.cycle_formulas import (
    agp_denominator,
    agp_numerator,
    agp_sum,
    agp_sum_closed,
    agp_sum_direct,
    canonical_odd_cycle,
    cycle_distance_spectrum_closed,
    cycle_distance_spectrum_numeric,
    fallback_indices,
    singular_indices,
    switched_odd_cycle,
    unit_cycle_eigenvalue,
    unit_cycle_spectrum_closed,
)
from skew_gain.analyzers.spectral import hermitian_eigenvalues
from skew_gain.exceptions import BadModulusError, EvenLengthError, SingularDenominatorError, ValidationError
from skew_gain.models.cycle_params import CycleParams

CYCLE_LENGTHS = (3, 5, 7, 9, 11)
CYCLE_ARGUMENTS = (0.0, math.pi / 3, 1.0, math.pi)

GRID = [(n, k, theta) for n in CYCLE_LENGTHS for k in (0.5, 1.0, 2.0) for theta in CYCLE_ARGUMENTS]

UNIT_GRID = [(n, theta) for n in CYCLE_LENGTHS for theta in CYCLE_ARGUMENTS]

# Cycle arguments just off the singular set, where f / g and the sine form cancel
NEAR_SINGULAR = [(n, theta) for n in CYCLE_LENGTHS for theta in (1e-5, 1e-2, 0.05)]


# ============================================================================
# Cosine sums
# ============================================================================

@mark.parametrize("p k theta expected".split(), [
    (3, 1.0, 0.0, 6.0),
    (2, 2.0, math.pi / 2, -8.0),
    (1, 0.5, math.pi, -0.5),
    (4, 1.0, math.pi, 2.0),
])
def test_direct_sum(p, k, theta, expected):
    assert agp_sum_direct(p, k, theta) == pytest.approx(expected, abs=1e-12)


@mark.parametrize("p k theta".split(), [
    (1, 0.5, 0.3),
    (2, 2.0, math.pi / 2),
    (4, 1.0, math.pi),
    (7, 1.5, -2.0),
])
def test_closed_form_matches_direct(p, k, theta):
    closed = agp_sum_closed(p, k, theta)
    assert closed == pytest.approx(agp_sum_direct(p, k, theta), rel=1e-10, abs=1e-10)
    assert closed == pytest.approx(agp_numerator(p, k, theta) / agp_denominator(k, theta))


def test_closed_form_on_seeded_samples():
    rng = np.random.default_rng(20240611)
    for _ in range(1000):
        p = int(rng.integers(1, 51))
        k = float(rng.uniform(0.2, 3.0))
        theta = float(rng.uniform(0.05, 2 * math.pi - 0.05))
        direct = agp_sum_direct(p, k, theta)
        assert abs(agp_sum_closed(p, k, theta) - direct) <= 1e-9 * (1 + abs(direct)), (p, k, theta)


def test_singular_denominator():
    with raises(SingularDenominatorError) as info:
        agp_sum_closed(3, 1.0, 0.0)
    assert info.value.k == 1.0
    assert agp_sum(3, 1.0, 0.0) == 6.0


@mark.parametrize("p k".split(), [(0, 1.0), (-2, 1.0), (3, 0.0), (3, -1.0), (3, math.inf)])
def test_sum_argument_validation(p, k):
    with raises((ValidationError, BadModulusError)):
        agp_sum_direct(p, k, 0.0)


# ============================================================================
# Cycle parameters and constructions
# ============================================================================

@mark.parametrize("n", [1, 2, 4, 10])
def test_even_or_short_cycle_rejected(n):
    with raises(EvenLengthError):
        CycleParams(n, 1.0, 0.0)


@mark.parametrize("k", [0.0, -2.0, math.nan])
def test_bad_modulus_rejected(k):
    with raises(BadModulusError):
        CycleParams(5, k, 0.0)


def test_theta_j():
    params = CycleParams(5, 1.0, math.pi)
    assert params.p == 2
    assert params.theta_j(0) == pytest.approx(math.pi / 5)
    assert params.theta_j(2) == pytest.approx(math.pi)


def test_canonical_cycle_gains(balance):
    params = CycleParams(5, 1.5, 1.0)
    g = canonical_odd_cycle(params)
    assert g.gain(0, 1) == 1.5
    assert g.gain(4, 0) == pytest.approx(1.5 * complex(math.cos(1.0), math.sin(1.0)))
    assert balance.cycle_gain(g, range(5)) == pytest.approx(1.5 ** 5 * complex(math.cos(1.0), math.sin(1.0)))


def test_switched_cycle_keeps_cycle_gain(balance):
    params = CycleParams(7, 0.5, math.pi / 3)
    g = switched_odd_cycle(params, seed=7)
    assert all(abs(z) == pytest.approx(0.5) for _, _, z in g.oriented_edges())
    expected = 0.5 ** 7 * complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    assert balance.cycle_gain(g, range(7)) == pytest.approx(expected)


# ============================================================================
# Spectra
# ============================================================================

def test_unit_triangle_spectrum():
    spectrum = cycle_distance_spectrum_closed(CycleParams(3, 1.0, 0.0))
    assert spectrum.values == pytest.approx((-1.0, -1.0, 2.0))


def test_unit_pentagon_with_negative_cycle_gain():
    spectrum = cycle_distance_spectrum_closed(CycleParams(5, 1.0, math.pi))
    assert spectrum.values == pytest.approx((-3.8541, -3.8541, 2.0, 2.8541, 2.8541), abs=1e-3)


@mark.parametrize("n k theta".split(), GRID)
def test_closed_spectrum_matches_numeric(n, k, theta):
    params = CycleParams(n, k, theta)
    closed = cycle_distance_spectrum_closed(params).as_array()
    numeric = cycle_distance_spectrum_numeric(params, pinned_settings()).as_array()
    np.testing.assert_allclose(closed, numeric, rtol=1e-10, atol=1e-8)
    assert closed.sum() == pytest.approx(0, abs=1e-8 * (1 + np.abs(closed).max()))


@mark.parametrize("n theta".split(), UNIT_GRID)
def test_unit_sine_form_agrees_with_general_closed_form(n, theta):
    unit = unit_cycle_spectrum_closed(n, theta).as_array()
    general = cycle_distance_spectrum_closed(CycleParams(n, 1.0, theta)).as_array()
    np.testing.assert_allclose(unit, general, atol=1e-8)


@mark.parametrize("n theta".split(), NEAR_SINGULAR)
def test_unit_sine_form_near_singular_arguments(n, theta):
    unit = unit_cycle_spectrum_closed(n, theta).as_array()
    numeric = cycle_distance_spectrum_numeric(CycleParams(n, 1.0, theta), pinned_settings()).as_array()
    np.testing.assert_allclose(unit, numeric, atol=1e-8)


@mark.parametrize("k", [1.0, 0.999])
@mark.parametrize("n theta".split(), NEAR_SINGULAR)
def test_closed_spectrum_near_singular_arguments(n, theta, k):
    params = CycleParams(n, k, theta)
    closed = cycle_distance_spectrum_closed(params).as_array()
    numeric = cycle_distance_spectrum_numeric(params, pinned_settings()).as_array()
    np.testing.assert_allclose(closed, numeric, atol=1e-8)


def test_unit_triangle_just_off_zero_argument():
    # Largest eigenvalue of the triangle tends to 2 as theta -> 0
    spectrum = unit_cycle_spectrum_closed(3, 1e-5)
    assert spectrum.values[-1] == pytest.approx(2.0 * math.cos(1e-5 / 3), abs=1e-10)


def test_unit_sine_form_values():
    assert unit_cycle_eigenvalue(3, 0.0) == pytest.approx(2.0)
    assert unit_cycle_eigenvalue(3, 2 * math.pi / 3) == pytest.approx(-1.0)


def test_unit_sine_form_rejects_even_length():
    with raises(EvenLengthError):
        unit_cycle_spectrum_closed(6, 0.0)


def test_switched_cycle_is_cospectral_with_canonical(distance_matrices):
    params = CycleParams(9, 2.0, 1.0)
    switched = hermitian_eigenvalues(distance_matrices.distance_matrix(switched_odd_cycle(params, seed=11)))
    np.testing.assert_allclose(switched.as_array(), cycle_distance_spectrum_closed(params).as_array(),
                               rtol=1e-10, atol=1e-8)


@mark.parametrize("n k theta expected".split(), [
    (5, 1.0, 0.0, [0]),
    (5, 1.0, math.pi, []),
    (5, 2.0, 0.0, []),
    (3, 1.0, 2 * math.pi, [2]),
])
def test_singular_indices(n, k, theta, expected):
    assert singular_indices(CycleParams(n, k, theta)) == expected


@mark.parametrize("n k theta expected".split(), [
    (3, 1.0, 0.0, [0]),
    (3, 1.0, 1e-2, [0]),
    (5, 1.0, math.pi, []),
    (5, 2.0, 0.0, []),
    (7, 0.999, 0.0, [0]),
])
def test_fallback_indices(n, k, theta, expected):
    params = CycleParams(n, k, theta)
    assert fallback_indices(params) == expected
    assert set(singular_indices(params)) <= set(expected)
