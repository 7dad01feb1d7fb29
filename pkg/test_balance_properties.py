"""
Property tests over seeded random gain graphs: balance against compatibility,
switching invariance and the two characteristic polynomial routes.
"""

import numpy as np
import pytest
from pytest import raises
from hypothesis import given, settings
from hypothesis.strategies import booleans, integers, sampled_from

from conftest import random_bipartite_instance, random_instance
from csg_cli.entities.random_model import RandomModel
from csg_cli.utils.generators import random_csg, random_switching
from skew_gain.analyzers.graph_operations import adjacency_matrix, apply_switching
from skew_gain.analyzers.spectral import char_poly, hermitian_eigenvalues
from skew_gain.exceptions import NotDistanceCompatibleError

property_settings = settings(max_examples=200, derandomize=True, deadline=None)

KINDS = sampled_from(['unit', 'annulus', 'positive-real', 'balanced'])
SEEDS = integers(min_value=0, max_value=2 ** 32 - 1)
ORDERS = integers(min_value=2, max_value=7)
EXTRA_EDGES = integers(min_value=0, max_value=5)


@property_settings
@given(kind=sampled_from(['balanced', 'positive-real']), n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS)
def test_balanced_graphs_are_argument_wise(shortest_gains, balance, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed)
    assert balance.balance_certificate(g).is_balanced
    assert shortest_gains.compatibility_report(g).graph_argument_wise


@property_settings
@given(seed=SEEDS, balanced=booleans())
def test_bipartite_balance_equals_argument_wise(shortest_gains, balance, seed, balanced):
    g = random_bipartite_instance(seed, balanced)
    is_balanced = balance.balance_certificate(g).is_balanced
    if balanced:
        assert is_balanced
    assert shortest_gains.compatibility_report(g).graph_argument_wise == is_balanced


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS, switching_seed=SEEDS)
def test_flags_invariant_under_switching(shortest_gains, balance, kind, n, extra, seed, switching_seed):
    g = random_instance(kind, n, extra, seed)
    switched = apply_switching(g, random_switching(n, switching_seed))

    before = shortest_gains.compatibility_report(g)
    after = shortest_gains.compatibility_report(switched)
    assert before.graph_argument_wise == after.graph_argument_wise
    assert before.graph_modulus_wise == after.graph_modulus_wise
    assert balance.balance_certificate(g).is_balanced == balance.balance_certificate(switched).is_balanced


@property_settings
@given(n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS, switching_seed=SEEDS, tree=booleans())
def test_distance_spectrum_invariant_under_switching(distance_matrices, n, extra, seed, switching_seed, tree):
    if tree:
        # Unit-gain trees are compatible whatever their arguments
        g = random_instance('unit', n, 0, seed)
    else:
        g = random_instance('balanced', n, extra, seed, modulus_bounds=(1.0, 1.0))
    switched = apply_switching(g, random_switching(n, switching_seed))

    spectrum = hermitian_eigenvalues(distance_matrices.distance_matrix(g)).as_array()
    switched_spectrum = hermitian_eigenvalues(distance_matrices.distance_matrix(switched)).as_array()
    np.testing.assert_allclose(spectrum, switched_spectrum, atol=1e-8)


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS, unit_moduli=booleans())
def test_distance_cospectrality_characterizes_balance(shortest_gains, balance, kind, n, extra, seed, unit_moduli):
    bounds = {'modulus_bounds': (1.0, 1.0)} if unit_moduli else {}
    g = random_instance(kind, n, extra, seed, **bounds)
    expected = (balance.balance_certificate(g).is_balanced
                and shortest_gains.compatibility_report(g).graph_modulus_wise)
    assert balance.balance_via_distance_cospectrality(g) == expected


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS)
def test_adjacency_cospectrality_characterizes_balance(balance, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed)
    assert balance.balance_via_adjacency_cospectrality(g) == balance.balance_certificate(g).is_balanced


@property_settings
@given(kind=KINDS, n=integers(min_value=2, max_value=8), extra=EXTRA_EDGES, seed=SEEDS)
def test_elementary_subgraphs_agree_with_trace_recurrence(balance, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed)
    elementary = balance.char_poly_elementary(g).coeffs
    traces = char_poly(adjacency_matrix(g)).coeffs
    assert list(elementary) == pytest.approx(list(traces), rel=1e-8, abs=1e-8)


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS)
def test_certificates_verify(balance, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed)
    assert balance.verify_certificate(g, balance.balance_certificate(g))


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS)
def test_generator_is_deterministic(kind, n, extra, seed):
    m = min(n - 1 + extra, n * (n - 1) // 2)
    model = RandomModel(kind=kind, seed=seed)
    first = random_csg(model, n, m)
    assert first == random_csg(model, n, m)
    assert first.n == n
    assert first.m == m


@property_settings
@given(kind=sampled_from(['unit', 'balanced']), n=ORDERS, extra=integers(min_value=0, max_value=3), seed=SEEDS)
def test_associated_complete_graph_has_same_balance(shortest_gains, balance, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed, modulus_bounds=(1.0, 1.0))
    if not shortest_gains.compatibility_report(g).graph_distance_compatible:
        with raises(NotDistanceCompatibleError):
            balance.associated_complete_graph(g)
        return

    certificate = balance.balance_certificate(g)
    complete_certificate = balance.balance_certificate(balance.associated_complete_graph(g))
    assert complete_certificate.is_balanced == certificate.is_balanced
    if complete_certificate.is_balanced:
        # g is a spanning subgraph of its associated complete graph
        assert balance.verify_certificate(g, complete_certificate)


@property_settings
@given(kind=KINDS, n=ORDERS, extra=EXTRA_EDGES, seed=SEEDS)
def test_compatibility_is_decided_blockwise(shortest_gains, kind, n, extra, seed):
    g = random_instance(kind, n, extra, seed)
    report = shortest_gains.compatibility_report(g)
    block_reports = [r for _, r in shortest_gains.block_compatibility(g)]
    assert report.graph_argument_wise == all(r.graph_argument_wise for r in block_reports)
    assert report.graph_modulus_wise == all(r.graph_modulus_wise for r in block_reports)
    assert report.graph_distance_compatible == all(r.graph_distance_compatible for r in block_reports)
