"""Engine behaviour: completeness, pruning, delay counters, budgets."""

import random

import pytest

from romanenum.engine import EnumerationStats, enumerate_minimal, enumerate_with_budget, iter_minimal
from romanenum.families import (
    complete_graph,
    path_graph,
    path_interval_model,
    random_cobipartite,
    random_graph,
    random_interval_instance,
)
from romanenum.fixed_two import IntervalConnectedSolver, MrdfSolver, RdfSolver, solver_for
from romanenum.graphs import IntervalModel, intersection_graph
from romanenum.oracle import oracle_all_minimal
from romanenum.roman import Variant, two_mask


def run_instances(rng):
    """A mixed bag of (graph, variant, solver) triples across all routes."""
    out = []
    for _ in range(12):
        n = rng.randint(1, 6)
        g = random_graph(n, rng.uniform(0.1, 0.9), rng)
        out.append((g, Variant.RDF, RdfSolver(g)))
        g = random_graph(n, rng.uniform(0.1, 0.9), rng)
        out.append((g, Variant.MRDF, MrdfSolver(g)))
        n = rng.randint(2, 6)
        g, part = random_cobipartite(n, rng.uniform(0.1, 0.8), rng)
        variant = rng.choice((Variant.TRDF, Variant.CRDF))
        out.append((g, variant, solver_for(g, variant, partition=part)))
        g, model = random_interval_instance(rng.randint(2, 6), rng)
        out.append((g, Variant.CRDF, IntervalConnectedSolver(g, model)))
    return out


def test_enumeration_is_complete_and_duplicate_free():
    rng = random.Random(0xE16)
    for g, variant, solver in run_instances(rng):
        pairs = list(iter_minimal(g, variant, solver))
        assert len(pairs) == len(set(pairs))
        for a, f in pairs:
            assert two_mask(f) == a
        assert {f for _a, f in pairs} == oracle_all_minimal(g, variant)


def test_pruning_changes_work_but_not_output():
    rng = random.Random(0xE17)
    for g, variant, solver in run_instances(rng):
        st_on = EnumerationStats()
        with_prune = list(iter_minimal(g, variant, solver, stats=st_on))
        st_off = EnumerationStats()
        without = list(iter_minimal(g, variant, solver, prune=False, stats=st_off))
        assert with_prune == without  # same functions, same order
        assert st_off.sets_explored >= st_on.sets_explored
        assert st_off.sets_explored == 2**g.n  # every subset is a candidate
        assert st_on.outputs == st_off.outputs == len(with_prune)


def test_delay_counters_stay_quadratic_with_pruning():
    rng = random.Random(0xE18)
    for g, variant, solver in run_instances(rng):
        st = enumerate_minimal(g, variant, solver)
        n = g.n
        assert st.max_consecutive_empty <= n * n
        assert st.max_inter_output_work <= n * n + 1
        assert st.empty_sets_explored <= st.sets_explored
        assert st.seconds >= 0.0


def test_stats_counters_are_consistent():
    g = path_graph(4)
    sink_calls = []
    st = enumerate_minimal(g, Variant.RDF, RdfSolver(g), sink=sink_calls.append)
    assert st.outputs == len(sink_calls) == 7
    assert st.sets_explored == st.empty_sets_explored + 7  # one function per 2-set
    d = st.as_dict()
    assert d["outputs"] == 7
    assert set(d) == {
        "outputs",
        "sets_explored",
        "empty_sets_explored",
        "max_consecutive_empty",
        "max_inter_output_work",
        "seconds",
    }


def test_budget_semantics():
    g = path_graph(5)
    solver = RdfSolver(g)
    everything, st_all = enumerate_with_budget(g, Variant.RDF, solver, 0)
    assert st_all.outputs == len(everything)
    assert len(everything) > 3

    got, st = enumerate_with_budget(g, Variant.RDF, solver, 3)
    assert got == everything[:3]
    assert st.outputs == 3
    assert st.sets_explored <= st_all.sets_explored

    generous, st_big = enumerate_with_budget(g, Variant.RDF, solver, 10**6)
    assert generous == everything
    assert st_big.outputs == st_all.outputs

    negative, _ = enumerate_with_budget(g, Variant.RDF, solver, -1)
    assert negative == everything


def test_zero_output_runs():
    k1 = complete_graph(1)
    st = enumerate_minimal(k1, Variant.TRDF, solver_for(k1, Variant.TRDF))
    assert st.outputs == 0
    assert st.sets_explored == 1  # the empty root kills the whole tree

    model = IntervalModel(((0, 1), (5, 6)))
    g = intersection_graph(model)
    solver = IntervalConnectedSolver(g, model)
    st = enumerate_minimal(g, Variant.CRDF, solver)
    assert st.outputs == 0
    assert st.sets_explored == 1


def test_solver_binding_is_checked():
    p4 = path_graph(4)
    p5 = path_graph(5)
    with pytest.raises(ValueError):
        next(iter_minimal(p5, Variant.RDF, RdfSolver(p4)))
    with pytest.raises(ValueError):
        next(iter_minimal(p4, Variant.MRDF, RdfSolver(p4)))


def test_external_stats_object_is_filled_in_place():
    g = path_graph(4)
    st = EnumerationStats()
    pairs = list(iter_minimal(g, Variant.RDF, RdfSolver(g), stats=st))
    assert st.outputs == len(pairs) == 7
    assert st.seconds > 0.0


def test_interval_route_on_paths_matches_oracle_through_engine():
    for n in range(1, 8):
        g = path_graph(n)
        solver = IntervalConnectedSolver(g, path_interval_model(n))
        found = set()
        enumerate_minimal(g, Variant.CRDF, solver, sink=found.add)
        assert found == oracle_all_minimal(g, Variant.CRDF)
