import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ids, trees
from failset.exceptions import InputError, OracleRefusal, StructureError
from failset.graph import Graph, Instance, is_failure_set, parse_edge_list, validate_tree
from failset.solver import solve_rooted
from failset.testkit import path, random_tree, star
from failset.verification import (
    brute_force_minimum,
    build_mapping,
    check_mapping_lemmas,
    domination_number,
    mapping_for,
)
from oracles import naive_is_failure, naive_minimum


def cycle(n):
    return Graph([f"v{i}" for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def test_oracle_worked_example(worked):
    res = brute_force_minimum(Instance(worked, 1, 1))
    assert res.minimum == 3
    assert is_failure_set(Instance(worked, 1, 1), res.witness)
    assert res.witness == ids(worked, "a", "a2", "aba")


def test_oracle_cycle():
    res = brute_force_minimum(Instance(cycle(6), 1, 1))
    assert res.minimum == 2
    assert res.witness == {0, 3}


def test_oracle_counts_subsets_in_size_order():
    res = brute_force_minimum(Instance(star(5), 1, 1))
    # the empty set, then {0} succeeds
    assert (res.minimum, res.witness, res.subsets_examined) == (1, {0}, 2)


def test_oracle_single_vertex_large_ell():
    assert brute_force_minimum(Instance(Graph(["x"]), 1, 5)).minimum == 1


def test_oracle_connected_graph_k_equals_n_needs_one():
    g = random_tree(10, seed=3)
    assert brute_force_minimum(Instance(g, 10, 0)).minimum == 1


def test_oracle_cap():
    g = path(21)
    with pytest.raises(OracleRefusal, match="20"):
        brute_force_minimum(Instance(g, 21, 1))
    assert brute_force_minimum(Instance(g, 21, 1), cap=None).minimum == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), st.data())
def test_oracle_matches_naive_on_general_graphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    g = Graph([str(i) for i in range(n)], edges)
    k = data.draw(st.integers(1, n))
    ell = data.draw(st.integers(0, 3))
    res = brute_force_minimum(Instance(g, k, ell))
    assert res.minimum == naive_minimum(n, g.edges(), k, ell)
    assert naive_is_failure(n, g.edges(), res.witness, k, ell)


@settings(max_examples=60, deadline=None)
@given(trees(max_n=8), st.data())
def test_failure_sets_are_upward_closed(g, data):
    k = data.draw(st.integers(1, g.n))
    ell = data.draw(st.integers(0, 2))
    inst = Instance(g, k, ell)
    s = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    extra = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    if is_failure_set(inst, s):
        assert is_failure_set(inst, s | extra)


def test_domination_number():
    assert domination_number(path(7), 1) == 3
    assert domination_number(cycle(6), 1) == 2
    assert domination_number(path(7), 0) == 7


def test_mapping_empty_set(worked):
    m = mapping_for(Instance(worked, 1, 1), ())
    assert m.m == {} and m.image == frozenset()


def test_mapping_root_never_moves():
    g = star(5)
    m = mapping_for(Instance(g, 1, 1), {0}, root=0)
    assert m.m == {0: 0}


def test_mapping_full_set_on_worked_example(worked):
    inst = Instance(worked, 1, 1)
    m = mapping_for(inst, range(worked.n))
    assert m.image >= ids(worked, "a", "a2", "aba")
    # leaves move their fail up; the chain ab<-aba<-aba2 collapses onto aba
    assert m.m[worked.id_of("aba2")] == worked.id_of("aba")
    assert m.m[worked.id_of("ac")] == worked.id_of("a")


def test_mapping_moves_chain():
    # every vertex of a path pushes up; with ell=3 everything lands on the root
    g = path(4)
    m = mapping_for(Instance(g, 1, 3), range(4), root=0)
    assert m.image == {0}
    assert m.m == {0: 0, 1: 0, 2: 0, 3: 0}


def test_mapping_rejects_non_tree():
    with pytest.raises(StructureError):
        mapping_for(Instance(cycle(4), 1, 1), {0})


def test_check_lemmas_examples(worked):
    inst = Instance(worked, 1, 1)
    t = validate_tree(worked, 0)
    f = solve_rooted(t, 1, 1).failure_set
    report = check_mapping_lemmas(t, inst, range(worked.n), f)
    assert report.ok and report.image == f
    w = brute_force_minimum(inst).witness
    report = check_mapping_lemmas(t, inst, w, f)
    assert report.ok and len(f) == len(w) == 3


def test_check_lemmas_precondition(worked):
    t = validate_tree(worked, 0)
    with pytest.raises(InputError):
        check_mapping_lemmas(t, Instance(worked, 1, 1), {1}, {0})


def test_check_lemmas_reports_violation_with_trace(worked):
    t = validate_tree(worked, 0)
    report = check_mapping_lemmas(t, Instance(worked, 1, 1), range(8), {worked.id_of("ac")})
    assert not report.ok
    assert any("missing from image" in v for v in report.violations)
    assert any("moves:" in v for v in report.violations)


def test_root_extra_is_logged(caplog):
    # on a-b-c rooted at a the solver picks b; W = {a, b} keeps a since the root never moves
    g = path(3)
    inst = Instance(g, 1, 1)
    t = validate_tree(g, 0)
    f = solve_rooted(t, 1, 1).failure_set
    assert f == {1}
    with caplog.at_level(logging.INFO, logger="failset.verification"):
        report = check_mapping_lemmas(t, inst, {0, 1}, f)
    assert report.ok and report.root_extra
    assert "root" in caplog.text


@settings(max_examples=120, deadline=None)
@given(trees(max_n=10), st.data())
def test_mapping_lemmas_random_failure_sets(g, data):
    k = data.draw(st.integers(1, g.n))
    ell = data.draw(st.integers(0, 3))
    root = data.draw(st.integers(0, g.n - 1))
    inst = Instance(g, k, ell)
    t = validate_tree(g, root)
    f = solve_rooted(t, k, ell).failure_set
    w = data.draw(st.frozensets(st.integers(0, g.n - 1))) | brute_force_minimum(inst).witness
    report = check_mapping_lemmas(t, inst, w, f)
    assert report.ok, report.violations


def test_mapping_lemmas_seeded_n10():
    rng = random.Random(2024)
    for _ in range(40):
        g = random_tree(10, rng.getrandbits(32))
        k, ell = rng.randint(1, 10), rng.randint(0, 3)
        inst = Instance(g, k, ell)
        t = validate_tree(g, rng.randrange(10))
        f = solve_rooted(t, k, ell).failure_set
        w = {v for v in range(10) if rng.random() < 0.5}
        if is_failure_set(inst, w):
            assert check_mapping_lemmas(t, inst, w, f).ok
