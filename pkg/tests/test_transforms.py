import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from figures import FIG1_LEFT, FIG1_LEFT_LAMBDA, FIG1_RIGHT, FIG1_RIGHT_LAMBDA, FIG1_SEQ, FIG2_SEQ
from perronmax.bfd import construct_bfd_tree
from perronmax.generate import random_connected_realization, random_tree
from perronmax.graph import DisconnectedGraphError, Graph, canonical_form, is_connected
from perronmax.oracle import enumerate_trees
from perronmax.spectral import perron, rayleigh_quotient
from perronmax.transforms import (
    MoveError,
    hill_climb,
    iter_shifting_moves,
    iter_switching_moves,
    maximize,
    shift_edge,
    shift_gain,
    shifting_test,
    switch_edges,
    switch_gain,
    switching_test,
)
from strategies import connected_graphs, tree_sequences


# -- switch ------------------------------------------------------------------


def test_switch_on_p4_gives_relabelled_p4():
    g = switch_edges(Graph.path(4), (0, 1), (2, 3))
    assert g.edges == {(0, 2), (1, 3), (1, 2)}
    assert g.degrees() == Graph.path(4).degrees()


def test_switch_on_figure1_left():
    g = switch_edges(FIG1_LEFT, (2, 5), (3, 6))
    assert g.has_edge(2, 3) and g.has_edge(5, 6)
    assert not g.has_edge(2, 5) and not g.has_edge(3, 6)
    assert g.degrees() == FIG1_LEFT.degrees()


@pytest.mark.parametrize(
    "e1, e2, what",
    [
        ((0, 2), (2, 3), r"\(0, 2\) is not"),
        ((0, 1), (0, 2), "is not in"),
        ((0, 1), (0, 1), "distinct"),
        ((1, 0), (1, 2), "loop"),
        ((0, 1), (2, 1), "loop"),
        ((1, 2), (0, 1), r"\(1, 0\) already present"),
    ],
)
def test_switch_preconditions(e1, e2, what):
    with pytest.raises(MoveError, match=what):
        switch_edges(Graph.path(4), e1, e2)


def test_switch_rejects_existing_target_edges():
    # on C4 plus a chord the switch would duplicate the chord
    h = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    with pytest.raises(MoveError, match=r"\(0, 2\) already present"):
        switch_edges(h, (0, 1), (2, 3))


def _random_switch(g: Graph, rnd: random.Random):
    edges = g.edge_list()
    for _ in range(200):
        (a, b), (c, d) = rnd.sample(edges, 2)
        if rnd.random() < 0.5:
            a, b = b, a
        if rnd.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) == 4 and not g.has_edge(a, c) and not g.has_edge(b, d):
            return (a, b), (c, d)
    return None


@settings(max_examples=300, deadline=None)
@given(connected_graphs(max_n=10, min_n=4), st.randoms(use_true_random=False))
def test_switch_rayleigh_change_identity(g, rnd):
    pick = _random_switch(g, rnd)
    if pick is None:
        return
    (v1, u1), (v2, u2) = pick
    f = perron(g).f
    h = switch_edges(g, (v1, u1), (v2, u2))
    assert h.degrees() == g.degrees()
    diff = rayleigh_quotient(h, f) - rayleigh_quotient(g, f)
    assert diff == pytest.approx(switch_gain(f, v1, u1, v2, u2), abs=1e-12)


# -- shift -------------------------------------------------------------------


def test_shift_on_star_reports_existing_edge():
    with pytest.raises(MoveError, match="already present"):
        shift_edge(Graph.star(3), 0, 1, 2)


def test_shift_on_p4():
    g = shift_edge(Graph.path(4), 3, 2, 0)
    assert g.edges == {(0, 1), (1, 2), (0, 3)}
    assert g.degree(2) == 1 and g.degree(0) == 2


@pytest.mark.parametrize("u, v1, v2", [(0, 2, 3), (0, 1, 0)])
def test_shift_preconditions(u, v1, v2):
    with pytest.raises(MoveError):
        shift_edge(Graph.path(4), u, v1, v2)


@settings(max_examples=200, deadline=None)
@given(tree_sequences(min_n=4, max_n=14), st.randoms(use_true_random=False))
def test_shift_towards_larger_f_strictly_increases_lambda(pi, rnd):
    g = random_tree(pi, rnd)
    r = perron(g)
    f = r.f
    options = [
        (u, v1, v2)
        for u, v1 in g.edge_list() + [(b, a) for a, b in g.edge_list()]
        for v2 in range(g.n)
        if v2 not in (u, v1) and not g.has_edge(u, v2) and f[v2] >= f[v1]
    ]
    rnd.shuffle(options)
    for u, v1, v2 in options:
        h = shift_edge(g, u, v1, v2)
        if is_connected(h):
            assert shift_gain(f, u, v1, v2) >= 0
            assert perron(h).lam > r.lam + 1e-12
            return


# -- non-optimality tests ----------------------------------------------------


@pytest.mark.parametrize("pi", [(2, 1, 1), (3, 2, 2, 1, 1, 1), FIG2_SEQ, (4, 3, 3, 2, 1, 1, 1, 1, 1, 1)])
def test_bfd_tree_admits_no_move(pi):
    g, _ = construct_bfd_tree(pi)
    r = perron(g)
    assert shifting_test(g, r) is None
    assert switching_test(g, r) is None


def test_figure1_right_admits_no_move():
    r = perron(FIG1_RIGHT)
    assert shifting_test(FIG1_RIGHT, r) is None
    assert switching_test(FIG1_RIGHT, r) is None


def test_figure1_left_is_a_fixpoint_of_both_tests():
    # its Perron vector is ordered like its degrees, so neither test fires
    # even though it is not the maximizer (see the decisions ledger)
    r = perron(FIG1_LEFT)
    assert shifting_test(FIG1_LEFT, r) is None
    assert switching_test(FIG1_LEFT, r) is None
    assert r.lam < FIG1_RIGHT_LAMBDA - 0.05


def test_p4_admits_no_switch():
    assert switching_test(Graph.path(4), perron(Graph.path(4))) is None


def test_non_bfd_tree_of_3_2_2_1_1_1_is_improved():
    bfd = canonical_form(construct_bfd_tree((3, 2, 2, 1, 1, 1))[0])
    others = [t for t in enumerate_trees((3, 2, 2, 1, 1, 1)) if canonical_form(t) != bfd]
    assert len(others) == 1
    t = others[0]
    r = perron(t)
    mv = shifting_test(t, r) or switching_test(t, r)
    assert mv is not None
    assert perron(mv.apply(t)).lam > r.lam + 1e-10


def test_shifting_test_swaps_degrees_of_u_and_v():
    # vertex 0 has degree 3 but sits at the end of a long path
    g = Graph(9, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (5, 7), (5, 8)])
    g = g.replace_edges([(5, 8)], [(4, 8)])
    r = perron(g)
    moves = list(iter_shifting_moves(g, r))
    assert moves
    for mv in moves:
        h = mv.apply(g)
        assert sorted(h.degrees()) == sorted(g.degrees())
        assert is_connected(h)
        assert perron(h).lam > r.lam


def test_all_lemma_moves_on_small_graphs_connect_and_improve(connected_atlas):
    seen_cases = set()
    for g in connected_atlas:
        r = perron(g)
        for mv in list(iter_switching_moves(g, r)) + list(iter_shifting_moves(g, r)):
            h = mv.apply(g)
            seen_cases.add(mv.note)
            assert is_connected(h), (g, mv)
            assert sorted(h.degrees()) == sorted(g.degrees())
            assert perron(h).lam > r.lam + 1e-12, (g, mv)
    assert {"case 1", "case 2", "case 4", "shift"} <= seen_cases


# -- hill climb --------------------------------------------------------------


def test_climb_from_random_tree_reaches_bfd_tree():
    rng = random.Random(5)
    target = perron(construct_bfd_tree(FIG2_SEQ)[0]).lam
    for _ in range(5):
        res = hill_climb(random_tree(FIG2_SEQ, rng))
        assert res.fixpoint
        assert res.lam == pytest.approx(target, abs=1e-8)


def test_climb_from_bfd_tree_takes_no_steps():
    g, _ = construct_bfd_tree(FIG2_SEQ)
    res = hill_climb(g)
    assert res.trace == [] and res.fixpoint and res.graph == g


def test_climb_from_figure1_left_stays_put():
    res = hill_climb(FIG1_LEFT)
    assert res.trace == [] and res.fixpoint
    assert res.lam == pytest.approx(FIG1_LEFT_LAMBDA, abs=5e-4)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=9, min_n=3), st.sampled_from(["first", "best"]))
def test_climb_trace_strictly_increases_and_keeps_degrees(g, strategy):
    res = hill_climb(g, strategy=strategy)
    lams = [res.start_lam] + [s.lam for s in res.trace]
    assert all(b > a + 1e-10 for a, b in zip(lams, lams[1:]))
    assert sorted(res.graph.degrees()) == sorted(g.degrees())
    assert is_connected(res.graph)
    graph, trace = res
    assert graph is res.graph and trace is res.trace


def test_climb_respects_step_limit():
    rng = random.Random(2)
    g = random_tree(FIG2_SEQ, rng)
    res = hill_climb(g, max_steps=1)
    assert len(res.trace) <= 1


def test_climb_argument_errors():
    with pytest.raises(ValueError):
        hill_climb(Graph.path(3), strategy="random")
    with pytest.raises(DisconnectedGraphError):
        hill_climb(Graph(4, [(0, 1), (2, 3)]))


def test_climb_serializes():
    d = hill_climb(random_tree(FIG2_SEQ, random.Random(0))).to_dict()
    assert d["steps"] == len(d["trace"]) > 0
    assert {"kind", "removed", "added", "gain", "note"} <= set(d["trace"][0]["move"])


# -- multi-start -------------------------------------------------------------


def test_multistart_finds_figure1_maximizer():
    out = maximize(FIG1_SEQ, restarts=13, seed=0)
    assert out.best.lam == pytest.approx(FIG1_RIGHT_LAMBDA, abs=5e-4)
    assert canonical_form(out.best.graph) == canonical_form(FIG1_RIGHT)


def test_multistart_is_deterministic_and_keeps_given_start():
    a = maximize(FIG1_LEFT, restarts=4, seed=11)
    b = maximize(FIG1_LEFT, restarts=4, seed=11)
    assert a.runs[0].start_lam == pytest.approx(FIG1_LEFT_LAMBDA, abs=5e-4)
    assert [r.lam for r in a.runs] == [r.lam for r in b.runs]
    assert a.best.graph == b.best.graph and a.winner == b.winner


def test_random_realization_is_connected_with_right_degrees():
    rng = random.Random(4)
    for _ in range(20):
        g = random_connected_realization(FIG1_SEQ, rng)
        assert is_connected(g)
        assert sorted(g.degrees(), reverse=True) == list(FIG1_SEQ)
    with pytest.raises(ValueError):
        random_connected_realization((3, 1, 1, 1, 1, 1), rng)
