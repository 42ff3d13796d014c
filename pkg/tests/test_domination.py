import pytest

from domenergy.graphs import Graph, VertexSet, complete, cycle, path, star
from domenergy.domination import (
    KIND_CONNECTED,
    KIND_DOMINATING,
    DominationError,
    enumerate_minimum_sets,
    gamma,
    gamma_c,
    gamma_c_tree_fastpath,
    is_connected_dominating_set,
    is_dominating_set,
    minimum_connected_dominating_set,
    minimum_dominating_set,
)
from domenergy.smallgraphs import connected_graphs, trees

from oracle_graphs import brute_dominating_masks, brute_min_size


def vs(g, *vertices):
    return VertexSet.of(vertices, g.n)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def test_is_dominating_set_examples():
    p5 = path(5)
    assert is_dominating_set(p5, vs(p5, 1, 3))
    assert not is_dominating_set(p5, vs(p5, 0))
    k4 = complete(4)
    for v in range(4):
        assert is_dominating_set(k4, vs(k4, v))


def test_is_connected_dominating_set_examples(fig2_tree):
    p5 = path(5)
    assert is_connected_dominating_set(p5, vs(p5, 1, 2, 3))
    assert not is_connected_dominating_set(p5, vs(p5, 1, 3))
    assert is_connected_dominating_set(fig2_tree, vs(fig2_tree, 1, 3, 4, 5, 6, 7))
    with pytest.raises(DominationError):
        is_connected_dominating_set(p5, VertexSet(0, 5))


# ---------------------------------------------------------------------------
# exact solvers vs brute force
# ---------------------------------------------------------------------------

def test_solvers_match_subset_scan_up_to_7():
    for n in range(1, 8):
        for g in connected_graphs(n):
            assert gamma(g) == brute_min_size(g)
            assert gamma_c(g) == brute_min_size(g, connected=True)


def test_gamma_le_gamma_c_up_to_7():
    for n in range(1, 8):
        for g in connected_graphs(n):
            assert gamma(g) <= gamma_c(g)


def test_known_values():
    assert gamma(path(5)) == 2
    assert gamma(cycle(5)) == 2
    assert gamma(star(9)) == 1
    assert gamma_c(path(5)) == 3
    assert gamma_c(complete(7)) == 1
    assert gamma_c(complete(1)) == 1
    assert gamma_c(path(2)) == 1


def test_gamma_c_disconnected_raises():
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert gamma(two) == 2
    with pytest.raises(DominationError):
        gamma_c(two)
    with pytest.raises(DominationError):
        minimum_connected_dominating_set(two)


# ---------------------------------------------------------------------------
# canonical certificates
# ---------------------------------------------------------------------------

def test_canonical_connected_sets(fig2_tree):
    assert minimum_connected_dominating_set(path(5)).set.vertices() == (1, 2, 3)
    assert minimum_connected_dominating_set(fig2_tree).set.vertices() == (1, 3, 4, 5, 6, 7)
    assert minimum_connected_dominating_set(complete(6)).set.vertices() == (0,)


def test_min_dominating_prefers_connected_set():
    # lex-least minimum dominating set of P4 is {0,2}, but {1,2} is connected
    p4 = path(4)
    masks = brute_dominating_masks(p4, 2)
    keys = sorted(tuple(v for v in range(4) if (m >> v) & 1) for m in masks)
    assert keys[0] == (0, 2)
    cert = minimum_dominating_set(p4)
    assert cert.set.vertices() == (1, 2)
    assert cert.kind == KIND_DOMINATING


def test_min_dominating_lex_when_no_connected_optimum():
    cert = minimum_dominating_set(path(5))
    assert cert.set.vertices() == (0, 3)  # lex-least among the size-2 sets
    assert cert.size == 2 and cert.is_minimum and cert.canonical


def test_certificates_reverify_and_are_deterministic():
    for n in range(1, 7):
        for g in connected_graphs(n):
            c1 = minimum_dominating_set(g)
            c2 = minimum_dominating_set(g)
            assert c1 == c2
            assert is_dominating_set(g, c1.set)
            k1 = minimum_connected_dominating_set(g)
            k2 = minimum_connected_dominating_set(g)
            assert k1 == k2
            assert is_connected_dominating_set(g, k1.set)
            assert k1.size == gamma_c(g) and c1.size == gamma(g)


def test_certificate_json():
    cert = minimum_connected_dominating_set(path(5))
    assert cert.to_json_dict() == {
        "set": [1, 2, 3],
        "kind": KIND_CONNECTED,
        "size": 3,
        "is_minimum": True,
        "canonical": True,
    }


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_enumerate_matches_brute_force():
    for n in range(1, 7):
        for g in connected_graphs(n):
            for kind, connected in ((KIND_DOMINATING, False), (KIND_CONNECTED, True)):
                size = brute_min_size(g, connected)
                expect = sorted(
                    tuple(v for v in range(g.n) if (m >> v) & 1)
                    for m in brute_dominating_masks(g, size, connected)
                )
                got = [s.vertices() for s in enumerate_minimum_sets(g, kind, 10**6)]
                assert got == expect


def test_enumerate_p5_connected_unique():
    assert [s.vertices() for s in enumerate_minimum_sets(path(5), KIND_CONNECTED, 10)] \
        == [(1, 2, 3)]


def test_enumerate_k3_dominating():
    assert [s.vertices() for s in enumerate_minimum_sets(complete(3), KIND_DOMINATING, 10)] \
        == [(0,), (1,), (2,)]


def test_enumerate_c4_dominating_all_pairs():
    # every pair of C4 vertices dominates; frozen from the exhaustive scan
    got = [s.vertices() for s in enumerate_minimum_sets(cycle(4), KIND_DOMINATING, 100)]
    assert got == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_enumerate_limit_truncates_in_lex_order():
    got = [s.vertices() for s in enumerate_minimum_sets(cycle(4), KIND_DOMINATING, 2)]
    assert got == [(0, 1), (0, 2)]
    with pytest.raises(DominationError):
        enumerate_minimum_sets(cycle(4), KIND_DOMINATING, 0)
    with pytest.raises(DominationError):
        enumerate_minimum_sets(cycle(4), "total", 5)


# ---------------------------------------------------------------------------
# tree fastpath
# ---------------------------------------------------------------------------

def test_tree_fastpath_examples(fig2_tree):
    assert gamma_c_tree_fastpath(path(5)) == 3
    assert gamma_c_tree_fastpath(fig2_tree) == 6
    assert gamma_c_tree_fastpath(star(8)) == 1
    with pytest.raises(DominationError):
        gamma_c_tree_fastpath(cycle(4))
    with pytest.raises(DominationError):
        gamma_c_tree_fastpath(path(2))


def test_tree_fastpath_matches_solver_up_to_10():
    for n in range(3, 11):
        for t in trees(n):
            assert gamma_c_tree_fastpath(t) == minimum_connected_dominating_set(t).size
