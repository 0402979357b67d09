"""Path model: root operators, crystal generation, normality, oracles."""

from collections import Counter
from fractions import Fraction

import pytest

from qcrystal.character import weyl_dimension
from qcrystal.crystal import (LSPath, ResourceCapError, e_tilde, eps_phi,
                              f_tilde, generate_crystal, straight_path,
                              verify_normal)
from qcrystal.rank_one import RankOneModule, crystal_f_tilde
from qcrystal.root_data import cartan_datum, dominance_leq, reflect

A1 = cartan_datum("A1")
A2 = cartan_datum("A2")


def test_straight_path():
    p = straight_path(A2, (1, 1))
    assert p.weight() == (1, 1)
    z = straight_path(A2, (0, 0))
    assert z.steps == () and z.weight(rank=2) == (0, 0)
    assert straight_path(A1, (2,)).weight() == (2,)
    with pytest.raises(ValueError):
        straight_path(A2, (1, -1))
    with pytest.raises(ValueError):
        straight_path(A2, (1,))


def test_f_tilde_rank_one_chain():
    p = straight_path(A1, (1,))
    down = f_tilde(A1, 1, p)
    assert down.weight() == (-1,)
    assert f_tilde(A1, 1, down) is None
    assert e_tilde(A1, 1, down).steps == p.steps
    assert e_tilde(A1, 1, p) is None


def test_f_tilde_a2_fundamental():
    p = straight_path(A2, (1, 0))
    p1 = f_tilde(A2, 1, p)
    assert p1.weight() == (-1, 1)
    p12 = f_tilde(A2, 2, p1)
    assert p12.weight() == (0, -1)
    assert f_tilde(A2, 1, p12) is None and f_tilde(A2, 2, p12) is None
    assert f_tilde(A2, 2, p) is None  # phi_2 = 0 at the top


def test_eps_phi_examples():
    top = straight_path(A2, (2, 1))
    for i, lam_i in ((1, 2), (2, 1)):
        assert eps_phi(A2, i, top) == (0, lam_i)
    bottom = f_tilde(A1, 1, straight_path(A1, (1,)))
    assert eps_phi(A1, 1, bottom) == (1, 0)
    zero = straight_path(A2, (0, 0))
    assert eps_phi(A2, 1, zero) == (0, 0) and eps_phi(A2, 2, zero) == (0, 0)


def test_eps_phi_match_operator_iteration(graph_of):
    # slow-route verification: count actual applications until None
    for name, lam in [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0))]:
        graph = graph_of(name, lam)
        datum = graph.datum
        for b in graph.all_ids():
            path = graph.path(b)
            for i in datum.indices():
                up, cur = 0, path
                while (nxt := e_tilde(datum, i, cur)) is not None:
                    cur, up = nxt, up + 1
                down, cur = 0, path
                while (nxt := f_tilde(datum, i, cur)) is not None:
                    cur, down = nxt, down + 1
                assert (up, down) == (graph.eps(b, i), graph.phi(b, i))


def test_canonical_form_merges_parallel_runs():
    half = Fraction(1, 2)
    p = LSPath(((half, 0), (half, 0), (0, 0), (1, 1)))
    assert p.steps == ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)))
    # antiparallel steps stay separate: the path turns back
    back = LSPath(((1, 0), (-half, 0)))
    assert len(back.steps) == 2


SIZES = {("A1", (4,)): 5, ("A2", (1, 0)): 3, ("A2", (1, 1)): 8,
         ("A2", (2, 1)): 15, ("B2", (1, 0)): 5, ("B2", (1, 1)): 16,
         ("A3", (1, 0, 1)): 15, ("G2", (1, 0)): 7}


@pytest.mark.parametrize("name,lam", sorted(SIZES))
def test_generate_crystal_sizes(name, lam, graph_of):
    graph = graph_of(name, lam)
    assert len(graph) == SIZES[(name, lam)]
    assert len(graph) == weyl_dimension(graph.datum, lam)


def test_a1_chains():
    for n in range(6):
        assert len(generate_crystal(A1, (n,))) == n + 1


@pytest.mark.parametrize("name,lam", sorted(SIZES) + [("A2", (0, 0))])
def test_verify_normal(name, lam, graph_of):
    ok, witness = verify_normal(graph_of(name, lam))
    assert ok, witness


def test_trivial_crystal(graph_of):
    graph = graph_of("A2", (0, 0))
    assert len(graph) == 1 and graph.weight(0) == (0, 0)


@pytest.mark.parametrize("name,lam", sorted(SIZES))
def test_weight_multiset_weyl_invariant(name, lam, graph_of):
    graph = graph_of(name, lam)
    weights = Counter(graph.weight(b) for b in graph.all_ids())
    for i in graph.indices():
        reflected = Counter(reflect(graph.datum, i, w) for w in weights.elements())
        assert reflected == weights


@pytest.mark.parametrize("name,lam", sorted(SIZES))
def test_weights_below_highest(name, lam, graph_of):
    graph = graph_of(name, lam)
    for b in graph.all_ids():
        assert dominance_leq(graph.datum, graph.weight(b), lam)


@pytest.mark.parametrize("name,lam", sorted(SIZES))
def test_edge_inverse_pairing_and_string_lengths(name, lam, graph_of):
    graph = graph_of(name, lam)
    for (b, i), child in graph.edges.items():
        assert graph.e(child, i) == b
    for b in graph.all_ids():
        for i in graph.indices():
            # walk to the top of the string, then measure its length
            top = b
            while graph.e(top, i) is not None:
                top = graph.e(top, i)
            length = 0
            cur = top
            while graph.f(cur, i) is not None:
                cur = graph.f(cur, i)
                length += 1
            assert length == graph.eps(b, i) + graph.phi(b, i)


def test_rank_one_oracle_agreement():
    for lam in range(21):
        graph = generate_crystal(A1, (lam,))
        module = RankOneModule(lam)
        assert len(graph) == module.dim
        for k in range(module.dim):
            assert graph.f(k, 1) == crystal_f_tilde(module, k)
            assert graph.weight(k) == (lam - 2 * k,)


def test_resource_cap():
    with pytest.raises(ResourceCapError):
        generate_crystal(A2, (1, 1), max_elements=5)


def test_ids_are_bfs_level_order(graph_of):
    graph = graph_of("A2", (1, 1))
    # level = height of lambda - weight; ids must be sorted by level
    from qcrystal.root_data import root_coords
    levels = [sum(root_coords(graph.datum,
                              tuple(a - b for a, b in zip((1, 1), graph.weight(b_)))))
              for b_ in graph.all_ids()]
    assert levels == sorted(levels)
    # within a level, ids follow the canonical path encoding
    for lvl in set(levels):
        ids = [b for b in graph.all_ids() if levels[b] == lvl]
        keys = [graph.path(b).sort_key() for b in ids]
        assert keys == sorted(keys)
