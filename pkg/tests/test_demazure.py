"""Demazure subsets, i-strings, filtration layers, quotient structure."""

import pytest

from qcrystal.demazure import (demazure_crystal, extremal_element,
                               extremal_weights, filtration_layers, i_strings,
                               quotient_strings, reduced_word_independence,
                               verify_filtration_structure,
                               verify_string_property)
from qcrystal.root_data import (apply_word, canonical_word, cartan_datum,
                                longest_word, weyl_group)

A1 = cartan_datum("A1")
A2 = cartan_datum("A2")
B2 = cartan_datum("B2")


def test_base_and_top_of_recursion(graph_of):
    graph = graph_of("A2", (1, 1))
    assert demazure_crystal(graph, ()).members == {0}
    assert demazure_crystal(graph, longest_word(A2)).members == set(graph.all_ids())


def test_single_letter_example(graph_of):
    graph = graph_of("A2", (1, 1))
    dc = demazure_crystal(graph, (1,))
    assert dc.members == {0, graph.f(0, 1)}
    assert len(dc) == 2


def test_non_reduced_word_rejected(graph_of):
    graph = graph_of("A2", (1, 1))
    with pytest.raises(ValueError):
        demazure_crystal(graph, (1, 1))


def test_e_closure(graph_of):
    # property: subsets are closed under every raising operator
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            dc = demazure_crystal(graph, w)
            for b in dc.members:
                for i in graph.indices():
                    parent = graph.e(b, i)
                    assert parent is None or parent in dc.members


def test_monotone_along_prefixes(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            sizes = []
            for k in range(len(w) + 1):
                suffix = w[len(w) - k:]
                sizes.append(len(demazure_crystal(graph, suffix)))
            assert sizes == sorted(sizes)
            for k in range(len(w)):
                smaller = demazure_crystal(graph, w[len(w) - k:]).members
                bigger = demazure_crystal(graph, w[len(w) - k - 1:]).members
                assert smaller <= bigger


def test_extremal_weights_examples():
    assert extremal_weights(A2, (1, 1), ()) == [((1, 1), None)]
    ladder = extremal_weights(A1, (3,), (1,))
    assert ladder == [((3,), None), ((-3,), 3)]
    full = extremal_weights(A2, (1, 1), (1, 2, 1))
    assert full[-1][0] == (-1, -1)
    assert full[-1][0] == apply_word(A2, (1, 2, 1), (1, 1))
    with pytest.raises(ValueError):
        extremal_weights(A1, (3,), (1, 1))


def test_extremal_element_uniqueness(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        datum = graph.datum
        for w in weyl_group(datum):
            b = extremal_element(graph, w)
            target = apply_word(datum, w, (1, 1))
            assert graph.weight(b) == target
            dc = demazure_crystal(graph, w)
            assert b in dc.members
            # the extremal weight appears exactly once in B_w
            assert sum(1 for c in dc.members if graph.weight(c) == target) == 1
            # and not in any strictly shorter Demazure subset
            for v in weyl_group(datum):
                if len(v) < len(w):
                    assert b not in demazure_crystal(graph, v).members


def test_reduced_word_independence(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            ok, witness = reduced_word_independence(graph, w)
            assert ok, witness


def test_i_strings_examples(graph_of):
    chain = graph_of("A1", (2,))
    strings = i_strings(chain, 1)
    assert len(strings) == 1 and strings[0].length == 2

    fund = graph_of("A2", (1, 0))
    sizes = sorted(len(s.members) for s in i_strings(fund, 1))
    assert sizes == [1, 2]

    trivial = graph_of("A2", (0, 0))
    strings = i_strings(trivial, 1)
    assert len(strings) == 1 and strings[0].length == 0


def test_i_strings_partition(graph_of):
    graph = graph_of("B2", (1, 1))
    for i in graph.indices():
        seen = [b for s in i_strings(graph, i) for b in s.members]
        assert sorted(seen) == list(graph.all_ids())
        for s in i_strings(graph, i):
            assert graph.eps(s.top, i) == 0
            assert s.length == graph.phi(s.top, i)
            # eps + phi constant along the string
            lengths = {graph.eps(b, i) + graph.phi(b, i) for b in s.members}
            assert lengths == {s.length}


def test_string_property_cases(graph_of):
    graph = graph_of("A2", (1, 1))
    full = demazure_crystal(graph, longest_word(A2))
    single = demazure_crystal(graph, ())
    mixed = demazure_crystal(graph, (1,))
    for i in (1, 2):
        for dc in (full, single, mixed):
            ok, witness = verify_string_property(dc, i)
            assert ok, witness
    # the mixed case really mixes intersection kinds (not all-full, not all-empty)
    kinds = set()
    for s in i_strings(graph, 2):
        hit = mixed.members.intersection(s.members)
        if not hit:
            kinds.add("empty")
        elif hit == set(s.members):
            kinds.add("full")
        else:
            kinds.add("top")
    assert "top" in kinds and len(kinds) >= 2


def test_string_property_all_words(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            dc = demazure_crystal(graph, w)
            for i in graph.indices():
                ok, witness = verify_string_property(dc, i)
                assert ok, witness


def test_filtration_layers_examples(graph_of):
    chain = graph_of("A1", (2,))
    full = demazure_crystal(chain, (1,))
    assert set(filtration_layers(full, 1)) == {2}

    adj = graph_of("A2", (1, 1))
    layers = filtration_layers(demazure_crystal(adj, longest_word(A2)), 1)
    assert {1, 2} <= set(layers) and all(layers.values())
    # the third layer is the zero-weight fixed point of the 1-strings
    assert set(layers) == {0, 1, 2} and len(layers[0]) == 1

    trivial = graph_of("A2", (0, 0))
    assert set(filtration_layers(demazure_crystal(trivial, ()), 1)) == {0}


def test_filtration_structure(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            dc = demazure_crystal(graph, w)
            for i in graph.indices():
                ok, witness = verify_filtration_structure(dc, i)
                assert ok, witness


def test_filtration_singleton_carries_positive_weight(graph_of):
    # B_e(lambda) with lambda strictly dominant: one singleton per index,
    # sitting at weight coordinate lambda_i = l > 0
    graph = graph_of("B2", (1, 1))
    base = demazure_crystal(graph, ())
    for i in graph.indices():
        layers = filtration_layers(base, i)
        assert set(layers) == {1}
        (b,) = layers[1]
        assert b == 0 and graph.weight(b)[i - 1] == 1


def test_quotient_strings_cases(graph_of):
    chain = graph_of("A1", (3,))
    big = demazure_crystal(chain, (1,))
    small = demazure_crystal(chain, ())
    diff, witness = quotient_strings(big, small, 1)
    assert witness is None and diff == set(range(1, 4))
    # degenerate pair: identical subsets give the empty difference
    diff, witness = quotient_strings(big, big, 1)
    assert diff == frozenset() and witness is None


def test_quotient_strings_along_recursion(graph_of):
    for name in ("A2", "B2"):
        graph = graph_of(name, (1, 1))
        for w in weyl_group(graph.datum):
            if not w:
                continue
            big = demazure_crystal(graph, w)
            small = demazure_crystal(graph, w[1:])
            diff, witness = quotient_strings(big, small, w[0])
            assert witness is None, witness
            assert diff == big.members - small.members


def test_quotient_strings_precondition(graph_of):
    graph = graph_of("A2", (1, 1))
    big = demazure_crystal(graph, (1, 2))
    small = demazure_crystal(graph, (2,))
    # wrong letter
    with pytest.raises(ValueError):
        quotient_strings(big, small, 2)
    # works with the right letter
    diff, witness = quotient_strings(big, small, 1)
    assert witness is None


def test_sizes_independent_of_word_and_increasing(graph_of):
    graph = graph_of("B2", (1, 1))
    datum = graph.datum
    from qcrystal.root_data import all_reduced_words
    for w in weyl_group(datum):
        sizes = {len(demazure_crystal(graph, u)) for u in all_reduced_words(datum, w)}
        assert len(sizes) == 1
