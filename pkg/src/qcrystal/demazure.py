"""Demazure subsets B_w(lambda), i-strings and W-filtration layers.

The subset attached to a reduced word is grown from the highest-weight
element by saturating letters right to left: for word (i_1, ..., i_n) the
last letter i_n is saturated first and i_1 last, matching the recursion
B_w = (closure under f_tilde_{i_1}) of B_{s_{i_1} w}.  Worked A2 example,
lambda = (1, 1):

    word (1,)    -> {b0, f1 b0}                 (phi_1(b0) = 1)
    word (1, 2)  -> f1-saturation of {b0, f2 b0}

so (1, 2) first saturates letter 2, then letter 1.
"""

from dataclasses import dataclass

from .root_data import (all_reduced_words, canonical_word, element_key,
                        is_reduced, reflect)


@dataclass(frozen=True)
class DemazureCrystal:
    """A reduced word together with the subset of the ambient crystal it cuts out."""

    graph: object
    word: tuple[int, ...]
    members: frozenset[int]

    def __len__(self):
        return len(self.members)


def _saturate(graph, members, i):
    out = set(members)
    for b in members:
        child = graph.f(b, i)
        while child is not None:
            out.add(child)
            child = graph.f(child, i)
    return out


def demazure_crystal(graph, word):
    """B_w(lambda) for a reduced word, by f_tilde saturation right to left."""
    word = tuple(word)
    if not is_reduced(graph.datum, word):
        raise ValueError(f"word {word} is not reduced")
    members = {0}
    for i in reversed(word):
        members = _saturate(graph, members, i)
    return DemazureCrystal(graph, word, frozenset(members))


def extremal_weights(datum, lam, word):
    """The reflection ladder lambda, s_{i_n} lambda, ..., w lambda.

    Returns a list of (weight, m) pairs where m is how many lowering steps
    f_tilde_i^(m) connect consecutive extremal elements, i.e. the pairing
    <h_i, previous weight>.  The first entry is (lambda, None).  A negative
    pairing cannot occur along a reduced word processed right to left, so
    one is reported as an error.
    """
    lam = tuple(lam)
    ladder = [(lam, None)]
    current = lam
    for i in reversed(tuple(word)):
        m = current[i - 1]
        if m < 0:
            raise ValueError(
                f"negative lowering count {m} at letter {i}: word {tuple(word)} "
                "is not reduced (or not processed in recursion order)")
        current = reflect(datum, i, current)
        ladder.append((current, m))
    return ladder


def extremal_element(graph, word):
    """Id of the unique element of weight w(lambda) inside B_w(lambda)."""
    datum = graph.datum
    ladder = extremal_weights(datum, graph.highest_weight, word)
    b = 0
    for step, (_, m) in zip(reversed(tuple(word)), ladder[1:]):
        for _ in range(m):
            b = graph.f(b, step)
            if b is None:
                raise RuntimeError("lowering string ended before the extremal weight")
    if graph.weight(b) != ladder[-1][0]:
        raise RuntimeError("extremal element has the wrong weight")
    return b


def reduced_word_independence(graph, word):
    """Check that every reduced word of the element cuts the same subset."""
    words = all_reduced_words(graph.datum, word)
    reference = demazure_crystal(graph, words[0]).members
    for other in words[1:]:
        members = demazure_crystal(graph, other).members
        if members != reference:
            return False, (words[0], other)
    return True, None


@dataclass(frozen=True)
class IString:
    """A maximal f_tilde_i chain: top has eps_i = 0, length equals phi_i(top)."""

    i: int
    top: int
    members: tuple[int, ...]

    @property
    def length(self):
        return len(self.members) - 1


def i_strings(graph, i):
    """Partition of the crystal into i-strings, in order of their tops."""
    strings = []
    for b in graph.all_ids():
        if graph.eps(b, i) != 0:
            continue
        chain = [b]
        child = graph.f(b, i)
        while child is not None:
            chain.append(child)
            child = graph.f(child, i)
        strings.append(IString(i=i, top=b, members=tuple(chain)))
    assert sum(len(s.members) for s in strings) == len(graph)
    return strings


def verify_string_property(dc, i):
    """Each i-string meets the subset in itself, its top alone, or nothing."""
    for s in i_strings(dc.graph, i):
        hit = dc.members.intersection(s.members)
        if hit == set(s.members) or not hit or hit == {s.top}:
            continue
        return False, (i, s.top, tuple(sorted(hit)))
    return True, None


def filtration_layers(dc, i):
    """Members split by string length l = eps_i + phi_i (constant on strings)."""
    layers: dict[int, set[int]] = {}
    for b in dc.members:
        l = dc.graph.eps(b, i) + dc.graph.phi(b, i)
        layers.setdefault(l, set()).add(b)
    return {l: frozenset(v) for l, v in sorted(layers.items())}


def verify_filtration_structure(dc, i):
    """Each layer meets each i-string in the whole string or a dominant top.

    The singleton case must be the string's top and must carry i-weight
    l > 0; that is what makes the corresponding filtration quotient a
    dominant line rather than a truncated string.
    """
    graph = dc.graph
    for s in i_strings(graph, i):
        hit = dc.members.intersection(s.members)
        if not hit or hit == set(s.members):
            continue
        if len(hit) == 1:
            (b,) = hit
            l = graph.eps(b, i) + graph.phi(b, i)
            if b == s.top and graph.weight(b)[i - 1] == l and l > 0:
                continue
            return False, ("bad singleton layer", i, b)
        return False, ("layer is a partial string", i, s.top, tuple(sorted(hit)))
    return True, None


def quotient_strings(big, small, i):
    """Difference of a covering pair B_w over B_{sw}, s the letter i.

    Requires big to be the f_tilde_i saturation step over small, i.e.
    the elements satisfy w = s_i * (sw) with the length going up.  The
    difference must be a disjoint union of i-strings each missing exactly
    its top, the top sitting in the smaller subset.  Returns the
    difference and a witness (None when the structure holds).
    """
    if big.graph is not small.graph:
        raise ValueError("subsets live in different crystals")
    datum = big.graph.datum
    if element_key(datum, big.word) == element_key(datum, small.word):
        return frozenset(), None  # degenerate pair, empty difference
    lw = len(canonical_word(datum, big.word))
    lsw = len(canonical_word(datum, small.word))
    if lw != lsw + 1 or element_key(datum, (i,) + small.word) != element_key(datum, big.word):
        raise ValueError(
            f"words {big.word} / {small.word} are not a covering pair for letter {i}")
    diff = big.members - small.members
    for s in i_strings(big.graph, i):
        hit = diff.intersection(s.members)
        if not hit:
            continue
        if hit == set(s.members[1:]) and s.top in small.members:
            continue
        return diff, (i, s.top, tuple(sorted(hit)))
    return diff, None
