"""Finite-type root systems and Weyl groups.

Cartan matrices follow the convention a[i][j] = <h_i, alpha_j>, so the j-th
column of the matrix is the simple root alpha_j written in fundamental-weight
coordinates.  Weights are plain tuples of ints in those coordinates; simple
reflections, reduced words, dominance order and positive roots are all
computed with exact integer or rational arithmetic.

Supported types: A1..A4, B2, B3, C3, D4, G2.  G2 is oriented so that
a[1][2] = -3 (alpha_1 short, alpha_2 long); the fundamental weight omega_1
then carries the 7-dimensional representation.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

log = logging.getLogger("qcrystal")

Weight = tuple[int, ...]
WeylWord = tuple[int, ...]

_SUPPORTED_RANKS = {"A": range(1, 5), "B": range(2, 4), "C": range(3, 4),
                    "D": range(4, 5), "G": range(2, 3)}


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix plus symmetrizers for one finite-type root system."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        a = self.cartan
        if len(a) != n or any(len(row) != n for row in a):
            raise ValueError("Cartan matrix shape does not match rank")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("diagonal Cartan entries must equal 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError("zero pattern of Cartan matrix must be symmetric")
        if len(self.sym) != n or any(d <= 0 for d in self.sym):
            raise ValueError("symmetrizers must be positive")
        for i in range(n):
            for j in range(n):
                if self.sym[i] * a[i][j] != self.sym[j] * a[j][i]:
                    raise ValueError("sym does not symmetrize the Cartan matrix")
        sym_matrix = [[self.sym[i] * a[i][j] for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _det([row[:k] for row in sym_matrix[:k]]) <= 0:
                raise ValueError("symmetrized Cartan matrix is not positive definite")

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def indices(self):
        """Simple-root indices 1..rank."""
        return range(1, self.rank + 1)


def _det(m):
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j in range(len(m)):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(minor)
    return total


def _build_cartan(family, rank):
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if family == "A":
        d = [1] * rank
    elif family == "B":
        # last simple root short, double bond into it
        a[rank - 1][rank - 2] = -2
        d = [2] * (rank - 1) + [1]
    elif family == "C":
        # last simple root long
        a[rank - 2][rank - 1] = -2
        d = [1] * (rank - 1) + [2]
    elif family == "D":
        # node 2 is the branch point: edges 1-2, 2-3, 2-4
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j in ((0, 1), (1, 2), (1, 3)):
            a[i][j] = a[j][i] = -1
        d = [1] * rank
    elif family == "G":
        a = [[2, -3], [-1, 2]]
        d = [1, 3]
    else:
        raise ValueError(f"unknown family {family!r}")
    return tuple(tuple(row) for row in a), tuple(d)


@lru_cache(maxsize=None)
def cartan_datum(name):
    """Look up a supported type by name, e.g. ``cartan_datum("B2")``."""
    name = name.strip().upper()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"cannot parse type name {name!r} (expected e.g. 'A2')")
    family, rank = name[0], int(name[1:])
    if family not in _SUPPORTED_RANKS or rank not in _SUPPORTED_RANKS[family]:
        supported = ", ".join(f"{f}{r}" for f, rs in sorted(_SUPPORTED_RANKS.items()) for r in rs)
        raise ValueError(f"type {name} is outside the supported table ({supported})")
    cartan, sym = _build_cartan(family, rank)
    return CartanDatum(family, rank, cartan, sym)


def _check_index(datum, i):
    if not 1 <= i <= datum.rank:
        raise IndexError(f"simple-root index {i} out of range 1..{datum.rank}")


def simple_root(datum, i):
    """alpha_i in fundamental-weight coordinates: the i-th Cartan column."""
    _check_index(datum, i)
    return tuple(datum.cartan[j][i - 1] for j in range(datum.rank))


def reflect(datum, i, mu):
    """Simple reflection s_i(mu) = mu - <h_i, mu> alpha_i."""
    _check_index(datum, i)
    c = mu[i - 1]
    if c == 0:
        return tuple(mu)
    alpha = simple_root(datum, i)
    return tuple(m - c * a for m, a in zip(mu, alpha))


def apply_word(datum, word, mu):
    """Act by s_{i_1} ... s_{i_k} on mu, rightmost letter first."""
    for i in reversed(word):
        mu = reflect(datum, i, mu)
    return mu


def rho(datum):
    """The Weyl vector: all fundamental-weight coordinates equal to 1."""
    return (1,) * datum.rank


def is_dominant(mu):
    return all(c >= 0 for c in mu)


@lru_cache(maxsize=None)
def _element_table(datum):
    """Map w(rho) -> lexicographically smallest reduced word for w.

    rho is regular, so w -> w(rho) is injective and serves as the identity
    key of a Weyl-group element.  Built breadth-first by length; a new
    element's canonical word is the minimum of (i,) + canonical(s_i w) over
    its left descents, which the level order makes available in time.
    """
    table = {rho(datum): ()}
    level = {rho(datum): ()}
    while level:
        nxt: dict[Weight, WeylWord] = {}
        for key, word in level.items():
            for i in datum.indices():
                new_key = reflect(datum, i, key)
                if new_key in table:
                    continue
                cand = (i,) + word
                if new_key not in nxt or cand < nxt[new_key]:
                    nxt[new_key] = cand
        table.update(nxt)
        level = nxt
    return table


def element_key(datum, word):
    """w(rho), a faithful fingerprint of the group element of ``word``."""
    return apply_word(datum, word, rho(datum))


def canonical_word(datum, word):
    """Lexicographically smallest reduced word for the element of ``word``."""
    for i in word:
        _check_index(datum, i)
    return _element_table(datum)[element_key(datum, word)]


def weyl_group(datum):
    """All Weyl-group elements as canonical reduced words, sorted by length."""
    return tuple(sorted(_element_table(datum).values(), key=lambda w: (len(w), w)))


def weyl_order(datum):
    return len(_element_table(datum))


def is_reduced(datum, word):
    """True iff no shorter word represents the same element."""
    return len(word) == len(canonical_word(datum, word))


def longest_word(datum):
    """Canonical reduced word of the longest element w_0."""
    return max(_element_table(datum).values(), key=lambda w: (len(w), w))


def length(datum, word):
    """Coxeter length of the element represented by ``word``."""
    return len(canonical_word(datum, word))


def all_reduced_words(datum, word):
    """Every reduced word of the element of ``word``, sorted.

    Enumerated by recursion over left descents, which walks the whole braid
    class.  Full enumeration is restricted to |W| <= 48; for larger groups a
    deterministic sample of at least 5 words is returned with a warning.
    """
    if weyl_order(datum) > 48:
        log.warning("|W(%s)| = %d > 48: sampling reduced words instead of "
                    "enumerating all of them", datum.name, weyl_order(datum))
        return _sample_reduced_words(datum, word, 5)
    table = _element_table(datum)
    memo: dict[Weight, tuple[WeylWord, ...]] = {}

    def rec(key):
        if key in memo:
            return memo[key]
        n = len(table[key])
        if n == 0:
            memo[key] = ((),)
            return memo[key]
        words = []
        for i in datum.indices():
            down = reflect(datum, i, key)
            if len(table[down]) == n - 1:
                words.extend((i,) + u for u in rec(down))
        memo[key] = tuple(sorted(words))
        return memo[key]

    return rec(element_key(datum, word))


def _sample_reduced_words(datum, word, count):
    table = _element_table(datum)
    rng = random.Random(0)
    target = element_key(datum, word)
    found = {canonical_word(datum, word)}
    for _ in range(200):
        key, picked = target, []
        while table[key]:
            descents = [i for i in datum.indices()
                        if len(table[reflect(datum, i, key)]) == len(table[key]) - 1]
            i = rng.choice(descents)
            picked.append(i)
            key = reflect(datum, i, key)
        found.add(tuple(picked))
        if len(found) >= count:
            break
    return tuple(sorted(found))


def _solve_root_coords(datum, mu):
    """Exact rational solution c of  sum_i c_i alpha_i = mu."""
    n = datum.rank
    m = [[Fraction(datum.cartan[r][c]) for c in range(n)] + [Fraction(mu[r])]
         for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col] / m[col][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][n] / m[r][r] for r in range(n))


def root_coords(datum, mu):
    """mu written in the simple-root basis, if the coefficients are integers."""
    coords = _solve_root_coords(datum, mu)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{mu} is not in the root lattice of {datum.name}")
    return tuple(int(c) for c in coords)


def dominance_leq(datum, mu, lam):
    """Dominance order: lam - mu a nonnegative integer sum of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coords = _solve_root_coords(datum, diff)
    return all(c.denominator == 1 and c >= 0 for c in coords)


@lru_cache(maxsize=None)
def positive_roots(datum):
    """All positive roots, as coefficient tuples over the simple roots.

    Computed as the reflection closure of the simple roots; in finite type
    every root has all-nonnegative or all-nonpositive coefficients.
    """
    n = datum.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        r = frontier.pop()
        for i in range(n):
            pairing = sum(r[j] * datum.cartan[i][j] for j in range(n))
            image = tuple(r[j] - pairing if j == i else r[j] for j in range(n))
            if image not in roots:
                roots.add(image)
                frontier.append(image)
    positives = sorted(r for r in roots if all(c >= 0 for c in r))
    assert 2 * len(positives) == len(roots)
    return tuple(positives)


def root_weight_coords(datum, root):
    """Convert simple-root coefficients to fundamental-weight coordinates."""
    n = datum.rank
    return tuple(sum(datum.cartan[j][i] * root[i] for i in range(n)) for j in range(n))


def weyl_orbit(datum, mu):
    """The Weyl orbit of a weight, as a set of weight tuples."""
    orbit = {tuple(mu)}
    frontier = [tuple(mu)]
    while frontier:
        nu = frontier.pop()
        for i in datum.indices():
            image = reflect(datum, i, nu)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


def dominant_representative(datum, mu):
    """The unique dominant weight in the Weyl orbit of mu."""
    mu = tuple(mu)
    while True:
        i = next((j for j, c in enumerate(mu) if c < 0), None)
        if i is None:
            return mu
        mu = reflect(datum, i + 1, mu)


def supported_types():
    """Names of every type in the embedded table."""
    return tuple(f"{fam}{r}" for fam, ranks in sorted(_SUPPORTED_RANKS.items())
                 for r in ranks)
