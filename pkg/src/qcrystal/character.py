"""Formal characters, Demazure operators and the Freudenthal oracle.

A formal character is a finite multiplicity map from weights to integers.
Characters of crystal subsets are nonnegative, but Demazure operators need
signed intermediate values, so negative entries are allowed and crystal
characters are validated at the boundary instead.

Two independent oracles live here: the Weyl dimension product formula and
Freudenthal's multiplicity recursion.  Neither touches the path model, so
both can certify generated crystals.  Character equality is all that is
certified: agreement of char B(lambda) with the Weyl character is a
consequence of the underlying vanishing theory, not a proof of it.
"""

import itertools
from fractions import Fraction

from .root_data import (dominant_representative, is_dominant, positive_roots,
                        root_coords, root_weight_coords, simple_root, weyl_orbit)


class FormalCharacter:
    """Finite integer multiplicity map on the weight lattice."""

    __slots__ = ("_mult",)

    def __init__(self, mult=None):
        acc: dict[tuple[int, ...], int] = {}
        if mult:
            pairs = mult.items() if isinstance(mult, dict) else mult
            for weight, m in pairs:
                weight = tuple(weight)
                acc[weight] = acc.get(weight, 0) + m
        object.__setattr__(self, "_mult", {w: m for w, m in acc.items() if m})

    def __setattr__(self, name, value):
        raise AttributeError("FormalCharacter is immutable")

    @classmethod
    def monomial(cls, weight, mult=1):
        return cls({tuple(weight): mult})

    def multiplicity(self, weight):
        return self._mult.get(tuple(weight), 0)

    __getitem__ = multiplicity

    def items(self):
        """(weight, multiplicity) pairs, weights lex-descending."""
        return tuple(sorted(self._mult.items(), reverse=True))

    def support(self):
        return frozenset(self._mult)

    def total(self):
        """Sum of all multiplicities (the dimension, for a crystal character)."""
        return sum(self._mult.values())

    def __len__(self):
        return len(self._mult)

    def __bool__(self):
        return bool(self._mult)

    def __add__(self, other):
        out = dict(self._mult)
        for w, m in other._mult.items():
            out[w] = out.get(w, 0) + m
        return FormalCharacter(out)

    def __neg__(self):
        return FormalCharacter({w: -m for w, m in self._mult.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def render(self):
        """Canonical text form: one ``(<coords>) : <mult>`` line per weight."""
        lines = []
        for w, m in self.items():
            coords = ", ".join(str(c) for c in w)
            lines.append(f"({coords}) : {m}")
        return "\n".join(lines)

    def __repr__(self):
        return f"FormalCharacter({dict(self.items())!r})"


def char_of(members, graph):
    """Character of a subset of crystal elements, aggregated by weight."""
    return FormalCharacter((graph.weight(b), 1) for b in members)


def demazure_operator(datum, i, chi):
    """The idempotent Demazure operator D_i on the group algebra of P.

    On a monomial e^mu with m = <h_i, mu>:
        m >= 0:   e^mu + e^(mu - alpha_i) + ... + e^(mu - m alpha_i)
        m == -1:  0
        m <= -2:  -(e^(mu + alpha_i) + ... + e^(mu + (-m-1) alpha_i))
    extended linearly.  This is (e^mu - e^(s_i mu - alpha_i)) / (1 - e^(-alpha_i))
    with the geometric series summed exactly.
    """
    alpha = simple_root(datum, i)
    out: dict[tuple[int, ...], int] = {}
    for mu, c in chi.items():
        m = mu[i - 1]
        if m >= 0:
            for k in range(m + 1):
                w = tuple(x - k * a for x, a in zip(mu, alpha))
                out[w] = out.get(w, 0) + c
        elif m <= -2:
            for k in range(1, -m):
                w = tuple(x + k * a for x, a in zip(mu, alpha))
                out[w] = out.get(w, 0) - c
    return FormalCharacter(out)


def apply_demazure_word(datum, word, chi):
    """Compose D_{i_1} ... D_{i_n}, the rightmost letter acting first."""
    for i in reversed(word):
        chi = demazure_operator(datum, i, chi)
    return chi


def verify_demazure_character(graph, lam, word):
    """Check char B_w(lambda) == D_word(e^lambda) exactly.

    The subset recursion saturates letters right to left, so the operator
    composition applies the last letter first; this pairing is what makes
    the two sides agree word by word.
    """
    from .demazure import demazure_crystal

    lam = tuple(lam)
    if tuple(graph.highest_weight) != lam:
        raise ValueError("graph highest weight does not match lam")
    dc = demazure_crystal(graph, word)
    lhs = char_of(dc.members, graph)
    rhs = apply_demazure_word(graph.datum, word, FormalCharacter.monomial(lam))
    if lhs == rhs:
        return True, None
    return False, (lhs, rhs)


def weyl_dimension(datum, lam):
    """Weyl dimension product over positive roots, as an exact integer.

    Each factor is <lam + rho, alpha^vee> / <rho, alpha^vee>; with alpha
    written over the simple roots the pairing reduces to an integer sum
    against the symmetrizers, and the root-length normalizer cancels in
    the ratio.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"dimension formula needs a dominant weight, got {lam}")
    d = datum.sym
    acc = Fraction(1)
    for r in positive_roots(datum):
        num = sum(r[j] * d[j] * (lam[j] + 1) for j in range(datum.rank))
        den = sum(r[j] * d[j] for j in range(datum.rank))
        acc *= Fraction(num, den)
    if acc.denominator != 1:
        raise ArithmeticError("non-integral Weyl dimension: root enumeration bug")
    return int(acc)


def weyl_character(datum, lam):
    """Character of the irreducible highest-weight module, via Freudenthal.

    Multiplicities are computed on the dominant cone by the recursion

        (|lam+rho|^2 - |mu+rho|^2) m_mu
            = 2 sum_{alpha > 0} sum_{k >= 1} m_{mu + k alpha} (mu + k alpha, alpha)

    in exact integer arithmetic (no group-algebra division), then spread
    over Weyl orbits.  Independent of the path model by construction.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"Freudenthal needs a dominant weight, got {lam}")
    d = datum.sym
    n = datum.rank
    roots = [(r, root_weight_coords(datum, r)) for r in positive_roots(datum)]

    # Dominant weights <= lam live in the box 0 <= c <= coords(lam - w0 lam),
    # where -w0(lam) is the dominant representative of -lam.
    neg_lowest = dominant_representative(datum, tuple(-x for x in lam))
    bound = root_coords(datum, tuple(a + b for a, b in zip(lam, neg_lowest)))
    dominant = {}
    for c in itertools.product(*(range(b + 1) for b in bound)):
        shift = root_weight_coords(datum, c)
        mu = tuple(a - s for a, s in zip(lam, shift))
        if is_dominant(mu):
            dominant[mu] = c

    mult = {lam: 1}
    for mu, c in sorted(dominant.items(), key=lambda item: sum(item[1])):
        if mu == lam:
            continue
        total = 0
        for r, rw in roots:
            k = 1
            while all(ci - k * ri >= 0 for ci, ri in zip(c, r)):
                nu = tuple(m + k * w for m, w in zip(mu, rw))
                m_nu = mult.get(dominant_representative(datum, nu), 0)
                if m_nu:
                    total += m_nu * sum(r[j] * d[j] * nu[j] for j in range(n))
                k += 1
        denom = sum(c[j] * d[j] * (lam[j] + mu[j] + 2) for j in range(n))
        m_mu, rem = divmod(2 * total, denom)
        if rem or m_mu <= 0:
            raise ArithmeticError(f"Freudenthal recursion failed at weight {mu}")
        mult[mu] = m_mu

    full: dict[tuple[int, ...], int] = {}
    for mu, m in mult.items():
        for nu in weyl_orbit(datum, mu):
            full[nu] = m
    return FormalCharacter(full)
