"""Highest-weight crystals via piecewise-linear paths in the weight lattice.

An element of B(lambda) is realized as a piecewise-linear path from the
origin, kept in a canonical reparametrization-free form: the tuple of
displacement vectors of its maximal straight runs, with exact Fraction
coordinates.  The lowering operator cuts the path at the last time the
i-height <h_i, path(t)> reaches its minimum m and at the first later time
it reaches m + 1, reflects the middle piece by s_i, and leaves the rest
alone; the raising operator is its conjugate under path reversal.  Crystal
data read off the height function:

    eps_i = -min(height),   phi_i = height(1) - min(height).

Starting from the straight path to a dominant lambda, the closure under the
lowering operators is a model of the crystal B(lambda); minima of the height
function then stay integral, which the code checks as it goes.  Sizes,
characters and the rank-one chain are certified against independent oracles
in the test suite rather than trusted.
"""

from dataclasses import dataclass
from fractions import Fraction

from .character import weyl_dimension
from .root_data import is_dominant, simple_root

DEFAULT_MAX_ELEMENTS = 200_000


class ResourceCapError(RuntimeError):
    """Crystal generation refused: projected or actual size exceeds the cap."""


def _positive_parallel(d, e):
    k = next(j for j, x in enumerate(d) if x)
    if e[k] == 0 or (e[k] > 0) != (d[k] > 0):
        return False
    c = Fraction(e[k]) / d[k]
    return all(ei == c * di for di, ei in zip(d, e))


def _canonical_steps(steps):
    out: list[tuple[Fraction, ...]] = []
    for step in steps:
        step = tuple(Fraction(x) for x in step)
        if all(x == 0 for x in step):
            continue
        if out and _positive_parallel(out[-1], step):
            out[-1] = tuple(a + b for a, b in zip(out[-1], step))
        else:
            out.append(step)
    return tuple(out)


@dataclass(frozen=True)
class LSPath:
    """A path from the origin, as displacements of its maximal straight runs."""

    steps: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", _canonical_steps(self.steps))

    def endpoint(self):
        if not self.steps:
            return ()
        return tuple(sum(col) for col in zip(*self.steps))

    def weight(self, rank=None):
        """Endpoint of the path; integral for every crystal path."""
        end = self.endpoint()
        if not end:
            return (0,) * rank if rank is not None else ()
        if any(x.denominator != 1 for x in end):
            raise ValueError(f"path endpoint {end} is not an integral weight")
        return tuple(int(x) for x in end)

    def sort_key(self):
        return self.steps

    def __repr__(self):
        pretty = [tuple(str(x) for x in s) for s in self.steps]
        return f"LSPath({pretty!r})"


def straight_path(datum, lam):
    """The highest-weight element: one straight segment to lambda."""
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise ValueError(f"weight length {len(lam)} does not match rank {datum.rank}")
    if not is_dominant(lam):
        raise ValueError(f"straight_path needs a dominant weight, got {lam}")
    return LSPath((lam,))


def _heights(steps, i0):
    h = [Fraction(0)]
    for step in steps:
        h.append(h[-1] + step[i0])
    return h


def _reflect_step(alpha, i0, step):
    c = step[i0]
    if c == 0:
        return step
    return tuple(x - c * a for x, a in zip(step, alpha))


def _lowered(datum, i, steps):
    """Core lowering operator on a canonical step tuple; None at string bottom."""
    i0 = i - 1
    h = _heights(steps, i0)
    m = min(h)
    if m.denominator != 1:
        raise ValueError(f"non-integral height minimum {m}: not a crystal path")
    if h[-1] - m < 1:
        return None
    j0 = max(j for j, v in enumerate(h) if v == m)
    jc = next(j for j in range(j0 + 1, len(h)) if h[j] >= m + 1)
    alpha = simple_root(datum, i)
    new = list(steps[:j0])
    if h[jc] == m + 1:
        new.extend(_reflect_step(alpha, i0, s) for s in steps[j0:jc])
        new.extend(steps[jc:])
    else:
        # the ascent crosses m+1 inside segment jc-1: split it there
        x = (m + 1 - h[jc - 1]) / (h[jc] - h[jc - 1])
        head = tuple(c * x for c in steps[jc - 1])
        rest = tuple(c * (1 - x) for c in steps[jc - 1])
        new.extend(_reflect_step(alpha, i0, s) for s in steps[j0:jc - 1])
        new.append(_reflect_step(alpha, i0, head))
        new.append(rest)
        new.extend(steps[jc:])
    return _canonical_steps(new)


def _reversed_steps(steps):
    return tuple(tuple(-x for x in s) for s in reversed(steps))


def f_tilde(datum, i, path):
    """Lowering operator: weight drops by alpha_i, or None if phi_i = 0."""
    steps = _lowered(datum, i, path.steps)
    return None if steps is None else LSPath(steps)


def e_tilde(datum, i, path):
    """Raising operator, inverse to f_tilde: None if eps_i = 0.

    Computed by conjugating the lowering operator with path reversal
    t -> 1 - t, which swaps the roles of eps and phi.
    """
    steps = _lowered(datum, i, _reversed_steps(path.steps))
    return None if steps is None else LSPath(_reversed_steps(steps))


def eps_phi(datum, i, path):
    """(eps_i, phi_i) read off the i-height function of the path."""
    h = _heights(path.steps, i - 1)
    m = min(h)
    if m.denominator != 1 or h[-1].denominator != 1:
        raise ValueError("non-integral heights: not a crystal path")
    return int(-m), int(h[-1] - m)


@dataclass(frozen=True)
class CrystalElement:
    """One crystal vertex with its cached weight and string data."""

    path: LSPath
    weight: tuple[int, ...]
    eps: tuple[int, ...]
    phi: tuple[int, ...]


class CrystalGraph:
    """B(lambda): elements indexed 0..n-1 with i-labeled lowering edges.

    Element 0 is the highest-weight element.  Ids follow breadth-first
    level order (level = height of lambda minus the weight), ties broken
    by the canonical path encoding, so ids are stable across runs.
    """

    def __init__(self, datum, highest_weight, elements, edges):
        self.datum = datum
        self.highest_weight = tuple(highest_weight)
        self.elements = elements
        self.edges = edges
        self._parents = {(child, i): b for (b, i), child in edges.items()}

    def __len__(self):
        return len(self.elements)

    @property
    def rank(self):
        return self.datum.rank

    def indices(self):
        return self.datum.indices()

    def f(self, b, i):
        """Id of f_tilde_i(b), or None."""
        return self.edges.get((b, i))

    def e(self, b, i):
        """Id of e_tilde_i(b), or None."""
        return self._parents.get((b, i))

    def eps(self, b, i):
        return self.elements[b].eps[i - 1]

    def phi(self, b, i):
        return self.elements[b].phi[i - 1]

    def weight(self, b):
        return self.elements[b].weight

    def path(self, b):
        return self.elements[b].path

    def all_ids(self):
        return range(len(self.elements))


def generate_crystal(datum, lam, max_elements=DEFAULT_MAX_ELEMENTS):
    """Breadth-first closure of the straight path under all f_tilde.

    Refuses up front when the Weyl dimension exceeds ``max_elements``
    (and again during generation, in case the two ever disagree).
    """
    lam = tuple(lam)
    projected = weyl_dimension(datum, lam)
    if projected > max_elements:
        raise ResourceCapError(
            f"B({lam}) for {datum.name} has {projected} elements, "
            f"above the cap of {max_elements}")
    top = straight_path(datum, lam)
    paths = [top]
    ids = {top.steps: 0}
    edges: dict[tuple[int, int], int] = {}
    frontier = [0]
    while frontier:
        pending: dict[tuple, LSPath] = {}
        hits: list[tuple[int, int, tuple]] = []
        for b in frontier:
            for i in datum.indices():
                child = f_tilde(datum, i, paths[b])
                if child is None:
                    continue
                hits.append((b, i, child.steps))
                if child.steps not in ids:
                    pending.setdefault(child.steps, child)
        frontier = []
        for key in sorted(pending):
            ids[key] = len(paths)
            paths.append(pending[key])
            frontier.append(ids[key])
        if len(paths) > max_elements:
            raise ResourceCapError(f"crystal generation passed {max_elements} elements")
        for b, i, key in hits:
            edges[(b, i)] = ids[key]

    elements = []
    for p in paths:
        pairs = [eps_phi(datum, i, p) for i in datum.indices()]
        elements.append(CrystalElement(
            path=p,
            weight=p.weight(rank=datum.rank),
            eps=tuple(e for e, _ in pairs),
            phi=tuple(f for _, f in pairs)))
    return CrystalGraph(datum, lam, elements, edges)


def verify_normal(graph):
    """Check the normal-crystal bookkeeping on the whole graph.

    Per element: weight coordinate i equals phi_i - eps_i.  Per lowering
    edge: eps goes up by one, phi down by one, and the raising operator
    inverts the edge at the path level.  Also checks that the unique
    source (all eps zero) is element 0 with the highest weight, and that
    an edge exists exactly where phi is positive.  Returns (ok, witness).
    """
    datum = graph.datum
    sources = [b for b in graph.all_ids()
               if all(graph.eps(b, i) == 0 for i in graph.indices())]
    if sources != [0] or graph.weight(0) != graph.highest_weight:
        return False, ("highest-weight element", sources)
    for b in graph.all_ids():
        for i in graph.indices():
            if graph.weight(b)[i - 1] != graph.phi(b, i) - graph.eps(b, i):
                return False, ("weight vs phi-eps", b, i)
            if (graph.f(b, i) is not None) != (graph.phi(b, i) > 0):
                return False, ("edge map vs phi", b, i)
            if (graph.e(b, i) is not None) != (graph.eps(b, i) > 0):
                return False, ("parent map vs eps", b, i)
    for (b, i), child in graph.edges.items():
        if graph.eps(child, i) != graph.eps(b, i) + 1:
            return False, ("eps along edge", b, i, child)
        if graph.phi(child, i) != graph.phi(b, i) - 1:
            return False, ("phi along edge", b, i, child)
        back = e_tilde(datum, i, graph.path(child))
        if back is None or back.steps != graph.path(b).steps:
            return False, ("raising does not invert lowering", b, i, child)
    return True, None
