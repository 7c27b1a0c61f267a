"""Deterministic tree and forest generators.

Random trees come from uniformly random Prüfer sequences. Randomness comes
only from :class:`random.Random`, which is the Mersenne Twister (MT19937)
seeded with the given integer, so a ``(family, n, seed)`` triple reproduces
the same graph on every platform.

Generated vertices are labelled ``a, b, ..., z, aa, ab, ...`` by id.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .exceptions import InputError
from .graph import Graph, connected_components

ENUMERATION_CAP = 9
FAMILIES = ("random-tree", "random-forest", "path", "star", "caterpillar", "complete-enumeration")


def vertex_label(i: int) -> str:
    """Bijective base-26 label: 0 -> 'a', 25 -> 'z', 26 -> 'aa'."""
    out = []
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out.append(chr(97 + r))
    return "".join(reversed(out))


def _labels(n):
    return [vertex_label(i) for i in range(n)]


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")


def prufer_decode(seq, n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``0..n-1`` encoded by ``seq`` (length ``n-2``)."""
    if n < 2 or len(seq) != n - 2:
        raise InputError(f"a Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def tree_from_prufer(seq, n: int) -> Graph:
    if n == 1:
        return Graph(["a"])
    return Graph(_labels(n), prufer_decode(seq, n))


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniformly random labelled tree on ``n`` vertices."""
    _check_n(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    return tree_from_prufer(seq, n)


def random_forest(n: int, seed: int = 0) -> Graph:
    """Random forest: a random tree with a random number of edges removed."""
    _check_n(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    edges = prufer_decode(seq, n) if n >= 2 else []
    drop = rng.randint(0, max(0, n // 3))
    for _ in range(min(drop, len(edges))):
        edges.pop(rng.randrange(len(edges)))
    return Graph(_labels(n), edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices, once each (``n**(n-2)`` trees)."""
    _check_n(n)
    if n > ENUMERATION_CAP:
        raise InputError(f"refusing to enumerate trees on {n} > {ENUMERATION_CAP} vertices")
    if n == 1:
        yield Graph(["a"])
        return
    labels = _labels(n)
    for seq in product(range(n), repeat=n - 2):
        yield Graph(labels, prufer_decode(seq, n))


def path(n: int) -> Graph:
    _check_n(n)
    return Graph(_labels(n), [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Center ``a`` joined to ``n - 1`` leaves."""
    _check_n(n)
    return Graph(_labels(n), [(0, i) for i in range(1, n)])


def caterpillar(n: int) -> Graph:
    """Spine of ``ceil(n/2)`` vertices; the first ``floor(n/2)`` each get one leaf.

    Spine vertices take ids ``0..s-1`` and the leaf of spine vertex ``i`` has
    id ``s + i``.
    """
    _check_n(n)
    spine = (n + 1) // 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(i, spine + i) for i in range(n - spine)]
    return Graph(_labels(n), edges)


_NAMED = {"path": path, "star": star, "caterpillar": caterpillar}


def family(name: str, n: int) -> Graph:
    try:
        build = _NAMED[name]
    except KeyError:
        raise InputError(f"unknown family {name!r}; choose from {sorted(_NAMED)}") from None
    return build(n)


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    family: str = "random-tree"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {list(FAMILIES)}")
        _check_n(self.n)

    def graphs(self) -> Iterator[Graph]:
        if self.family == "random-tree":
            yield random_tree(self.n, self.seed)
        elif self.family == "random-forest":
            yield random_forest(self.n, self.seed)
        elif self.family == "complete-enumeration":
            yield from enumerate_trees(self.n)
        else:
            yield family(self.family, self.n)


def _rooted_code(adjacency, v, parent):
    # AHU encoding, iterative to survive long paths
    stack = [(v, parent, False)]
    codes = {}
    while stack:
        u, p, done = stack.pop()
        if done:
            codes[u] = "(" + "".join(sorted(codes[c] for c in adjacency[u] if c != p)) + ")"
        else:
            stack.append((u, p, True))
            stack.extend((c, u, False) for c in adjacency[u] if c != p)
    return codes[v]


def _centers(adjacency, comp):
    degree = {v: len(adjacency[v]) for v in comp}
    layer = [v for v in comp if degree[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant code of a forest (equal codes iff isomorphic)."""
    forms = []
    for comp in connected_components(g):
        forms.append(min(_rooted_code(g.adjacency, c, None) for c in _centers(g.adjacency, comp)))
    return tuple(sorted(forms))
