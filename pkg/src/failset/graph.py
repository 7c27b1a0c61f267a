"""Graph and rooted-tree model, neighborhoods, and the failure-set predicate.

Vertices carry a dense integer id (``0..n-1``) and a unique string label.
All set-valued results are ``frozenset`` objects of ids.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exceptions import InputError, ParseError, StructureError


class Graph:
    """Undirected simple graph in sorted adjacency-list form.

    Parameters
    ----------
    labels : sequence of str
        Vertex labels indexed by id. Must be unique and non-empty.
    edges : iterable of (int, int)
        Undirected edges between ids. Self-loops and repeated edges are
        rejected.
    """

    __slots__ = ("labels", "adjacency", "_index", "_m")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        labels = tuple(str(x) for x in labels)
        if any(not x for x in labels):
            raise InputError("vertex labels must be non-empty")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("vertex labels must be unique")
        n = len(labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references an unknown vertex id")
            if u == v:
                raise InputError(f"self-loop at {labels[u]!r}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge {labels[u]!r} {labels[v]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.labels = labels
        self.adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        self._index = index
        self._m = m

    @classmethod
    def from_edges(cls, edges, labels=None) -> "Graph":
        """Build a graph from label pairs, assigning ids in first-appearance order.

        ``labels`` optionally pre-declares vertices (including isolated ones)
        before any edge is seen.
        """
        order: dict[str, int] = {}
        for label in labels or ():
            order.setdefault(str(label), len(order))
        pairs = []
        for u, v in edges:
            iu = order.setdefault(str(u), len(order))
            iv = order.setdefault(str(v), len(order))
            pairs.append((iu, iv))
        return cls(list(order), pairs)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.labels, self.adjacency))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def ids_of(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.id_of(x) for x in labels)

    def label_set(self, ids: Iterable[int]) -> list[str]:
        """Labels of ``ids``, sorted by label."""
        return sorted(self.labels[i] for i in ids)

    def check_vertex(self, v: int) -> int:
        try:
            v = operator.index(v)
        except TypeError:
            raise InputError(f"vertex ids must be integers, got {v!r}") from None
        if not 0 <= v < self.n:
            raise InputError(f"unknown vertex id {v!r} (graph has {self.n} vertices)")
        return v

    def check_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.check_vertex(v) for v in vs)

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` with ids renumbered in ascending order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [
            (new[u], new[v])
            for u in old
            for v in self.adjacency[u]
            if u < v and v in new
        ]
        return Graph([self.labels[v] for v in old], edges), old


def parse_edge_list(text: str) -> Graph:
    """Parse the whitespace-separated edge-list format.

    ``#`` starts a comment, blank lines are skipped, a line with one label
    declares a vertex, and a line with two labels declares an undirected
    edge. Ids follow first appearance.
    """
    order: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ParseError(f"expected one or two labels, got {len(parts)}: {raw.strip()!r}", lineno)
        ids = [order.setdefault(p, len(order)) for p in parts]
        if len(ids) == 1:
            continue
        u, v = ids
        if u == v:
            raise ParseError(f"self-loop on {parts[0]!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {parts[0]!r} {parts[1]!r}", lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph(list(order), edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    """Serialize ``g`` so that :func:`parse_edge_list` reproduces it exactly.

    Every vertex is declared first (in id order) so ids survive the round trip.
    """
    lines = list(g.labels)
    lines += [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_label_list(text: str) -> list[str]:
    """Parse a candidate-set file: one label per line, ``#`` comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line.split()) != 1:
            raise ParseError(f"expected a single label, got {raw.strip()!r}", lineno)
        out.append(line)
    return out


@dataclass(frozen=True)
class Instance:
    """A graph with component threshold ``k`` and distance ``ell``."""

    graph: Graph
    k: int
    ell: int

    def __post_init__(self):
        check_params(self.graph.n, self.k, self.ell)


def check_params(n: int, k, ell) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise InputError(f"k must be an integer, got {k!r}")
    if isinstance(ell, bool) or not isinstance(ell, int):
        raise InputError(f"ell must be an integer, got {ell!r}")
    if not 1 <= k <= n:
        raise InputError(f"k={k} outside 1..n (n={n})")
    if ell < 0:
        raise InputError(f"ell={ell} must be non-negative")


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A tree together with a chosen root.

    ``postorder`` is a depth-first postorder with children visited in
    ascending id, so the vertices of each subtree form a contiguous block
    ending at the subtree's root (see :meth:`subtree`).
    """

    graph: Graph
    root: int
    parent: tuple
    children: tuple
    depth: tuple
    postorder: tuple
    position: tuple = field(repr=False)
    size: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def subtree(self, v: int) -> tuple:
        """Vertices of the subtree rooted at ``v``, in postorder."""
        end = self.position[v] + 1
        return self.postorder[end - self.size[v]:end]


def validate_tree(g: Graph, root: int = 0) -> RootedTree:
    """Check that ``g`` is a tree and root it at ``root``."""
    n = g.n
    if n == 0:
        raise StructureError("empty graph is not a tree")
    g.check_vertex(root)
    n_comp = len(connected_components(g))
    if g.m != n - n_comp:
        raise StructureError("not a tree: graph contains a cycle")
    if n_comp > 1:
        raise StructureError(f"forest: use forest solver ({n_comp} components)")

    parent: list = [None] * n
    children: list[list[int]] = [[] for _ in range(n)]
    depth = [0] * n
    postorder: list[int] = []
    size = [1] * n
    stack = [(root, iter(g.adjacency[root]))]
    while stack:
        v, it = stack[-1]
        for c in it:
            if c != parent[v]:
                parent[c] = v
                depth[c] = depth[v] + 1
                children[v].append(c)
                stack.append((c, iter(g.adjacency[c])))
                break
        else:
            stack.pop()
            postorder.append(v)
            if parent[v] is not None:
                size[parent[v]] += size[v]
    position = [0] * n
    for i, v in enumerate(postorder):
        position[v] = i
    return RootedTree(
        graph=g,
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        depth=tuple(depth),
        postorder=tuple(postorder),
        position=tuple(position),
        size=tuple(size),
    )


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop distances from ``source``; vertices in other components are absent."""
    g.check_vertex(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def _ball(adjacency, sources, ell: int, seen) -> None:
    # multi-source BFS truncated at depth ell; ``seen`` must start all zero.
    # All sources start at layer 0 so first reach is the nearest-source distance.
    frontier = []
    for s in sources:
        if not seen[s]:
            seen[s] = 1
            frontier.append(s)
    for _ in range(ell):
        if not frontier:
            break
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        frontier = nxt


def mark_ball(adjacency, v: int, ell: int, covered) -> None:
    """Set ``covered[u] = 1`` for every ``u`` within ``ell`` hops of ``v``."""
    covered[v] = 1
    seen = {v}
    frontier = [v]
    for _ in range(ell):
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    covered[w] = 1
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt


def covered_mask(g: Graph, s: Iterable[int], ell: int) -> bytearray:
    """Indicator array of ``N_ell[s]``."""
    seen = bytearray(g.n)
    _ball(g.adjacency, s, ell, seen)
    return seen


def closed_neighborhood(g: Graph, s: Iterable[int], ell: int) -> frozenset[int]:
    """``N_ell[s]``: every vertex within ``ell`` hops of some member of ``s``."""
    s = g.check_vertices(s)
    if ell < 0:
        raise InputError(f"ell={ell} must be non-negative")
    mask = covered_mask(g, s, ell)
    return frozenset(i for i, c in enumerate(mask) if c)


def _components_avoiding(g: Graph, blocked) -> list[list[int]]:
    n = g.n
    seen = bytearray(blocked) if blocked is not None else bytearray(n)
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components of ``g``, ordered by smallest member id."""
    return [frozenset(c) for c in _components_avoiding(g, None)]


def surviving_components(g: Graph, f: Iterable[int], ell: int) -> list[tuple[frozenset[int], int]]:
    """Components of the subgraph induced on ``V \\ N_ell[f]`` with their orders.

    Ordered by smallest member id.
    """
    f = g.check_vertices(f)
    blocked = covered_mask(g, f, ell)
    return [(frozenset(c), len(c)) for c in _components_avoiding(g, blocked)]


def is_failure_set(inst: Instance, f: Iterable[int]) -> bool:
    """True iff every surviving component has order below ``inst.k``."""
    return first_large_component(inst, f) is None


def first_large_component(inst: Instance, f: Iterable[int]):
    """The first surviving component of order at least ``k``, or None."""
    for comp, order in surviving_components(inst.graph, f, inst.ell):
        if order >= inst.k:
            return comp
    return None


def comp_orders(tree: RootedTree, covered, vertices=None, out=None) -> list[int]:
    """Component orders for every vertex in ``vertices`` (a postorder run).

    ``covered`` is an indicator of ``N_ell[F]``. ``vertices`` defaults to the
    whole tree and must list children before parents. Values are written into
    ``out`` (allocated if missing), which is also returned.
    """
    if out is None:
        out = [0] * tree.n
    children = tree.children
    for v in tree.postorder if vertices is None else vertices:
        if covered[v]:
            out[v] = 0
        else:
            total = 1
            for c in children[v]:
                total += out[c]
            out[v] = total
    return out


def comp_order(tree: RootedTree, f: Iterable[int], ell: int, v: int) -> int:
    """Order of the surviving part of ``v``'s subtree that hangs from ``v``.

    Zero when ``v`` lies in ``N_ell[f]``; otherwise one plus the children's
    values.
    """
    tree.graph.check_vertex(v)
    covered = covered_mask(tree.graph, tree.graph.check_vertices(f), ell)
    return comp_orders(tree, covered, tree.subtree(v))[v]


def diameter(g: Graph) -> int:
    """Largest hop distance between two vertices of a connected graph."""
    if g.n == 0:
        raise StructureError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if len(dist) != g.n:
            raise StructureError("diameter undefined: graph is disconnected")
        best = max(best, max(dist.values()))
    return best
