"""Brute-force minimality oracle and the fail-mapping construction.

The oracle works on any simple graph and shares no code with the tree
solver: neighborhoods and surviving components are computed with integer
bitmasks.

:func:`build_mapping` takes an arbitrary candidate set ``W`` and pushes each
member's "fail" up towards the root whenever doing so cannot leave a large
component behind. For a failure set ``W`` the image always lies between the
solver's set ``F`` and ``F | {root}``, so ``|F| <= |W|``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import InputError, OracleRefusal
from .graph import (
    Instance,
    RootedTree,
    comp_orders,
    covered_mask,
    is_failure_set,
    validate_tree,
)
from .solver import _descendants_at

logger = logging.getLogger(__name__)

DEFAULT_CAP = 20


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    witness: frozenset
    subsets_examined: int


def _ball_masks(g, ell):
    masks = []
    for v in range(g.n):
        ball = 1 << v
        frontier = ball
        for _ in range(ell):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= _adj_mask(g, low.bit_length() - 1)
                f ^= low
            nxt &= ~ball
            if not nxt:
                break
            ball |= nxt
            frontier = nxt
        masks.append(ball)
    return masks


def _adj_mask(g, v):
    m = 0
    for w in g.adjacency[v]:
        m |= 1 << w
    return m


def _has_large_component(alive, adj, k):
    # flood fill over the set bits of ``alive``
    while alive:
        comp = frontier = alive & -alive
        size = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            nxt &= alive & ~comp
            comp |= nxt
            size += bin(nxt).count("1")
            frontier = nxt
        if size >= k:
            return True
        alive &= ~comp
    return False


def brute_force_minimum(inst: Instance, cap: int | None = DEFAULT_CAP) -> OracleResult:
    """Smallest failure set by exhaustive enumeration.

    Subsets are tried by increasing size and, within a size, in
    lexicographic order of their sorted ids; the first hit is returned.
    ``cap=None`` disables the size guard.
    """
    g = inst.graph
    n = g.n
    if cap is not None and n > cap:
        raise OracleRefusal(n, cap)
    full = (1 << n) - 1
    balls = _ball_masks(g, inst.ell)
    adj = [_adj_mask(g, v) for v in range(n)]
    examined = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            examined += 1
            cov = 0
            for v in combo:
                cov |= balls[v]
            if not _has_large_component(full & ~cov, adj, inst.k):
                return OracleResult(size, frozenset(combo), examined)
    raise AssertionError("unreachable: V is always a failure set")


def domination_number(g, ell: int, cap: int | None = DEFAULT_CAP) -> int:
    """Distance-``ell`` domination number by exhaustive search."""
    n = g.n
    if cap is not None and n > cap:
        raise OracleRefusal(n, cap)
    full = (1 << n) - 1
    balls = _ball_masks(g, ell)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            cov = 0
            for v in combo:
                cov |= balls[v]
            if cov == full:
                return size
    raise AssertionError("unreachable")


@dataclass
class FailMapping:
    """Where each member of ``w`` ended up after the upward moves.

    ``moves`` records ``(v, parent, members)`` for every moved-up fail, in
    traversal order.
    """

    tree: RootedTree
    inst: Instance
    w: frozenset
    m: dict
    moves: list = field(default_factory=list)

    @property
    def image(self) -> frozenset:
        return frozenset(self.m.values())


def build_mapping(tree: RootedTree, inst: Instance, w) -> FailMapping:
    """Push each member of ``w`` up the tree where the move is harmless.

    Visiting vertices in postorder, the component orders of ``T_v`` are
    computed against the current image restricted to ``T_v`` minus ``v``
    itself. If ``v`` is not the root and every vertex exactly ``ell`` levels
    below ``v`` has order below ``k``, everything mapped to ``v`` moves to
    ``v``'s parent.
    """
    if tree.graph is not inst.graph and tree.graph != inst.graph:
        raise InputError("tree and instance refer to different graphs")
    w = tree.graph.check_vertices(w)
    k, ell = inst.k, inst.ell
    m = {x: x for x in w}
    mapping = FailMapping(tree, inst, w, m)
    if not w:
        return mapping

    g = tree.graph
    orders = [0] * g.n
    for v in tree.postorder:
        if v == tree.root:
            continue
        block = tree.subtree(v)
        in_block = set(block)
        restricted = {x for x in m.values() if x in in_block and x != v}
        covered = covered_mask(g, restricted, ell)
        comp_orders(tree, covered, block, orders)
        if all(orders[u] < k for u in _descendants_at(tree, v, ell)):
            moved = sorted(x for x, img in m.items() if img == v)
            if moved:
                p = tree.parent[v]
                for x in moved:
                    m[x] = p
                mapping.moves.append((v, p, tuple(moved)))
    return mapping


@dataclass
class MappingReport:
    image: frozenset
    image_is_failure_set: bool
    contains_f: bool
    within_f_and_root: bool
    cardinality_ok: bool
    root_extra: bool
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_mapping_lemmas(tree: RootedTree, inst: Instance, w, f) -> MappingReport:
    """Check the mapping guarantees for a failure set ``w``.

    ``f`` is the solver's failure set on the same rooted tree. Checks that the
    image is a failure set, that ``f <= image <= f | {root}``, and that
    ``|f| <= |w|``. Violations are reported with the move trace.
    """
    w = frozenset(w)
    f = frozenset(f)
    if not is_failure_set(inst, w):
        raise InputError("candidate set is not a failure set")
    mapping = build_mapping(tree, inst, w)
    image = mapping.image
    labels = tree.graph.labels
    root = tree.root

    a = is_failure_set(inst, image)
    b_low = f <= image
    b_high = image <= f | {root}
    c = len(f) <= len(w)
    extra = root in image and root not in f
    if extra:
        logger.info("root %r is in the image but not in F", labels[root])

    violations = []
    if not (a and b_low and b_high and c):
        trace = "; ".join(
            f"{labels[v]}->{labels[p]} carrying {[labels[x] for x in xs]}"
            for v, p, xs in mapping.moves
        )
        names = lambda s: sorted(labels[x] for x in s)  # noqa: E731
        if not a:
            violations.append(f"image {names(image)} is not a failure set")
        if not b_low:
            violations.append(f"F members {names(f - image)} missing from image")
        if not b_high:
            violations.append(f"image members {names(image - f - {root})} outside F and root")
        if not c:
            violations.append(f"|F|={len(f)} exceeds |W|={len(w)}")
        violations.append(f"W={names(w)} moves: {trace or 'none'}")
    return MappingReport(image, a, b_low, b_high, c, extra, violations)


def mapping_for(inst: Instance, w, root: int = 0) -> FailMapping:
    """Convenience wrapper: validate the tree, then :func:`build_mapping`."""
    return build_mapping(validate_tree(inst.graph, root), inst, w)
