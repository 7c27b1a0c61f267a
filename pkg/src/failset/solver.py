"""Minimum failure sets on trees and forests.

The tree routine walks the rooted tree in postorder. When a vertex ``v`` is
reached, the component orders of its subtree are recomputed against the
failures chosen so far. ``v`` joins the failure set if it is the root and some
vertex within ``ell`` of it still has component order at least ``k``, or if
some vertex exactly ``ell`` levels below it does. The result is a minimum
failure set, and the whole walk costs ``O(n^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InputError, StructureError
from .graph import (
    Graph,
    Instance,
    RootedTree,
    check_params,
    comp_orders,
    connected_components,
    covered_mask,
    mark_ball,
    validate_tree,
)

__all__ = [
    "SolveResult",
    "ell_generation_descendants",
    "lambda_number",
    "solve",
    "solve_forest",
    "solve_rooted",
]


@dataclass(frozen=True)
class SolveResult:
    failure_set: frozenset
    comp_orders: tuple
    root: int

    def __len__(self):
        return len(self.failure_set)


def ell_generation_descendants(tree: RootedTree, v: int, ell: int) -> frozenset:
    """Vertices of ``v``'s subtree exactly ``ell`` levels below ``v``.

    For ``ell == 0`` this is ``{v}``.
    """
    tree.graph.check_vertex(v)
    if ell < 0:
        raise InputError(f"ell={ell} must be non-negative")
    return frozenset(_descendants_at(tree, v, ell))


def _descendants_at(tree, v, ell):
    layer = [v]
    children = tree.children
    for _ in range(ell):
        layer = [c for u in layer for c in children[u]]
        if not layer:
            break
    return sorted(layer)


def solve_rooted(tree: RootedTree, k: int, ell: int, check: bool = False) -> SolveResult:
    """Run the selection walk on an already validated rooted tree.

    With ``check=True`` the walk asserts after every vertex ``v`` that no
    vertex of ``v``'s subtree at depth ``ell`` or more below ``v`` keeps a
    component order of at least ``k``.
    """
    check_params(tree.n, k, ell)
    adjacency = tree.graph.adjacency
    root = tree.root
    covered = bytearray(tree.n)
    orders = [0] * tree.n
    failed = []

    for v in tree.postorder:
        block = tree.subtree(v)
        comp_orders(tree, covered, block, orders)
        if v == root and any(orders[u] >= k for u in _root_ball(tree, ell)):
            failed.append(v)
            mark_ball(adjacency, v, ell, covered)
        elif any(orders[u] >= k for u in _descendants_at(tree, v, ell)):
            failed.append(v)
            mark_ball(adjacency, v, ell, covered)
        if check:
            _check_subtree(tree, covered, block, v, k, ell)

    final = comp_orders(tree, covered)
    return SolveResult(frozenset(failed), tuple(final), root)


def _root_ball(tree, ell):
    seen = covered_mask(tree.graph, (tree.root,), ell)
    return [u for u in range(tree.n) if seen[u]]


def _check_subtree(tree, covered, block, v, k, ell):
    orders = comp_orders(tree, covered, block)
    base = tree.depth[v]
    for u in block:
        if orders[u] >= k and tree.depth[u] - base >= ell:
            raise AssertionError(
                f"after visiting {tree.graph.labels[v]!r}: {tree.graph.labels[u]!r} "
                f"at depth {tree.depth[u] - base} below it has component order {orders[u]} >= k={k}"
            )


def solve(inst: Instance, root: int = 0, check: bool = False) -> SolveResult:
    """Minimum failure set of the tree ``inst.graph`` rooted at ``root``.

    Raises :class:`StructureError` if the graph is not a tree.
    """
    tree = validate_tree(inst.graph, root)
    return solve_rooted(tree, inst.k, inst.ell, check=check)


def lambda_number(inst: Instance, root: int = 0) -> int:
    """Cardinality of a minimum failure set of a tree."""
    return len(solve(inst, root).failure_set)


def solve_forest(g: Graph, k: int, ell: int) -> frozenset:
    """Minimum failure set of a forest, solved one component at a time.

    Each component is rooted at its lowest id. Components with fewer than
    ``k`` vertices need no failures.
    """
    check_params(g.n, k, ell)
    comps = connected_components(g)
    if g.m != g.n - len(comps):
        raise StructureError("not a forest: graph contains a cycle")
    failed: set[int] = set()
    for comp in comps:
        if len(comp) < k:
            continue
        sub, old = g.subgraph(comp)
        result = solve_rooted(validate_tree(sub, 0), k, ell)
        failed.update(old[v] for v in result.failure_set)
    return frozenset(failed)
