"""scikit-learn style front end for the tree solver."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exceptions import InputError, StructureError
from .graph import (
    Graph,
    Instance,
    check_params,
    connected_components,
    covered_mask,
    parse_edge_list,
    surviving_components,
)
from .solver import solve, solve_forest


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a ``Graph``, edge-list text, an iterable of label pairs, or any
    object exposing ``nodes()`` and ``edges()`` (a networkx graph, say).
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, str):
        return parse_edge_list(X)
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        return Graph.from_edges(X.edges(), labels=X.nodes())
    try:
        pairs = [tuple(e) for e in X]
    except TypeError:
        raise InputError(f"cannot interpret {type(X).__name__} as a graph") from None
    if any(len(p) != 2 for p in pairs):
        raise InputError("edge iterables must contain pairs")
    return Graph.from_edges(pairs)


class FailureSetSolver(BaseEstimator):
    """Minimum distance-``ell``, ``k``-component failure set of a tree or forest.

    Parameters
    ----------
    k : int, default=1
        Component threshold; surviving components must have fewer than ``k``
        vertices.
    ell : int, default=1
        Distance at which a failed vertex fails its neighbours.
    root : str or None, default=None
        Label of the root for tree inputs. ``None`` roots at the first vertex.
        Ignored for forests, whose components are rooted at their lowest id.

    Attributes
    ----------
    graph_ : Graph
    failure_set_ : frozenset of int
    failure_labels_ : list of str
        Labels of ``failure_set_``, sorted.
    lambda_ : int
    root_ : int or None
        Root id used for a tree input; ``None`` for forests.
    """

    def __init__(self, k=1, ell=1, root=None):
        self.k = k
        self.ell = ell
        self.root = root

    def fit(self, X, y=None):
        g = check_graph(X)
        check_params(g.n, self.k, self.ell)
        n_comp = len(connected_components(g))
        if g.m != g.n - n_comp:
            raise StructureError("not a forest: graph contains a cycle")
        if n_comp == 1:
            root = 0 if self.root is None else g.id_of(self.root)
            result = solve(Instance(g, self.k, self.ell), root)
            self.failure_set_ = result.failure_set
            self.root_ = root
        else:
            self.failure_set_ = solve_forest(g, self.k, self.ell)
            self.root_ = None
        self.graph_ = g
        self.failure_labels_ = g.label_set(self.failure_set_)
        self.lambda_ = len(self.failure_set_)
        return self

    def _check_same(self, X):
        check_is_fitted(self, "failure_set_")
        if X is not None and check_graph(X) != self.graph_:
            raise ValueError("FailureSetSolver is transductive: X must be the fitted graph")

    def predict(self, X=None):
        """Indicator array: 1 for vertices in the failure set, by id."""
        self._check_same(X)
        out = np.zeros(self.graph_.n, dtype=int)
        out[list(self.failure_set_)] = 1
        return out

    def fit_predict(self, X, y=None):
        return self.fit(X).predict()

    def transform(self, X=None):
        """Per-vertex features, shape ``(n, 3)``.

        Columns: in the failure set, within ``ell`` of it, and the order of
        the vertex's surviving component (0 when covered).
        """
        self._check_same(X)
        g = self.graph_
        out = np.zeros((g.n, 3), dtype=int)
        out[list(self.failure_set_), 0] = 1
        out[:, 1] = np.frombuffer(bytes(covered_mask(g, self.failure_set_, self.ell)), dtype=np.uint8)
        for comp, order in surviving_components(g, self.failure_set_, self.ell):
            out[list(comp), 2] = order
        return out

    def fit_transform(self, X, y=None):
        return self.fit(X).transform()
