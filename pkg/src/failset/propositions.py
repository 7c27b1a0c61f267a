"""Structural properties of the failure number, checked over tree corpora.

Each tree is solved for every ``k`` and every ``ell`` up to a limit, then
checked for:

* threshold monotonicity: raising ``k`` never raises the failure number;
* distance monotonicity: raising ``ell`` never raises it;
* domination: with ``k = 1`` it equals the distance-``ell`` domination number
  found by exhaustive search;
* diameter rule: it is 1 whenever ``0 < diameter <= ell``;
* forest sum: for the disjoint union with a second random tree, the
  exhaustive minimum equals the sum of the two per-tree values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, Instance, diameter, validate_tree
from .solver import solve_rooted
from .testkit import canonical_form, random_tree
from .verification import brute_force_minimum, domination_number


@dataclass
class PropReport:
    instances: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, message):
        self.violations.append(message)

    def merge(self, other: "PropReport"):
        self.instances += other.instances
        self.checks += other.checks
        self.violations.extend(other.violations)


def lambda_table(g: Graph, ell_max: int) -> dict:
    """``{(k, ell): failure number}`` for ``k`` in ``1..n`` and ``ell`` in ``0..ell_max``."""
    tree = validate_tree(g, 0)
    return {
        (k, ell): len(solve_rooted(tree, k, ell).failure_set)
        for k in range(1, g.n + 1)
        for ell in range(ell_max + 1)
    }


def _component_lambda(g, k, ell):
    return 0 if k > g.n else len(solve_rooted(validate_tree(g, 0), k, ell).failure_set)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    labels = [f"{x}.0" for x in g.labels] + [f"{x}.1" for x in h.labels]
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(labels, edges)


def check_tree(g: Graph, ell_max: int = 3, rng=None, cache=None) -> PropReport:
    """Run every property on one tree. ``cache`` memoizes exhaustive searches."""
    cache = {} if cache is None else cache
    rng = rng or random.Random(0)
    report = PropReport(instances=1)
    n = g.n
    name = " ".join(f"{g.labels[u]}-{g.labels[v]}" for u, v in g.edges()) or g.labels[0]
    table = lambda_table(g, ell_max)

    for ell in range(ell_max + 1):
        for k in range(1, n):
            report.checks += 1
            if table[(k + 1, ell)] > table[(k, ell)]:
                report.fail(f"threshold monotonicity: [{name}] ell={ell} k={k}->{k + 1}")
    for k in range(1, n + 1):
        for ell in range(ell_max):
            report.checks += 1
            if table[(k, ell + 1)] > table[(k, ell)]:
                report.fail(f"distance monotonicity: [{name}] k={k} ell={ell}->{ell + 1}")

    form = canonical_form(g)
    for ell in range(ell_max + 1):
        key = ("dom", form, ell)
        if key not in cache:
            cache[key] = domination_number(g, ell)
        report.checks += 1
        if table[(1, ell)] != cache[key]:
            report.fail(f"domination: [{name}] ell={ell} lambda={table[(1, ell)]} gamma={cache[key]}")

    diam = diameter(g)
    for ell in range(ell_max + 1):
        if 0 < diam <= ell:
            for k in range(1, n + 1):
                report.checks += 1
                if table[(k, ell)] != 1:
                    report.fail(f"diameter rule: [{name}] diam={diam} k={k} ell={ell}")

    h = random_tree(rng.randint(1, 5), rng.getrandbits(32))
    forest = disjoint_union(g, h)
    k = rng.randint(1, forest.n)
    ell = rng.randint(0, ell_max)
    key = ("forest", form, canonical_form(h), k, ell)
    if key not in cache:
        cache[key] = brute_force_minimum(Instance(forest, k, ell), cap=None).minimum
    expected = _component_lambda(g, k, ell) + _component_lambda(h, k, ell)
    report.checks += 1
    if cache[key] != expected:
        report.fail(f"forest sum: [{name}] + {h.n}-vertex tree k={k} ell={ell}: {cache[key]} != {expected}")
    return report


def run_suite(graphs: Iterable[Graph], ell_max: int = 3, seed: int = 0, stop_on_first=False) -> PropReport:
    rng = random.Random(seed)
    cache: dict = {}
    total = PropReport()
    for g in graphs:
        total.merge(check_tree(g, ell_max, rng, cache))
        if stop_on_first and total.violations:
            break
    return total
