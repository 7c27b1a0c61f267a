"""Naive reference implementations that share no code with the package."""

from itertools import combinations


def all_pairs_distances(n, edges):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def naive_components(n, edges, alive):
    alive = set(alive)
    comps = []
    while alive:
        start = min(alive)
        alive.discard(start)
        comp, stack = {start}, [start]
        while stack:
            u = stack.pop()
            for a, b in edges:
                for x, y in ((a, b), (b, a)):
                    if x == u and y in alive:
                        alive.discard(y)
                        comp.add(y)
                        stack.append(y)
        comps.append(comp)
    return comps


def naive_is_failure(n, edges, s, k, ell, d=None):
    d = d or all_pairs_distances(n, edges)
    alive = [v for v in range(n) if all(d[v][x] > ell for x in s)]
    return all(len(c) < k for c in naive_components(n, edges, alive))


def naive_minimum(n, edges, k, ell):
    d = all_pairs_distances(n, edges)
    for size in range(n + 1):
        for s in combinations(range(n), size):
            if naive_is_failure(n, edges, s, k, ell, d):
                return size
