"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import numpy as np

from coronawalk import Graph, is_connected


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, frozenset(edges))


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    for _ in range(1000):
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
    # ensure connectivity with a random spanning path plus the last sample
    perm = [int(x) for x in rng.permutation(n)]
    spine = {(min(a, b), max(a, b)) for a, b in zip(perm[:-1], perm[1:])}
    return Graph(n, frozenset(spine | set(g.edges)))


def random_satellites(rng: np.random.Generator, n: int, m: int, p: float = 0.5) -> list:
    return [random_graph(rng, m, p) for _ in range(n)]


def random_symmetric_int_matrix(rng: np.random.Generator, dim: int, bound: int = 3) -> np.ndarray:
    mat = np.zeros((dim, dim))
    iu = np.triu_indices(dim)
    mat[iu] = rng.integers(-bound, bound + 1, size=len(iu[0]))
    return mat + np.triu(mat, 1).T
