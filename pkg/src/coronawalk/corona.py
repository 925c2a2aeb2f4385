"""Corona products G o (H_1, ..., H_n): one copy of each satellite H_l hung
off the l-th base vertex, every satellite vertex joined to its base vertex.

Flat vertex order is block-by-block: base vertex l first, then its m
satellite vertices, so vertex (l, w) with l in {1..n}, w in {0..m} sits at
flat index (l-1)(m+1) + w. This keeps the tensor blocks of the Laplacian
contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, laplacian


def common_satellite_order(g: Graph, hs) -> int:
    """Check corona preconditions and return the common satellite order m."""
    hs = list(hs)
    if g.n < 1:
        raise ValueError("corona base graph needs at least one vertex")
    if len(hs) != g.n:
        raise ValueError(f"need one satellite per base vertex: got {len(hs)} for n={g.n}")
    sizes = {h.n for h in hs}
    if len(sizes) != 1:
        raise ValueError(f"satellites must share one vertex count, got {sorted(sizes)}")
    m = sizes.pop()
    if m < 1:
        raise ValueError("satellites must have m >= 1 vertices")
    return m


@dataclass(frozen=True)
class CoronaGraph:
    """A corona product with its flat graph and (l, w) <-> flat index map."""

    base: Graph
    satellites: tuple
    flat: Graph
    m: int

    def flat_index(self, base_vertex: int, w: int) -> int:
        """Flat index of (base_vertex, w): w = 0 is the base vertex itself,
        w in 1..m its satellite's vertices (satellite vertex w-1)."""
        if not (0 <= base_vertex < self.base.n):
            raise ValueError(f"base vertex {base_vertex} out of range")
        if not (0 <= w <= self.m):
            raise ValueError(f"w must be in 0..{self.m}, got {w}")
        return base_vertex * (self.m + 1) + w

    def coords(self, flat_idx: int) -> tuple[int, int]:
        if not (0 <= flat_idx < self.flat.n):
            raise ValueError(f"flat index {flat_idx} out of range")
        return divmod(flat_idx, self.m + 1)


def corona(g: Graph, hs) -> CoronaGraph:
    """Build G o (H_1, ..., H_n) for equal-order satellites (m >= 1 each).

    The flat graph carries "(l,w)" labels with l 1-based, matching the
    (l, w) coordinate convention.
    """
    hs = tuple(hs)
    m = common_satellite_order(g, hs)
    stride = m + 1
    edges = set()
    for u, v in g.edges:
        edges.add((u * stride, v * stride))
    for i, h in enumerate(hs):
        root = i * stride
        for w in range(m):
            edges.add((root, root + 1 + w))
        for a, b in h.edges:
            edges.add((root + 1 + a, root + 1 + b))
    labels = {}
    for i in range(g.n):
        for w in range(stride):
            labels[i * stride + w] = f"({i + 1},{w})"
    flat = Graph(g.n * stride, frozenset(edges), labels)
    return CoronaGraph(base=g, satellites=hs, flat=flat, m=m)


def corona_laplacian_blocks(g: Graph, hs) -> np.ndarray:
    """Assemble the corona Laplacian from its block form.

    The result is (L(G) + mI) acting on the base coordinates plus, per base
    vertex l, the bordered block [[0, -1^T], [-1, L(H_l) + I]] on its
    (m+1)-dimensional slice. Entrywise equal to laplacian(corona(g, hs).flat).
    """
    hs = tuple(hs)
    m = common_satellite_order(g, hs)
    n = g.n
    stride = m + 1
    e00 = np.zeros((stride, stride))
    e00[0, 0] = 1.0
    out = np.kron(laplacian(g) + m * np.eye(n), e00)
    for i, h in enumerate(hs):
        block = np.zeros((stride, stride))
        block[0, 1:] = -1.0
        block[1:, 0] = -1.0
        block[1:, 1:] = laplacian(h) + np.eye(m)
        sl = slice(i * stride, (i + 1) * stride)
        out[sl, sl] += block
    return out
