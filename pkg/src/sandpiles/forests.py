"""Brute-force enumeration of spanning trees and constrained spanning forests.

This is the independent oracle for the determinant identities: everything
here counts subgraphs directly by iterating over subsets of the edge
multiset (parallel edges are distinct objects), never touching a matrix.
Counts are desk-scale by design; a hard guard refuses enumerations with
more than 2^31 candidate subsets.
"""

from __future__ import annotations

import itertools
from math import comb

from .errors import SinkNotAllowedError, SizeMismatchError, TooLargeError
from .graph import Multigraph

_GUARD = 2**31


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, v):
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(self, v, w):
        """Return False if v and w were already connected (a cycle)."""
        rv, rw = self.find(v), self.find(w)
        if rv == rw:
            return False
        self.parent[rw] = rv
        return True


def _check_guard(n_edges: int, subset_size: int):
    if subset_size >= 0 and comb(n_edges, subset_size) > _GUARD:
        raise TooLargeError(
            f"{comb(n_edges, subset_size)} candidate subsets exceed the "
            f"enumeration guard ({_GUARD})"
        )


def _forest_components(g: Multigraph, n_edges: int):
    """Yield, for each acyclic edge subset of the given size, the component
    assignment of all vertices as a tuple (components labeled by first
    occurrence, so the tuple is canonical)."""
    if n_edges < 0 or n_edges > g.edge_count():
        return
    _check_guard(g.edge_count(), n_edges)
    edges = g.edges()
    nv = g.n_vertices
    for subset in itertools.combinations(range(len(edges)), n_edges):
        uf = _UnionFind(nv)
        ok = True
        for idx in subset:
            v, w = edges[idx]
            if not uf.union(v, w):
                ok = False
                break
        if not ok:
            continue
        labels = {}
        comp = []
        for v in range(nv):
            root = uf.find(v)
            if root not in labels:
                labels[root] = len(labels)
            comp.append(labels[root])
        yield tuple(comp)


def forest_component_counts(g: Multigraph, n_edges: int) -> dict[tuple[int, ...], int]:
    """Component-assignment multiset over all acyclic edge subsets of the
    given size.  Used to answer many (V, W) constraint queries per sweep
    without re-enumerating."""
    counts: dict[tuple[int, ...], int] = {}
    for comp in _forest_components(g, n_edges):
        counts[comp] = counts.get(comp, 0) + 1
    return counts


def spanning_forests(g: Multigraph, k: int):
    """Yield each spanning k-forest as a tuple of (vertex frozenset, edge
    tuple) trees, ordered by minimum vertex index."""
    n_edges = g.n_vertices - k
    if n_edges < 0 or n_edges > g.edge_count():
        return
    _check_guard(g.edge_count(), n_edges)
    edges = g.edges()
    nv = g.n_vertices
    for subset in itertools.combinations(range(len(edges)), n_edges):
        uf = _UnionFind(nv)
        ok = True
        for idx in subset:
            v, w = edges[idx]
            if not uf.union(v, w):
                ok = False
                break
        if not ok:
            continue
        verts: dict[int, list[int]] = {}
        for v in range(nv):
            verts.setdefault(uf.find(v), []).append(v)
        tree_edges: dict[int, list] = {root: [] for root in verts}
        for idx in subset:
            v, w = edges[idx]
            tree_edges[uf.find(v)].append(edges[idx])
        trees = [
            (frozenset(vs), tuple(tree_edges[root]))
            for root, vs in verts.items()
        ]
        trees.sort(key=lambda t: min(t[0]))
        yield tuple(trees)


def count_spanning_trees(g: Multigraph) -> int:
    """Number of spanning trees, counting parallel edges separately."""
    target = g.n_vertices - 1
    return sum(1 for _ in _forest_components(g, target))


def count_constrained_forests(g: Multigraph, V, W) -> int:
    """Spanning |V|-forests in which every tree contains exactly one vertex
    of V and exactly one vertex of W."""
    V = frozenset(V)
    W = frozenset(W)
    if len(V) != len(W):
        raise SizeMismatchError("V and W must have equal size")
    k = len(V)
    n_edges = g.n_vertices - k
    total = 0
    for comp in _forest_components(g, n_edges):
        if len({comp[v] for v in V}) == k and len({comp[w] for w in W}) == k:
            total += 1
    return total


def count_two_forests(g: Multigraph, v: int, w: int) -> int:
    """Spanning 2-forests with the sink in one tree and v, w both in the
    other (v = w allowed)."""
    if v == g.sink or w == g.sink:
        raise SinkNotAllowedError("arguments must be non-sink vertices")
    return count_constrained_forests(g, {g.sink, v}, {g.sink, w})


def sign_of_minor(g: Multigraph, V, W) -> int:
    """Predicted sign of det of the Laplacian minor with columns V and rows
    W deleted: (-1) to the sum of all deleted indices, or 0 when the
    constrained-forest count vanishes."""
    V = frozenset(V)
    W = frozenset(W)
    if len(V) != len(W):
        raise SizeMismatchError("V and W must have equal size")
    if count_constrained_forests(g, V, W) == 0:
        return 0
    parity = (sum(V) + sum(W)) % 2
    return 1 if parity == 0 else -1
