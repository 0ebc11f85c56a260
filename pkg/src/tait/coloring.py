"""Brute-force Tait coloring oracle.

A Tait coloring assigns one of three colors to every edge so that the
three edges at each vertex get three different colors.  Free loops are
unconstrained and contribute a factor of 3 each; a vertex self-loop
meets its vertex twice and kills every coloring.

Counting is exact backtracking over the paired edges in breadth-first
order (so constraints bind early) and uses only the abstract incidence
structure: the rotation data of the map is ignored, and non-planar maps
are accepted.
"""

from __future__ import annotations

from .planar import CombinatorialMap, edge_bfs_order

__all__ = ["count_tait", "enumerate_tait"]

COLORS = (1, 2, 3)


def _incidences(cmap: CombinatorialMap):
    at_vertex = [cmap.vertex_edges(v) for v in range(cmap.n_vertices)]
    endpoints = [cmap.edge_endpoints(e) for e in range(cmap.n_paired_edges)]
    return at_vertex, endpoints


def _has_self_loop(at_vertex) -> bool:
    return any(len(set(tri)) < 3 for tri in at_vertex)


def count_tait(cmap: CombinatorialMap) -> int:
    """Number of Tait colorings of the map's underlying multigraph."""
    n_edges = cmap.n_paired_edges
    loop_factor = 3 ** cmap.free_loops
    if n_edges == 0:
        return loop_factor
    at_vertex, endpoints = _incidences(cmap)
    if _has_self_loop(at_vertex):
        return 0

    order = edge_bfs_order(cmap)
    color = [0] * n_edges

    def admits(e: int, c: int) -> bool:
        for v in endpoints[e]:
            for other in at_vertex[v]:
                if other != e and color[other] == c:
                    return False
        return True

    total = 0

    def search(i: int):
        nonlocal total
        if i == n_edges:
            total += 1
            return
        e = order[i]
        for c in COLORS:
            if admits(e, c):
                color[e] = c
                search(i + 1)
        color[e] = 0

    search(0)
    return total * loop_factor


def enumerate_tait(cmap: CombinatorialMap, limit: int) -> list[tuple[int, ...]]:
    """First ``limit`` Tait colorings in lexicographic edge-color order.

    A coloring is a tuple indexed by edge id, paired edges first and
    free-loop edges last.
    """
    if limit <= 0:
        return []
    n_edges = cmap.n_paired_edges
    n_total = cmap.n_edges
    at_vertex, endpoints = _incidences(cmap)
    if _has_self_loop(at_vertex):
        return []

    color = [0] * n_total
    found: list[tuple[int, ...]] = []

    def admits(e: int, c: int) -> bool:
        for v in endpoints[e]:
            for other in at_vertex[v]:
                if other != e and color[other] == c:
                    return False
        return True

    def search(e: int) -> bool:
        if e == n_total:
            found.append(tuple(color))
            return len(found) >= limit
        for c in COLORS:
            if e >= n_edges or admits(e, c):
                color[e] = c
                if search(e + 1):
                    return True
        color[e] = 0
        return False

    search(0)
    return found
