"""Planar trivalent multigraphs as combinatorial maps.

A map is a pair of permutations acting on half-edge indices ``0..n-1``:
``twin`` swaps the two halves of every edge, and ``next_at_vertex``
rotates the half-edges counterclockwise around the vertex carrying
them.  Faces are the orbits of ``h -> next_at_vertex[twin[h]]``.  A
rotation system describes an embedding in the sphere exactly when every
connected component satisfies Euler's formula V - E + F = 2; maps are
checked for this at construction unless explicitly told not to be.

Circle components carrying no vertex ("free loops") cannot be encoded
with half-edges, so they live in a separate counter.  Each free loop is
one edge of the graph, so the total edge count is ``n/2 + free_loops``.

Vertices, half-edges, edges and faces all use dense integer ids.
Derived objects are listed in order of their smallest half-edge, which
keeps every query deterministic under rebuilds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MapError",
    "NonPlanarError",
    "ParseError",
    "Face",
    "CombinatorialMap",
    "build_map",
    "disjoint_union",
    "parse_map",
    "serialize_map",
    "edge_bfs_order",
]


class MapError(ValueError):
    """Raised when half-edge data does not describe a valid trivalent map."""


class NonPlanarError(MapError):
    """Raised when a rotation system fails the Euler test V - E + F = 2."""


class ParseError(MapError):
    """Raised on malformed graph text."""


@dataclass(frozen=True)
class Face:
    """One orbit of the face permutation, starting at its smallest half-edge.

    ``vertices[i]`` and ``edges[i]`` belong to ``half_edges[i]``; in a
    multigraph both may repeat even though half-edges never do.
    """

    half_edges: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.half_edges)


class CombinatorialMap:
    """Immutable validated rotation system plus a free-loop counter.

    Construct through :func:`build_map` (which accepts arbitrary integer
    ids and relabels them densely) unless you already hold dense tables.
    """

    __slots__ = (
        "_twin",
        "_sigma",
        "_vertex_of",
        "_free_loops",
        "_n_vertices",
        "_edges",
        "_edge_of",
        "_rotations",
        "_faces",
        "_planar",
    )

    def __init__(
        self,
        twin: Sequence[int],
        next_at_vertex: Sequence[int],
        vertex_of: Sequence[int],
        free_loops: int = 0,
        *,
        check_planar: bool = True,
    ):
        twin = tuple(twin)
        sigma = tuple(next_at_vertex)
        vof = tuple(vertex_of)
        n = len(twin)
        if len(sigma) != n or len(vof) != n:
            raise MapError("half-edge tables have inconsistent lengths")
        if not isinstance(free_loops, int) or free_loops < 0:
            raise MapError("free_loops must be a non-negative integer")

        for h in range(n):
            t = twin[h]
            if not (0 <= t < n) or twin[t] != h:
                raise MapError(f"twin is not an involution at half-edge {h}")
            if t == h:
                raise MapError(f"twin fixes half-edge {h}")
        if sorted(sigma) != list(range(n)):
            raise MapError("next_at_vertex is not a permutation of the half-edges")

        n_vertices = (max(vof) + 1) if n else 0
        degree = [0] * n_vertices
        for h in range(n):
            v = vof[h]
            if v < 0:
                raise MapError(f"half-edge {h} has negative vertex id")
            degree[v] += 1
            if vof[sigma[h]] != v:
                raise MapError(f"rotation moves half-edge {h} to another vertex")
        for v, d in enumerate(degree):
            if d != 3:
                raise MapError(f"vertex {v} has degree {d}, expected 3")
        for h in range(n):
            if sigma[h] == h or sigma[sigma[h]] == h:
                raise MapError(f"rotation at vertex {vof[h]} is not a single 3-cycle")

        self._twin = twin
        self._sigma = sigma
        self._vertex_of = vof
        self._free_loops = free_loops
        self._n_vertices = n_vertices

        # edge table, ordered by smaller half-edge
        edges = tuple((h, twin[h]) for h in range(n) if h < twin[h])
        edge_of = [0] * n
        for e, (a, b) in enumerate(edges):
            edge_of[a] = edge_of[b] = e
        self._edges = edges
        self._edge_of = tuple(edge_of)

        # canonical rotation per vertex, starting at its smallest half-edge
        first = [-1] * n_vertices
        for h in range(n):
            if first[vof[h]] < 0:
                first[vof[h]] = h
        self._rotations = tuple(
            (h, sigma[h], sigma[sigma[h]]) for h in first
        )

        self._faces = self._trace_faces()
        self._planar = self._check_euler(check_planar)

    def _trace_faces(self) -> tuple[Face, ...]:
        n = len(self._twin)
        seen = [False] * n
        faces = []
        for h0 in range(n):
            if seen[h0]:
                continue
            orbit = []
            h = h0
            while not seen[h]:
                seen[h] = True
                orbit.append(h)
                h = self._sigma[self._twin[h]]
            cyc = tuple(orbit)
            faces.append(
                Face(
                    half_edges=cyc,
                    vertices=tuple(self._vertex_of[x] for x in cyc),
                    edges=tuple(self._edge_of[x] for x in cyc),
                )
            )
        return tuple(faces)

    def _check_euler(self, raise_on_failure: bool) -> bool:
        # connected components of the half-edge set under twin and sigma
        n = len(self._twin)
        comp = [-1] * n
        n_comps = 0
        for h0 in range(n):
            if comp[h0] >= 0:
                continue
            queue = deque([h0])
            comp[h0] = n_comps
            while queue:
                h = queue.popleft()
                for g in (self._twin[h], self._sigma[h]):
                    if comp[g] < 0:
                        comp[g] = n_comps
                        queue.append(g)
            n_comps += 1

        verts = [set() for _ in range(n_comps)]
        halves = [0] * n_comps
        faces = [0] * n_comps
        for h in range(n):
            verts[comp[h]].add(self._vertex_of[h])
            halves[comp[h]] += 1
        for f in self._faces:
            faces[comp[f.half_edges[0]]] += 1

        planar = True
        for c in range(n_comps):
            chi = len(verts[c]) - halves[c] // 2 + faces[c]
            if chi != 2:
                planar = False
                if raise_on_failure:
                    raise NonPlanarError(
                        f"component {c}: V - E + F = {chi}, expected 2 "
                        "(rotation system is not planar)"
                    )
        return planar

    # ------------------------------------------------------------------
    # basic queries

    @property
    def twin(self) -> tuple[int, ...]:
        return self._twin

    @property
    def next_at_vertex(self) -> tuple[int, ...]:
        return self._sigma

    @property
    def vertex_of(self) -> tuple[int, ...]:
        return self._vertex_of

    @property
    def free_loops(self) -> int:
        return self._free_loops

    @property
    def n_half_edges(self) -> int:
        return len(self._twin)

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def n_paired_edges(self) -> int:
        return len(self._edges)

    @property
    def n_edges(self) -> int:
        """Total edge count; free loops included."""
        return len(self._edges) + self._free_loops

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Half-edge pairs of the non-loop edges, indexed by edge id."""
        return self._edges

    @property
    def is_planar(self) -> bool:
        return self._planar

    def edge_of(self, h: int) -> int:
        return self._edge_of[h]

    def rotation(self, v: int) -> tuple[int, int, int]:
        """Counterclockwise half-edge rotation at ``v``, smallest first."""
        return self._rotations[v]

    def vertex_edges(self, v: int) -> tuple[int, int, int]:
        """Edge ids incident to ``v`` in rotation order (a self-loop repeats)."""
        r = self._rotations[v]
        return (self._edge_of[r[0]], self._edge_of[r[1]], self._edge_of[r[2]])

    def edge_endpoints(self, e: int) -> tuple[int, int] | None:
        """Vertices of edge ``e``; ``None`` for a free-loop edge."""
        if e >= len(self._edges):
            return None
        a, b = self._edges[e]
        return (self._vertex_of[a], self._vertex_of[b])

    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def is_bipartite(self) -> bool:
        """Whether the vertices 2-color with no monochromatic edge.

        Free loops impose no constraint; a vertex self-loop makes the
        graph non-bipartite.
        """
        side = [-1] * self._n_vertices
        for start in range(self._n_vertices):
            if side[start] >= 0:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for e in self.vertex_edges(v):
                    u, w = self.edge_endpoints(e)
                    other = w if v == u else u
                    if other == v:
                        return False
                    if side[other] < 0:
                        side[other] = 1 - side[v]
                        queue.append(other)
                    elif side[other] == side[v]:
                        return False
        return True

    def to_rotations_and_pairs(
        self,
    ) -> tuple[list[tuple[int, tuple[int, int, int]]], list[tuple[int, int]], int]:
        """Inverse of :func:`build_map` on dense data."""
        rotations = [(v, self._rotations[v]) for v in range(self._n_vertices)]
        return rotations, list(self._edges), self._free_loops

    def __eq__(self, other) -> bool:
        if not isinstance(other, CombinatorialMap):
            return NotImplemented
        return (
            self._twin == other._twin
            and self._sigma == other._sigma
            and self._vertex_of == other._vertex_of
            and self._free_loops == other._free_loops
        )

    def __hash__(self) -> int:
        return hash((self._twin, self._sigma, self._vertex_of, self._free_loops))

    def __repr__(self) -> str:
        return (
            f"CombinatorialMap(vertices={self._n_vertices}, "
            f"edges={self.n_edges}, free_loops={self._free_loops})"
        )


def build_map(
    vertex_rotations: Iterable[tuple[int, Sequence[int]]],
    edge_pairs: Iterable[tuple[int, int]],
    free_loops: int = 0,
    *,
    check_planar: bool = True,
) -> CombinatorialMap:
    """Build a validated map from rotations and pairings with arbitrary ids.

    ``vertex_rotations`` lists ``(vertex, (h1, h2, h3))`` with the three
    half-edges in counterclockwise order; ``edge_pairs`` matches the same
    half-edge ids two by two.  Ids may be any non-negative integers; they
    are relabeled densely in sorted order.
    """
    rotations = list(vertex_rotations)
    pairs = list(edge_pairs)

    vids = [v for v, _ in rotations]
    if len(set(vids)) != len(vids):
        raise MapError("duplicate vertex id")
    all_halves: list[int] = []
    for v, rot in rotations:
        rot = tuple(rot)
        if len(rot) != 3:
            raise MapError(f"vertex {v} lists {len(rot)} half-edges, expected 3")
        all_halves.extend(rot)
    if len(set(all_halves)) != len(all_halves):
        raise MapError("half-edge used twice in vertex rotations")
    known = set(all_halves)

    used = set()
    for a, b in pairs:
        if a == b:
            raise MapError(f"edge pairs half-edge {a} with itself")
        for h in (a, b):
            if h not in known:
                raise MapError(f"half-edge {h} appears in an edge pair but in no rotation")
            if h in used:
                raise MapError(f"half-edge {h} used twice in edge pairs")
            used.add(h)
    unmatched = known - used
    if unmatched:
        raise MapError(f"unmatched half-edge {min(unmatched)} (no edge pair)")

    hid = {h: i for i, h in enumerate(sorted(known))}
    vid = {v: i for i, v in enumerate(sorted(vids))}

    n = len(hid)
    twin = [0] * n
    sigma = [0] * n
    vof = [0] * n
    for a, b in pairs:
        twin[hid[a]] = hid[b]
        twin[hid[b]] = hid[a]
    for v, rot in rotations:
        h1, h2, h3 = (hid[h] for h in rot)
        sigma[h1] = h2
        sigma[h2] = h3
        sigma[h3] = h1
        vof[h1] = vof[h2] = vof[h3] = vid[v]
    return CombinatorialMap(twin, sigma, vof, free_loops, check_planar=check_planar)


def disjoint_union(a: CombinatorialMap, b: CombinatorialMap) -> CombinatorialMap:
    """Relabeled side-by-side copy of two maps; free loops add up."""
    rot_a, pairs_a, loops_a = a.to_rotations_and_pairs()
    rot_b, pairs_b, loops_b = b.to_rotations_and_pairs()
    dh = a.n_half_edges
    dv = a.n_vertices
    rotations = rot_a + [
        (v + dv, tuple(h + dh for h in rot)) for v, rot in rot_b
    ]
    pairs = pairs_a + [(x + dh, y + dh) for x, y in pairs_b]
    return build_map(rotations, pairs, loops_a + loops_b, check_planar=False)


def edge_bfs_order(cmap: CombinatorialMap) -> list[int]:
    """Paired-edge ids in breadth-first order over shared-vertex adjacency.

    Constraint-propagation style traversals (coloring search, decoration
    sampling) want neighboring edges to appear close together; this order
    is also deterministic, so seeded runs reproduce.
    """
    n_edges = cmap.n_paired_edges
    at_vertex = [cmap.vertex_edges(v) for v in range(cmap.n_vertices)]
    neighbors: list[set[int]] = [set() for _ in range(n_edges)]
    for tri in at_vertex:
        for e in tri:
            neighbors[e].update(x for x in tri if x != e)

    order = []
    seen = [False] * n_edges
    for e0 in range(n_edges):
        if seen[e0]:
            continue
        seen[e0] = True
        queue = deque([e0])
        while queue:
            e = queue.popleft()
            order.append(e)
            for x in sorted(neighbors[e]):
                if not seen[x]:
                    seen[x] = True
                    queue.append(x)
    return order


# ----------------------------------------------------------------------
# text format


def _parse_id(token: str, lineno: int, *, strip_colon: bool = False) -> int:
    if strip_colon and token.endswith(":"):
        token = token[:-1]
    if not token.isascii() or not token.isdigit():
        raise ParseError(f"line {lineno}: expected a non-negative integer, got {token!r}")
    return int(token)


def parse_map(text: str, *, check_planar: bool = False) -> CombinatorialMap:
    """Parse the plain-text graph format.

    Lines are ``vertex <id>: <h> <h> <h>``, ``edge <id>: <h> <h>`` and
    ``loops <n>`` (default 0); ``#`` starts a comment.  Structure is
    validated; planarity is checked only on request, so non-planar
    rotation systems can still be read for abstract-graph work.
    """
    rotations: list[tuple[int, tuple[int, int, int]]] = []
    pairs: list[tuple[int, int]] = []
    loops = 0
    seen_vertex: set[int] = set()
    seen_edge: set[int] = set()
    loops_line = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "vertex":
            if len(tokens) != 5:
                raise ParseError(f"line {lineno}: expected 'vertex <id>: <h> <h> <h>'")
            v = _parse_id(tokens[1], lineno, strip_colon=True)
            if v in seen_vertex:
                raise ParseError(f"line {lineno}: duplicate vertex id {v}")
            seen_vertex.add(v)
            h = tuple(_parse_id(t, lineno) for t in tokens[2:])
            rotations.append((v, h))
        elif keyword == "edge":
            if len(tokens) != 4:
                raise ParseError(f"line {lineno}: expected 'edge <id>: <h> <h>'")
            e = _parse_id(tokens[1], lineno, strip_colon=True)
            if e in seen_edge:
                raise ParseError(f"line {lineno}: duplicate edge id {e}")
            seen_edge.add(e)
            a = _parse_id(tokens[2], lineno)
            b = _parse_id(tokens[3], lineno)
            pairs.append((a, b))
        elif keyword == "loops":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'loops <n>'")
            if loops_line:
                raise ParseError(f"line {lineno}: duplicate loops line")
            loops_line = True
            loops = _parse_id(tokens[1], lineno)
        else:
            raise ParseError(f"line {lineno}: unknown directive {keyword!r}")
    try:
        return build_map(rotations, pairs, loops, check_planar=check_planar)
    except (ParseError, NonPlanarError):
        raise
    except MapError as exc:
        raise ParseError(str(exc)) from exc


def serialize_map(cmap: CombinatorialMap) -> str:
    """Canonical text for a map; ``parse_map`` inverts it exactly."""
    lines = []
    for v in range(cmap.n_vertices):
        h1, h2, h3 = cmap.rotation(v)
        lines.append(f"vertex {v}: {h1} {h2} {h3}")
    for e, (a, b) in enumerate(cmap.edges):
        lines.append(f"edge {e}: {a} {b}")
    if cmap.free_loops:
        lines.append(f"loops {cmap.free_loops}")
    return "\n".join(lines) + ("\n" if lines else "")
