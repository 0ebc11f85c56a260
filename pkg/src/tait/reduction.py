"""Face-collapse reduction of planar trivalent maps.

Four local moves rewrite a map into strictly smaller ones:

* ``loop``     removes a free loop and multiplies the result by a weight;
* ``bigon``    deletes a 2-gon face, welding the two outer edges, and
  multiplies by a weight;
* ``triangle`` collapses a 3-gon face to a single vertex;
* ``square``   deletes a 4-gon face together with its four outer
  half-edges and branches into the two ways of rejoining the stubs,
  adding the results.

A move only matches a face whose vertices and edges are pairwise
distinct.  Repeatedly applying moves until the empty map drives a
recursion whose value, with weights ``loop=3, bigon=2``, counts the
Tait colorings of the starting map; other weight systems reuse the same
tree.  Maps whose faces all have five or more sides (the dodecahedron
is the smallest) admit no move and raise :class:`IrreducibleError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Generic, TypeVar

from .planar import CombinatorialMap, Face, MapError, NonPlanarError, build_map

__all__ = [
    "MoveKind",
    "Move",
    "RelationWeights",
    "EULER_WEIGHTS",
    "TraceNode",
    "InvalidMoveError",
    "IrreducibleError",
    "classify_face",
    "available_moves",
    "find_move",
    "apply_move",
    "apply_loop",
    "apply_bigon",
    "apply_triangle",
    "apply_square",
    "reduce_map",
    "euler_characteristic",
    "format_trace",
]

W = TypeVar("W")


class MoveKind(enum.Enum):
    LOOP = "loop"
    BIGON = "bigon"
    TRIANGLE = "triangle"
    SQUARE = "square"


@dataclass(frozen=True)
class Move:
    """A matched move site: the face's half-edge cycle, empty for a loop."""

    kind: MoveKind
    half_edges: tuple[int, ...] = ()


@dataclass(frozen=True)
class RelationWeights(Generic[W]):
    """Multipliers attached to the moves.

    ``one`` is the multiplicative unit of the value ring; triangle and
    square moves always carry it.
    """

    loop: W
    bigon: W
    one: W


EULER_WEIGHTS = RelationWeights(loop=3, bigon=2, one=1)


class InvalidMoveError(MapError):
    """Raised when a move is applied to a site that does not match it."""


class IrreducibleError(Exception):
    """Raised when a non-empty map admits none of the four moves.

    The stuck map is kept on the ``graph`` attribute.
    """

    def __init__(self, graph: CombinatorialMap):
        super().__init__(
            f"no reducible face in {graph!r}; every face has five or more sides"
        )
        self.graph = graph


@dataclass(frozen=True)
class TraceNode(Generic[W]):
    """One evaluation step: the map seen, the move taken, its factor.

    Leaves are empty maps and carry the unit multiplier and no move.
    The recursion value is ``multiplier * sum(child values)``, or just
    ``multiplier`` at a leaf.
    """

    graph: CombinatorialMap
    move: Move | None
    multiplier: W
    children: tuple["TraceNode[W]", ...]

    def value(self) -> W:
        if not self.children:
            return self.multiplier
        total = self.children[0].value()
        for child in self.children[1:]:
            total = total + child.value()
        return self.multiplier * total


def classify_face(cmap: CombinatorialMap, face: Face) -> MoveKind | None:
    """The move matching ``face``, or ``None``.

    Degenerate small faces (repeated vertex or edge, as around a vertex
    self-loop) match nothing.
    """
    kind = {2: MoveKind.BIGON, 3: MoveKind.TRIANGLE, 4: MoveKind.SQUARE}.get(face.degree)
    if kind is None:
        return None
    d = face.degree
    if len(set(face.vertices)) != d or len(set(face.edges)) != d:
        return None
    return kind


def available_moves(cmap: CombinatorialMap) -> list[Move]:
    """Every matching move, loop first, then faces by smallest half-edge."""
    moves = []
    if cmap.free_loops > 0:
        moves.append(Move(MoveKind.LOOP))
    for face in cmap.faces():
        kind = classify_face(cmap, face)
        if kind is not None:
            moves.append(Move(kind, face.half_edges))
    return moves


_PRIORITY = {
    MoveKind.LOOP: 0,
    MoveKind.BIGON: 1,
    MoveKind.TRIANGLE: 2,
    MoveKind.SQUARE: 3,
}


def find_move(cmap: CombinatorialMap) -> Move | None:
    """Highest-priority move: loop, then bigon, triangle, square.

    Ties between faces go to the one with the smallest half-edge, which
    is their order in ``available_moves``.
    """
    moves = available_moves(cmap)
    if not moves:
        return None
    return min(moves, key=lambda m: (_PRIORITY[m.kind], m.half_edges))


def _face_by_half_edges(cmap: CombinatorialMap, half_edges: tuple[int, ...]) -> Face:
    for face in cmap.faces():
        if face.half_edges == tuple(half_edges):
            return face
    raise InvalidMoveError(f"no face with half-edge cycle {tuple(half_edges)}")


def _checked_face(
    cmap: CombinatorialMap, half_edges: tuple[int, ...], kind: MoveKind
) -> Face:
    face = _face_by_half_edges(cmap, half_edges)
    if classify_face(cmap, face) is not kind:
        raise InvalidMoveError(
            f"face {tuple(half_edges)} does not match a {kind.value} move"
        )
    return face


def _rebuild(
    cmap: CombinatorialMap,
    dead_half: set[int],
    glue: dict[int, int],
    dead_vertices: set[int],
    new_rotations: list[tuple[int, int, int]],
) -> CombinatorialMap:
    """Remove ``dead_half``, welding edges across the ``glue`` pairing.

    ``glue`` matches dead stub half-edges two by two; an edge whose twin
    died is rejoined with whatever lies past the weld, following chains
    through any run of welds.  Chains that close up without ever meeting
    a surviving half-edge are circles, and each one becomes a free loop.
    New vertices (for the triangle collapse) list their rotations in old
    half-edge ids.
    """
    twin = cmap.twin
    survivors = [h for h in range(cmap.n_half_edges) if h not in dead_half]

    partner: dict[int, int] = {}
    used_stubs: set[int] = set()
    for h in survivors:
        if h in partner:
            continue
        z = twin[h]
        hops = 0
        while z in dead_half:
            used_stubs.add(z)
            used_stubs.add(glue[z])
            z = twin[glue[z]]
            hops += 1
            if hops > len(glue) + 1:
                raise AssertionError("weld chain failed to terminate")
        partner[h] = z
        partner[z] = h
    pairs = sorted({tuple(sorted((h, p))) for h, p in partner.items()})

    # welds never reached from a surviving half-edge close into circles
    new_loops = 0
    remaining = {s for s in glue if s not in used_stubs}
    while remaining:
        start = min(remaining)
        z = start
        while True:
            remaining.discard(z)
            remaining.discard(glue[z])
            z = twin[glue[z]]
            if z == start:
                break
        new_loops += 1

    rotations = [
        (v, cmap.rotation(v)) for v in range(cmap.n_vertices) if v not in dead_vertices
    ]
    next_vid = cmap.n_vertices
    for rot in new_rotations:
        rotations.append((next_vid, rot))
        next_vid += 1
    return build_map(rotations, pairs, cmap.free_loops + new_loops)


def apply_loop(cmap: CombinatorialMap) -> CombinatorialMap:
    """Remove one free loop."""
    if cmap.free_loops == 0:
        raise InvalidMoveError("no free loop to remove")
    return CombinatorialMap(
        cmap.twin,
        cmap.next_at_vertex,
        cmap.vertex_of,
        cmap.free_loops - 1,
        check_planar=False,
    )


def apply_bigon(cmap: CombinatorialMap, half_edges: tuple[int, ...]) -> CombinatorialMap:
    """Delete a 2-gon face and weld the two edges left dangling."""
    face = _checked_face(cmap, tuple(half_edges), MoveKind.BIGON)
    sigma = cmap.next_at_vertex
    twin = cmap.twin
    k0, k1 = face.half_edges
    outer = (sigma[k0], sigma[k1])
    dead = {k0, k1, twin[k0], twin[k1], *outer}
    glue = {outer[0]: outer[1], outer[1]: outer[0]}
    return _rebuild(cmap, dead, glue, set(face.vertices), [])


def apply_triangle(
    cmap: CombinatorialMap, half_edges: tuple[int, ...]
) -> CombinatorialMap:
    """Collapse a 3-gon face to one vertex carrying the outer half-edges."""
    face = _checked_face(cmap, tuple(half_edges), MoveKind.TRIANGLE)
    sigma = cmap.next_at_vertex
    twin = cmap.twin
    k0, k1, k2 = face.half_edges
    x = (sigma[k0], sigma[k1], sigma[k2])
    dead = {k0, k1, k2, twin[k0], twin[k1], twin[k2]}
    # reversed face order keeps the collapsed rotation planar
    return _rebuild(cmap, dead, {}, set(face.vertices), [(x[0], x[2], x[1])])


def apply_square(
    cmap: CombinatorialMap, half_edges: tuple[int, ...]
) -> tuple[CombinatorialMap, CombinatorialMap]:
    """Delete a 4-gon face and rejoin the four stubs both planar ways."""
    face = _checked_face(cmap, tuple(half_edges), MoveKind.SQUARE)
    sigma = cmap.next_at_vertex
    twin = cmap.twin
    x = tuple(sigma[k] for k in face.half_edges)
    dead = set(face.half_edges) | {twin[k] for k in face.half_edges} | set(x)
    dead_v = set(face.vertices)
    glue_a = {x[0]: x[1], x[1]: x[0], x[2]: x[3], x[3]: x[2]}
    glue_b = {x[1]: x[2], x[2]: x[1], x[3]: x[0], x[0]: x[3]}
    return (
        _rebuild(cmap, dead, glue_a, dead_v, []),
        _rebuild(cmap, dead, glue_b, dead_v, []),
    )


def apply_move(
    cmap: CombinatorialMap, move: Move
) -> tuple[CombinatorialMap, ...]:
    """Children produced by ``move``: two for a square, one otherwise."""
    if move.kind is MoveKind.LOOP:
        return (apply_loop(cmap),)
    if move.kind is MoveKind.BIGON:
        return (apply_bigon(cmap, move.half_edges),)
    if move.kind is MoveKind.TRIANGLE:
        return (apply_triangle(cmap, move.half_edges),)
    return apply_square(cmap, move.half_edges)


def _multiplier(move: Move, weights: RelationWeights[W]) -> W:
    if move.kind is MoveKind.LOOP:
        return weights.loop
    if move.kind is MoveKind.BIGON:
        return weights.bigon
    return weights.one


def reduce_map(
    cmap: CombinatorialMap,
    weights: RelationWeights[W] = EULER_WEIGHTS,
    *,
    rng: Any = None,
) -> TraceNode[W]:
    """Reduce to the empty map, recording every step in a trace tree.

    Moves are chosen by priority; pass a ``random.Random`` as ``rng`` to
    pick uniformly among all matches instead.  Runs that finish agree on
    the value whatever the order, but a randomized run can occasionally
    strand on a zero-count intermediate map (a vertex self-loop blocks
    every move) where the priority order happens to finish.

    Raises :class:`NonPlanarError` for maps that do not embed in the
    sphere and :class:`IrreducibleError` when no move matches.
    """
    if not cmap.is_planar:
        raise NonPlanarError("reduction moves are only valid for planar maps")

    def recurse(graph: CombinatorialMap) -> TraceNode[W]:
        if graph.n_half_edges == 0 and graph.free_loops == 0:
            return TraceNode(graph, None, weights.one, ())
        if rng is None:
            move = find_move(graph)
        else:
            moves = available_moves(graph)
            move = rng.choice(moves) if moves else None
        if move is None:
            raise IrreducibleError(graph)
        children = tuple(recurse(child) for child in apply_move(graph, move))
        return TraceNode(graph, move, _multiplier(move, weights), children)

    return recurse(cmap)


def euler_characteristic(cmap: CombinatorialMap) -> int:
    """Value of the reduction under weights ``loop=3, bigon=2``.

    Equals the Tait coloring count whenever the reduction terminates.
    """
    return reduce_map(cmap, EULER_WEIGHTS).value()


def format_trace(root: TraceNode) -> str:
    """Indented one-line-per-node rendering of a trace tree."""
    lines: list[str] = []

    def walk(node: TraceNode, depth: int) -> None:
        pad = "  " * depth
        if node.move is None:
            lines.append(f"{pad}{depth} empty {node.multiplier}")
            return
        site = ",".join(str(h) for h in node.move.half_edges) or "-"
        lines.append(f"{pad}{depth} {node.move.kind.value} {site} {node.multiplier}")
        for child in node.children:
            walk(child, depth + 1)

    walk(root, 0)
    return "\n".join(lines)
