"""Edge decorations by complex lines and their order-2 unitary images.

A decoration assigns to every edge a line in C^3 (stored as a unit
vector; only the span matters, so lines compare by |<u, w>|).  It is
admissible when the three lines at each vertex are pairwise orthogonal.
Sending a line to the special unitary involution that fixes it and
negates its orthogonal complement turns an admissible decoration into a
family of order-2 matrices whose product around every vertex is the
identity, and the 1-eigenspace recovers the line; both directions are
implemented and numerically inverse to each other.

All tolerances are absolute; the default 1e-9 leaves three orders of
magnitude of headroom over double-precision arithmetic on 3x3 products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .planar import CombinatorialMap, edge_bfs_order

__all__ = [
    "STANDARD_INVOLUTION",
    "InadmissibleDecorationError",
    "RetriesExhaustedError",
    "is_special_unitary",
    "is_order_two",
    "reflection_from_line",
    "axis_of",
    "line_overlap",
    "same_line",
    "random_line",
    "random_special_unitary",
    "OrderTwoProductReport",
    "check_order_two_product",
    "admissibility_deviation",
    "is_admissible",
    "decoration_to_representation",
    "representation_to_decoration",
    "vertex_product_deviation",
    "sample_admissible_decoration",
]

STANDARD_INVOLUTION = np.diag([1.0, -1.0, -1.0]).astype(complex)

_I3 = np.eye(3, dtype=complex)


class InadmissibleDecorationError(ValueError):
    """Raised when incident lines are not pairwise orthogonal."""


class RetriesExhaustedError(RuntimeError):
    """Raised when decoration sampling keeps hitting conflicts.

    Carries the retry budget on ``retries``.  Exhaustion means this run
    found no admissible decoration, not that none exists.
    """

    def __init__(self, message: str, retries: int):
        super().__init__(message)
        self.retries = retries


def _as_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {M.shape}")
    return M


def _as_unit_vector(v, tol: float) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(3)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"line representative must be a unit vector, |v| = {norm}")
    return v


def is_special_unitary(M, tol: float = 1e-9) -> bool:
    M = _as_matrix(M)
    return (
        float(np.linalg.norm(M.conj().T @ M - _I3)) <= tol
        and abs(np.linalg.det(M) - 1.0) <= tol
    )


def _require_special_unitary(M, tol: float) -> np.ndarray:
    M = _as_matrix(M)
    if not is_special_unitary(M, tol):
        raise ValueError("matrix is not special unitary within tolerance")
    return M


def is_order_two(M, tol: float = 1e-9) -> bool:
    """Whether a special unitary matrix squares to I without being I.

    Equivalently, whether it is conjugate to the standard involution
    diag(1, -1, -1): order 2 in SU(3) forces eigenvalues (1, -1, -1).
    Raises if the input is not special unitary within tolerance.
    """
    M = _require_special_unitary(M, tol)
    return (
        float(np.linalg.norm(M @ M - _I3)) <= tol
        and float(np.linalg.norm(M - _I3)) > tol
    )


def reflection_from_line(v, tol: float = 1e-9) -> np.ndarray:
    """The order-2 special unitary fixing the line of ``v``.

    Returns 2 v v* - I, which negates the orthogonal complement; the
    result only depends on the line, not the phase of ``v``.
    """
    v = _as_unit_vector(v, tol)
    return 2.0 * np.outer(v, v.conj()) - _I3


def axis_of(M, tol: float = 1e-9) -> np.ndarray:
    """Unit vector spanning the 1-eigenspace of an order-2 matrix.

    (M + I)/2 projects onto that eigenspace; its largest column is a
    stable representative.  The phase is canonicalized so the largest
    component is real positive.
    """
    M = _as_matrix(M)
    if not is_order_two(M, tol):
        raise ValueError("matrix is not an order-2 special unitary within tolerance")
    proj = (M + _I3) / 2.0
    col = int(np.argmax(np.linalg.norm(proj, axis=0)))
    v = proj[:, col]
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    v = v * (v[k].conj() / abs(v[k]))
    return v


def line_overlap(u, w) -> float:
    """|<u, w>| for unit vectors: 0 for orthogonal lines, 1 for equal ones."""
    u = np.asarray(u, dtype=complex).reshape(3)
    w = np.asarray(w, dtype=complex).reshape(3)
    return float(abs(np.vdot(u, w)))


def same_line(u, w, tol: float = 1e-9) -> bool:
    return line_overlap(u, w) >= 1.0 - tol


def random_line(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_special_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-style random SU(3): Gaussian matrix, QR, phase fixes."""
    z = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    det = np.linalg.det(q)
    return q * np.exp(-1j * np.angle(det) / 3.0)


@dataclass(frozen=True)
class OrderTwoProductReport:
    """Numerical record for the product of two order-2 matrices.

    The headline fact: the product is again order 2 exactly when the
    two fixed lines ("axes") are orthogonal, in which case its own axis
    is orthogonal to both.  ``biconditional_holds`` reports whether the
    two sides of that equivalence agreed at the tolerance used.
    """

    axis_inner: complex
    axes_orthogonal: bool
    product_order_two: bool
    involution_defect: float
    product_axis_overlaps: tuple[float, float] | None
    biconditional_holds: bool

    @property
    def axis_overlap(self) -> float:
        return abs(self.axis_inner)

    @property
    def orthogonal_case_deviation(self) -> float:
        """Largest quantity that should vanish when the axes are orthogonal."""
        if not self.axes_orthogonal:
            return 0.0
        worst = max(self.axis_overlap, self.involution_defect)
        if self.product_axis_overlaps is not None:
            worst = max(worst, *self.product_axis_overlaps)
        return worst


def check_order_two_product(S, T, tol: float = 1e-9) -> OrderTwoProductReport:
    """Measure the order-2-product criterion on a pair of involutions.

    Both arguments must be order-2 special unitaries.  The report pairs
    the overlap of their axes with the involution defect ||(ST)^2 - I||
    of the product, and, when the product is again order 2, the overlap
    of its axis with each input axis.
    """
    S = _as_matrix(S)
    T = _as_matrix(T)
    for name, M in (("S", S), ("T", T)):
        if not is_order_two(M, tol):
            raise ValueError(f"{name} is not an order-2 special unitary")
    a = axis_of(S, tol)
    b = axis_of(T, tol)
    inner = complex(np.vdot(a, b))
    product = S @ T
    defect = float(np.linalg.norm(product @ product - _I3))
    order_two = defect <= tol and float(np.linalg.norm(product - _I3)) > tol
    overlaps = None
    if order_two:
        c = axis_of(product, tol)
        overlaps = (line_overlap(c, a), line_overlap(c, b))
    return OrderTwoProductReport(
        axis_inner=inner,
        axes_orthogonal=abs(inner) <= tol,
        product_order_two=order_two,
        involution_defect=defect,
        product_axis_overlaps=overlaps,
        biconditional_holds=order_two == (abs(inner) <= tol),
    )


# ----------------------------------------------------------------------
# decorations on a map


def _vertex_edge_triples(cmap: CombinatorialMap) -> list[tuple[int, int, int]]:
    return [cmap.vertex_edges(v) for v in range(cmap.n_vertices)]


def admissibility_deviation(cmap: CombinatorialMap, decoration) -> float:
    """Worst pairwise overlap of incident lines over all vertices.

    Zero (up to rounding) means admissible; a vertex self-loop makes
    the same line incident to itself, so the deviation is 1.
    """
    worst = 0.0
    for triple in _vertex_edge_triples(cmap):
        for i in range(3):
            for j in range(i + 1, 3):
                e, f = triple[i], triple[j]
                if e == f:
                    return 1.0
                worst = max(worst, line_overlap(decoration[e], decoration[f]))
    return worst


def is_admissible(cmap: CombinatorialMap, decoration, tol: float = 1e-9) -> bool:
    return admissibility_deviation(cmap, decoration) <= tol


def _check_decoration_shape(cmap: CombinatorialMap, decoration, tol: float):
    if len(decoration) != cmap.n_edges:
        raise ValueError(
            f"decoration has {len(decoration)} lines, map has {cmap.n_edges} edges"
        )
    return [_as_unit_vector(v, tol) for v in decoration]


def decoration_to_representation(
    cmap: CombinatorialMap, decoration, tol: float = 1e-9
) -> list[np.ndarray]:
    """Order-2 matrices of an admissible decoration, indexed by edge.

    Raises :class:`InadmissibleDecorationError` when incident lines are
    not pairwise orthogonal within ``tol``.  Around every vertex the
    three matrices multiply to the identity (in any order: reflections
    in pairwise-orthogonal lines commute).
    """
    lines = _check_decoration_shape(cmap, decoration, tol)
    deviation = admissibility_deviation(cmap, lines)
    if deviation > tol:
        raise InadmissibleDecorationError(
            f"incident lines overlap by {deviation:.3e} (tolerance {tol:.1e})"
        )
    return [reflection_from_line(v, tol) for v in lines]


def representation_to_decoration(matrices, tol: float = 1e-9) -> list[np.ndarray]:
    """Fixed lines of a family of order-2 matrices, indexed like the input.

    Raises ``ValueError`` naming the edge if some matrix is not an
    order-2 special unitary within ``tol``.
    """
    lines = []
    for e, M in enumerate(matrices):
        try:
            lines.append(axis_of(M, tol))
        except ValueError as exc:
            raise ValueError(f"edge {e}: {exc}") from exc
    return lines


def vertex_product_deviation(cmap: CombinatorialMap, matrices) -> float:
    """Worst ||M1 M2 M3 - I|| over vertices, factors in rotation order."""
    worst = 0.0
    for v in range(cmap.n_vertices):
        e1, e2, e3 = cmap.vertex_edges(v)
        product = np.asarray(matrices[e1]) @ matrices[e2] @ matrices[e3]
        worst = max(worst, float(np.linalg.norm(product - _I3)))
    return worst


def sample_admissible_decoration(
    cmap: CombinatorialMap,
    rng=None,
    *,
    tol: float = 1e-9,
    max_retries: int = 100,
) -> list[np.ndarray]:
    """Random admissible decoration by constraint propagation over edges.

    Repeatedly assigns the most-constrained unfixed edge (ties broken
    by breadth-first order): an edge whose fixed neighbors span a plane
    is forced to the remaining line, otherwise it gets a Haar-random
    line in the orthogonal complement of whatever is fixed.  If the
    fixed neighbors of some edge span all of C^3 the attempt restarts.
    Assigning forced edges first makes every constraint a consequence
    of earlier choices on frame-rigid graphs (theta, K4, the prisms,
    the necklaces), which therefore sample without restarts.  Graphs
    whose smallest faces are pentagons leave independent free choices
    that almost never close up, so the dodecahedron and the Petersen
    graph exhaust their retries; exhaustion is a statement about this
    sampler, not about the decoration space being empty.

    ``rng`` is anything ``numpy.random.default_rng`` accepts.  Raises
    :class:`RetriesExhaustedError` after ``max_retries`` conflicts.
    """
    rng = np.random.default_rng(rng)
    triples = _vertex_edge_triples(cmap)
    if any(len(set(t)) < 3 for t in triples):
        raise RetriesExhaustedError(
            "a vertex self-loop admits no admissible decoration", retries=0
        )
    n_paired = cmap.n_paired_edges
    endpoints = [cmap.edge_endpoints(e) for e in range(n_paired)]
    bfs_rank = {e: i for i, e in enumerate(edge_bfs_order(cmap))}

    def fixed_neighbors(e: int, lines) -> list[np.ndarray]:
        seen = []
        for v in endpoints[e]:
            for other in triples[v]:
                if other != e and lines[other] is not None:
                    seen.append(lines[other])
        return seen

    for _ in range(max_retries):
        lines: list[np.ndarray | None] = [None] * n_paired
        conflict = False
        unfixed = set(range(n_paired))
        while unfixed and not conflict:
            best = None
            for e in unfixed:
                fixed = fixed_neighbors(e, lines)
                if fixed:
                    s = np.linalg.svd(
                        np.conj(np.array(fixed)), compute_uv=False
                    )
                    rank = int(np.count_nonzero(s > s[0] * 1e-8))
                else:
                    rank = 0
                key = (-rank, bfs_rank[e])
                if best is None or key < best[0]:
                    best = (key, e, rank)
            _, e, rank = best
            if rank >= 3:
                conflict = True
                break
            fixed = fixed_neighbors(e, lines)
            if fixed:
                _, _, vh = np.linalg.svd(np.conj(np.array(fixed)))
                null_basis = np.conj(vh[rank:])
            else:
                null_basis = np.eye(3, dtype=complex)
            if rank == 2:
                x = null_basis[0]
            else:
                coef = rng.standard_normal(len(null_basis)) + 1j * rng.standard_normal(
                    len(null_basis)
                )
                x = coef @ null_basis
            x = x / np.linalg.norm(x)
            lines[e] = x
            unfixed.discard(e)
        if conflict:
            continue
        if admissibility_deviation(cmap, lines) <= tol:
            lines.extend(random_line(rng) for _ in range(cmap.free_loops))
            return lines
    raise RetriesExhaustedError(
        f"no admissible decoration found in {max_retries} attempts",
        retries=max_retries,
    )
