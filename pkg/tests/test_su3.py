"""Order-2 special unitaries, the product criterion, and map decorations."""

import numpy as np
import pytest

from tait.catalog import circle, cube, dodecahedron, k4, prism, theta
from tait.planar import build_map
from tait.su3 import (
    STANDARD_INVOLUTION,
    InadmissibleDecorationError,
    RetriesExhaustedError,
    admissibility_deviation,
    axis_of,
    check_order_two_product,
    decoration_to_representation,
    is_admissible,
    is_order_two,
    is_special_unitary,
    line_overlap,
    random_line,
    random_special_unitary,
    reflection_from_line,
    representation_to_decoration,
    same_line,
    sample_admissible_decoration,
    vertex_product_deviation,
)

E = np.eye(3, dtype=complex)


def dumbbell():
    return build_map(
        [(0, (0, 1, 2)), (1, (3, 4, 5))],
        [(0, 1), (2, 3), (4, 5)],
        check_planar=False,
    )


def test_standard_involution():
    assert is_special_unitary(STANDARD_INVOLUTION)
    assert is_order_two(STANDARD_INVOLUTION)
    assert same_line(axis_of(STANDARD_INVOLUTION), E[0])
    assert np.allclose(reflection_from_line(E[0]), STANDARD_INVOLUTION)


def test_basis_reflections_are_sign_matrices():
    for i in range(3):
        R = reflection_from_line(E[i])
        want = -np.eye(3)
        want[i, i] = 1.0
        assert np.allclose(R, want)
        assert is_order_two(R)


def test_reflection_ignores_phase_and_needs_unit_norm():
    rng = np.random.default_rng(7)
    v = random_line(rng)
    R1 = reflection_from_line(v)
    R2 = reflection_from_line(np.exp(0.73j) * v)
    assert np.linalg.norm(R1 - R2) < 1e-14
    with pytest.raises(ValueError, match="unit vector"):
        reflection_from_line(2.0 * v)


@pytest.mark.parametrize("seed", range(6))
def test_axis_recovery(seed):
    rng = np.random.default_rng(seed)
    v = random_line(rng)
    R = reflection_from_line(v)
    assert is_special_unitary(R)
    assert is_order_two(R)
    assert line_overlap(axis_of(R), v) >= 1.0 - 1e-12


def test_is_order_two_branches():
    assert not is_order_two(E)
    assert is_order_two(STANDARD_INVOLUTION)
    # special unitary of order 4
    assert not is_order_two(np.diag([1j, 1j, -1.0]))
    with pytest.raises(ValueError, match="special unitary"):
        is_order_two(2.0 * E)
    with pytest.raises(ValueError, match="special unitary"):
        is_order_two(np.diag([1.0, 1.0, -1.0]))


def test_axis_of_rejects_non_involutions():
    with pytest.raises(ValueError, match="order-2"):
        axis_of(E)


@pytest.mark.parametrize("seed", range(4))
def test_random_special_unitary(seed):
    U = random_special_unitary(np.random.default_rng(seed))
    assert is_special_unitary(U)
    assert abs(np.linalg.det(U) - 1.0) < 1e-12


def test_product_of_orthogonal_reflections():
    report = check_order_two_product(reflection_from_line(E[0]), reflection_from_line(E[1]))
    assert report.axes_orthogonal
    assert report.product_order_two
    assert report.biconditional_holds
    assert report.orthogonal_case_deviation <= 1e-12
    assert max(report.product_axis_overlaps) <= 1e-12
    # the product fixes the third basis line
    product = reflection_from_line(E[0]) @ reflection_from_line(E[1])
    assert same_line(axis_of(product), E[2])


def test_product_of_equal_reflections_is_identity():
    S = reflection_from_line(E[0])
    report = check_order_two_product(S, S)
    assert not report.axes_orthogonal
    assert report.axis_overlap == pytest.approx(1.0)
    assert not report.product_order_two
    assert report.involution_defect <= 1e-12
    assert report.product_axis_overlaps is None
    assert report.biconditional_holds
    assert report.orthogonal_case_deviation == 0.0


def test_product_of_slanted_reflections():
    v = E[0]
    w = 0.5 * E[0] + (np.sqrt(3) / 2) * E[1]
    report = check_order_two_product(reflection_from_line(v), reflection_from_line(w))
    assert report.axis_overlap == pytest.approx(0.5)
    assert not report.axes_orthogonal
    assert not report.product_order_two
    assert report.involution_defect > 1.0
    assert report.biconditional_holds


@pytest.mark.parametrize("seed", range(10))
def test_product_criterion_both_branches(seed):
    rng = np.random.default_rng(seed)
    v = random_line(rng)
    w = random_line(rng)
    # orthogonal partner via Gram-Schmidt
    u = w - np.vdot(v, w) * v
    u = u / np.linalg.norm(u)
    ortho = check_order_two_product(reflection_from_line(v), reflection_from_line(u))
    assert ortho.axes_orthogonal and ortho.product_order_two
    assert ortho.biconditional_holds
    assert ortho.orthogonal_case_deviation <= 1e-9
    slant = check_order_two_product(reflection_from_line(v), reflection_from_line(w))
    assert slant.biconditional_holds


def test_product_check_rejects_non_involutions():
    with pytest.raises(ValueError, match="S is not"):
        check_order_two_product(E, STANDARD_INVOLUTION)
    with pytest.raises(ValueError, match="T is not"):
        check_order_two_product(STANDARD_INVOLUTION, E)


def test_theta_standard_basis_decoration():
    g = theta()
    decoration = [E[0], E[1], E[2]]
    assert is_admissible(g, decoration)
    assert admissibility_deviation(g, decoration) <= 1e-15
    mats = decoration_to_representation(g, decoration)
    assert vertex_product_deviation(g, mats) <= 1e-12
    back = representation_to_decoration(mats)
    for a, b in zip(back, decoration):
        assert same_line(a, b)


def test_inadmissible_decoration_is_rejected():
    g = theta()
    with pytest.raises(InadmissibleDecorationError, match="overlap"):
        decoration_to_representation(g, [E[0], E[0], E[1]])
    assert not is_admissible(g, [E[0], E[0], E[1]])


def test_decoration_shape_errors():
    g = theta()
    with pytest.raises(ValueError, match="map has 3 edges"):
        decoration_to_representation(g, [E[0], E[1]])
    with pytest.raises(ValueError, match="unit vector"):
        decoration_to_representation(g, [E[0], E[1], 2 * E[2]])


def test_representation_to_decoration_names_bad_edge():
    with pytest.raises(ValueError, match="edge 1:"):
        representation_to_decoration([STANDARD_INVOLUTION, np.eye(3)])


def test_self_loop_decoration_deviation_is_one():
    assert admissibility_deviation(dumbbell(), [E[0], E[1], E[2]]) == 1.0


@pytest.mark.parametrize(
    "g", [theta(), k4(), prism(3), cube()], ids=["theta", "k4", "prism3", "cube"]
)
def test_sampler_produces_admissible_decorations(g):
    lines = sample_admissible_decoration(g, rng=0)
    assert len(lines) == g.n_edges
    assert is_admissible(g, lines)
    mats = decoration_to_representation(g, lines)
    assert vertex_product_deviation(g, mats) <= 1e-9
    back = representation_to_decoration(mats)
    for a, b in zip(back, lines):
        assert line_overlap(a, b) >= 1.0 - 1e-9


def test_sampler_is_deterministic_per_seed():
    a = sample_admissible_decoration(cube(), rng=42)
    b = sample_admissible_decoration(cube(), rng=42)
    c = sample_admissible_decoration(cube(), rng=43)
    assert all(np.allclose(x, y) for x, y in zip(a, b))
    assert not all(line_overlap(x, y) >= 1 - 1e-9 for x, y in zip(a, c))


def test_sampler_handles_free_loops():
    lines = sample_admissible_decoration(circle(2), rng=1)
    assert len(lines) == 2
    for v in lines:
        assert abs(np.linalg.norm(v) - 1.0) < 1e-12


def test_sampler_rejects_self_loops_immediately():
    with pytest.raises(RetriesExhaustedError) as info:
        sample_admissible_decoration(dumbbell(), rng=0)
    assert info.value.retries == 0


def test_sampler_retry_budget_is_reported():
    with pytest.raises(RetriesExhaustedError) as info:
        sample_admissible_decoration(dodecahedron(), rng=0, max_retries=3)
    assert info.value.retries == 3
