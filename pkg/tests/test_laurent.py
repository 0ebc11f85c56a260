"""Laurent ring arithmetic, quantum integers, and the coloring polynomial."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tait.catalog import circle, cube, k4, necklace, prism, theta
from tait.coloring import count_tait
from tait.laurent import (
    LaurentParseError,
    LaurentPoly,
    NotBipartiteError,
    P3_WEIGHTS,
    p3,
    p3_trace,
    parse_laurent,
    quantum_integer,
)
from tait.planar import NonPlanarError, disjoint_union
from tait.reduction import format_trace


laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=6
).map(LaurentPoly)

rationals = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 12)
)


def test_frozen_quantum_integers():
    assert quantum_integer(0) == LaurentPoly.zero()
    assert quantum_integer(1) == LaurentPoly.one()
    assert str(quantum_integer(2)) == "q + q^-1"
    assert str(quantum_integer(3)) == "q^2 + 1 + q^-2"
    assert str(quantum_integer(5)) == "q^4 + q^2 + 1 + q^-2 + q^-4"
    with pytest.raises(ValueError, match="non-negative"):
        quantum_integer(-1)


@pytest.mark.parametrize("n", range(1, 11))
def test_quantum_integer_recurrence(n):
    two = quantum_integer(2)
    assert two * quantum_integer(n) == quantum_integer(n + 1) + quantum_integer(n - 1)


def test_quantum_integer_counts_at_one():
    for n in range(8):
        assert quantum_integer(n)(1) == n
        assert quantum_integer(n).reciprocal() == quantum_integer(n)


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert a * LaurentPoly.zero() == LaurentPoly.zero()
    assert (a - b) + b == a
    assert a + (-a) == LaurentPoly.zero()


@given(laurents)
def test_str_parse_roundtrip(a):
    assert parse_laurent(str(a)) == a


@given(laurents, laurents, rationals)
def test_evaluation_is_a_homomorphism(a, b, q):
    if q == 0:
        q = Fraction(1, 3)
    assert (a + b)(q) == a(q) + b(q)
    assert (a * b)(q) == a(q) * b(q)
    assert isinstance(a(q), Fraction)


@given(laurents, laurents)
def test_reciprocal_is_a_ring_map(a, b):
    assert (a + b).reciprocal() == a.reciprocal() + b.reciprocal()
    assert (a * b).reciprocal() == a.reciprocal() * b.reciprocal()
    assert a.reciprocal().reciprocal() == a


def test_int_mixing():
    p = quantum_integer(2)
    assert 2 + p == p + 2 == p + LaurentPoly({0: 2})
    assert 3 * p == p * 3
    assert 1 - p == -(p - 1)
    assert p != 7
    assert LaurentPoly({0: 7}) == 7
    with pytest.raises(TypeError):
        p + 1.5  # noqa: B018


def test_pow():
    p = quantum_integer(2)
    assert p**0 == LaurentPoly.one()
    assert p**3 == p * p * p
    with pytest.raises(ValueError, match="non-negative"):
        p**-1


def test_queries():
    p = LaurentPoly({3: 1, 0: -2, -4: 5})
    assert p.coefficient(3) == 1
    assert p.coefficient(2) == 0
    assert list(p.items()) == [(3, 1), (0, -2), (-4, 5)]
    assert (p.min_exponent, p.max_exponent) == (-4, 3)
    assert not p.is_zero
    assert LaurentPoly.zero().is_zero
    with pytest.raises(ValueError, match="no exponents"):
        LaurentPoly.zero().min_exponent  # noqa: B018


def test_constructor_drops_zeros_and_rejects_nonints():
    assert LaurentPoly({2: 0, 1: 1}) == LaurentPoly.q_power(1)
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})


def test_printing_edge_cases():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.one()) == "1"
    assert str(LaurentPoly({0: -3})) == "-3"
    assert str(LaurentPoly({1: -1, -1: 1})) == "-q + q^-1"
    assert str(LaurentPoly({2: -4, 0: 1, -3: -1})) == "-4*q^2 + 1 - q^-3"
    assert repr(LaurentPoly({-1: 1, 2: 3})) == "LaurentPoly({2: 3, -1: 1})"


def test_parse_examples():
    assert parse_laurent("0") == LaurentPoly.zero()
    assert parse_laurent("q") == LaurentPoly.q_power(1)
    assert parse_laurent("-q^-2") == LaurentPoly({-2: -1})
    assert parse_laurent(" 2*q^3+ 1 -4 * q^-1 ") == LaurentPoly({3: 2, 0: 1, -1: -4})
    assert parse_laurent("q + q") == LaurentPoly({1: 2})


@pytest.mark.parametrize("bad", ["", "  ", "q^", "1.5", "q**2", "2q", "q^2 q", "+"])
def test_parse_errors(bad):
    with pytest.raises(LaurentParseError):
        parse_laurent(bad)


def test_evaluation_at_zero():
    assert LaurentPoly({2: 5, 0: 7})(0) == 7
    assert LaurentPoly({2: 5})(0) == 0
    # any negative exponent diverges at zero
    with pytest.raises(ZeroDivisionError):
        quantum_integer(2)(0)
    with pytest.raises(ZeroDivisionError):
        quantum_integer(3)(0)


def test_p3_weights():
    assert P3_WEIGHTS.loop == quantum_integer(3)
    assert P3_WEIGHTS.bigon == quantum_integer(2)
    assert P3_WEIGHTS.one == LaurentPoly.one()


def test_p3_frozen_values():
    assert str(p3(circle())) == "q^2 + 1 + q^-2"
    assert str(p3(theta())) == "q^3 + 2*q + 2*q^-1 + q^-3"
    assert str(p3(cube())) == "2*q^4 + 6*q^2 + 8 + 6*q^-2 + 2*q^-4"
    assert p3(theta()) == quantum_integer(2) * quantum_integer(3)
    assert p3(theta())(Fraction(1, 2)) == Fraction(105, 8)


def test_p3_at_one_counts_colorings():
    for g in (
        circle(),
        circle(2),
        theta(),
        prism(2),
        cube(),
        prism(6),
        necklace(2),
        necklace(3),
        disjoint_union(theta(), circle()),
        disjoint_union(theta(), theta()),
    ):
        assert p3(g)(1) == count_tait(g)


def test_p3_is_reciprocal_symmetric():
    for g in (theta(), cube(), necklace(3)):
        assert p3(g).reciprocal() == p3(g)


def test_p3_multiplies_over_components():
    assert p3(disjoint_union(theta(), circle())) == p3(theta()) * p3(circle())


def test_p3_rejects_nonbipartite_and_nonplanar():
    with pytest.raises(NotBipartiteError):
        p3(k4())
    with pytest.raises(NotBipartiteError):
        p3(prism(3))
    from tait.catalog import petersen

    with pytest.raises((NotBipartiteError, NonPlanarError)):
        p3(petersen())


def test_p3_trace_matches_euler_trace_shape():
    trace = p3_trace(theta())
    assert format_trace(trace) == (
        "0 bigon 0,5 q + q^-1\n  1 loop - q^2 + 1 + q^-2\n    2 empty 1"
    )
    assert trace.value() == p3(theta())
