"""Parity-graded spaces and their vectors."""

import pytest
from hypothesis import given, strategies as st

from nlielab.fields import GF, QQ
from nlielab.superspace import EVEN, ODD, SuperSpace, SuperVector, parse_space, serialize_space


def space22():
    return SuperSpace(QQ, ("a", "b", "x", "y"), (EVEN, EVEN, ODD, ODD))


coeffs = st.lists(st.integers(-9, 9), min_size=4, max_size=4)


def vec(space, cs):
    return space.vector({i: c for i, c in enumerate(cs)})


@given(coeffs, coeffs)
def test_vector_space_axioms(cs, ds):
    V = space22()
    u, v = vec(V, cs), vec(V, ds)
    assert u + v == v + u
    assert u - v == u + (-v)
    assert (u + v).scale(3) == u.scale(3) + v.scale(3)
    assert u.scale(0).is_zero()
    assert (u - u).is_zero()


def test_parity_of_vectors():
    V = space22()
    assert V.zero().parity() == EVEN
    assert V.basis_vector(0).parity() == EVEN
    assert V.basis_vector(3).parity() == ODD
    assert vec(V, [1, 2, 0, 0]).parity() == EVEN
    assert vec(V, [0, 0, 1, -1]).parity() == ODD
    assert vec(V, [1, 0, 1, 0]).parity() is None


def test_reversed_flips_parities():
    V = space22()
    W = V.reversed()
    assert W.dims() == (2, 2)
    assert W.parities == (ODD, ODD, EVEN, EVEN)
    assert W.reversed() == V
    assert W != V


def test_vector_by_label_and_zero_drop():
    V = space22()
    v = V.vector({"a": 2, "x": 0})
    assert v.coords == {0: QQ.scalar(2)}
    assert V.index("y") == 3


def test_constructor_validation():
    with pytest.raises(ValueError):
        SuperSpace(QQ, ("a", "a"), (0, 0))
    with pytest.raises(ValueError):
        SuperSpace(QQ, ("a", "b"), (0,))
    with pytest.raises(ValueError):
        SuperSpace(QQ, ("a",), (2,))
    with pytest.raises(ValueError):
        SuperSpace(QQ, ("a",), (0,), zdegrees=(1, 2))


def test_cross_space_operations_rejected():
    V = space22()
    W = V.reversed()
    with pytest.raises(ValueError):
        V.basis_vector(0) + W.basis_vector(0)


def test_serialize_parse_roundtrip():
    V = SuperSpace(GF(5), ("e1", "e2", "f"), (0, 1, 1), zdegrees=(-1, -1, 0))
    text = serialize_space(V)
    assert parse_space(text, GF(5)) == V
    plain = SuperSpace(QQ, ("u", "v"), (0, 1))
    assert parse_space(serialize_space(plain), QQ) == plain
    with pytest.raises(ValueError):
        parse_space("u mixed\n", QQ)
    with pytest.raises(ValueError):
        parse_space("u even 1 extra junk\n", QQ)


def test_vector_repr_is_sorted():
    V = space22()
    v = SuperVector(V, {3: QQ.one(), 0: QQ.scalar(-2)})
    assert repr(v) == "-2*a + 1*y"
    assert repr(V.zero()) == "0"
