import pytest
from hypothesis import given, strategies as st

from omx import signvec as sv
from omx.signvec import SignVector
from strategies import sign_vectors

K = 5
pairs = st.tuples(sign_vectors(K), sign_vectors(K))


def test_string_round_trip():
    assert sv.to_str(sv.from_str("+-0+")) == "+-0+"
    with pytest.raises(ValueError):
        sv.from_str("+x")


def test_composition_and_separation():
    a, b = sv.from_str("+0-0"), sv.from_str("-+++")
    assert sv.to_str(sv.compose(a, b)) == "++-+"
    assert sv.separation(a, b) == {0, 2}
    assert sv.leq(sv.from_str("+000"), a) and not sv.leq(a, b)


@given(sign_vectors(K), sign_vectors(K), sign_vectors(K))
def test_compose_associative(a, b, c):
    assert sv.compose(sv.compose(a, b), c) == sv.compose(a, sv.compose(b, c))


@given(pairs)
def test_compose_laws(p):
    a, b = p
    assert sv.compose(a, a) == a
    assert sv.leq(a, sv.compose(a, b))
    assert sv.separation(a, b) == sv.separation(b, a)
    # composition commutes exactly when the separation set is empty
    assert (sv.compose(a, b) == sv.compose(b, a)) == (not sv.separation(a, b))


@given(pairs)
def test_conformal_order(p):
    a, b = p
    if sv.leq(a, b) and sv.leq(b, a):
        assert a == b
    if sv.leq(a, b):
        assert sv.support(a) <= sv.support(b)
        assert sv.compose(a, b) == b


def test_sign_vector_wrapper():
    ground = (1, 2, "g")
    a = SignVector.parse(ground, "+0-")
    b = SignVector.parse(ground, "-++")
    assert a["g"] == -1
    assert str(a.compose(b)) == "++-"
    assert a.separation(b) == {1, "g"}
    assert a.support == {1, "g"}
    assert str(-a) == "-0+"
    assert SignVector.zero(ground) < a
    assert str(a.restrict(["g", 1])) == "-+"
    with pytest.raises(ValueError):
        a.compose(SignVector.parse((1, 2, 3), "+++"))
    with pytest.raises(ValueError):
        a.restrict([7])
