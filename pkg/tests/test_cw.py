import pytest
from hypothesis import given, strategies as st

from omx import cw, nps, sr
import oracles
from conftest import ARRANGEMENTS, affine_om, load_fixture


def square_cell():
    # a filled square: 4 vertices, 4 edges, 1 face
    faces = {"a", "b", "c", "d", "ab", "bc", "cd", "ad", "abcd"}
    return cw.complex_from_poset(faces, leq=lambda s, t: set(s) <= set(t), bottom="")


def test_square_cell():
    x = square_cell()
    assert x.f_vector() == (4, 4, 1)
    x = cw.incidence_function(x)
    assert cw.check_incidence(x)
    h = cw.chain_cochains(x).integral_cohomology()
    assert all(g.is_zero() for g in h.values())
    assert cw.is_cm_space(x)


def test_non_graded_poset_rejected():
    faces = {"a", "b", "c", "ab", "abc"}
    with pytest.raises(ValueError):
        cw.complex_from_poset(faces, leq=lambda s, t: set(s) <= set(t), bottom="")


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_bounded_complex_f_vector(name):
    x = nps.cellular_resolution(affine_om(name)).complex
    assert x.f_vector() == oracles.bounded_faces_2d(load_fixture(name).vectors)[:x.dim + 1]


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_incidence_is_valid(name):
    x = nps.cellular_resolution(affine_om(name)).complex
    assert cw.check_incidence(x)
    assert cw.chain_cochains(x).composes_to_zero()


@given(st.data())
def test_reorienting_cells_keeps_cohomology(data):
    x = nps.cellular_resolution(affine_om("cm-arr-2")).complex
    flips = data.draw(st.lists(st.integers(1, len(x) - 1), max_size=4))
    y = x
    for c in flips:
        y = cw.reorient(y, c)
    assert cw.check_incidence(y)
    assert cw.local_cohomology_table(y, 0) == cw.local_cohomology_table(x, 0)
    assert cw.local_cohomology_table(y, None) == cw.local_cohomology_table(x, None)


def test_broken_incidence_detected():
    x = nps.cellular_resolution(affine_om("cm-arr-1")).complex
    (s, t), v = next((p, v) for p, v in x.incidence.items() if x.dims[p[0]] == 2)
    bad = dict(x.incidence)
    bad[(s, t)] = -v
    assert not cw.check_incidence(x.with_incidence(bad))


def test_strata_of_cm_arr_1():
    m = affine_om("cm-arr-1")
    st_ = cw.strata(m.bounded, m.om.covectors)
    assert len(st_.topes) == 2
    # every vertex and edge lies on the boundary except the edge between the two regions
    assert len(st_.boundary) == 4 + 4
    assert len(st_.subtopes) == 5


def test_order_filters():
    x = nps.cellular_resolution(affine_om("cm-arr-1")).complex
    for s in range(len(x)):
        assert cw.is_order_filter(x, cw.order_filter(x, cell=s))
    with pytest.raises(ValueError):
        cw.order_filter(x)
    with pytest.raises(ValueError):
        cw.cochain_complex({1}, x)


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_order_complex_is_subdivision(name):
    x = nps.cellular_resolution(affine_om(name)).complex
    bx = cw.order_complex(x)
    assert bx.euler_characteristic() == 0
    assert sr.reduced_cohomology(bx) == {d: 0 for d in range(-1, x.dim + 1)}
    with pytest.raises(ValueError):
        cw.barycentric_pair(x, 0)
