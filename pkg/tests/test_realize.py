import json

import pytest
from hypothesis import given

from omx import realize
from omx.realize import Arrangement
import oracles
from conftest import ARRANGEMENTS, fixture_path, load_fixture
from strategies import arrangements


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_covectors_match_grid_oracle(name):
    a = load_fixture(name)
    m = realize.om_from_vectors(a)
    assert m.om.covectors == oracles.grid_covectors(a.all_vectors, radius=8)


@given(arrangements())
def test_grid_points_are_covectors(a):
    # every sampled point gives a covector; the grid may miss thin cones
    m = realize.om_from_vectors(a)
    assert oracles.grid_covectors(a.all_vectors, radius=2) <= m.om.covectors


def test_sign_vector_of_point():
    a = load_fixture("cm-arr-1")
    assert realize.sign_vector_of_point(a, (0, 0, 1)) == (0, 0, 0, -1, 1)
    with pytest.raises(ValueError):
        realize.sign_vector_of_point(a, (1, 2))


def test_json_round_trip(tmp_path):
    a = load_fixture("square")
    p = tmp_path / "a.json"
    p.write_text(json.dumps(a.to_json()))
    assert realize.load_arrangement(p) == a
    assert json.loads(fixture_path("square").read_text())["dimension"] == 3


def test_bad_inputs():
    with pytest.raises(ValueError):
        Arrangement(((1, 0), (1, 0, 0)), (0, 0, 1))
    with pytest.raises(ValueError):
        Arrangement.from_json({"vectors": [[1, 0]], "g": [0, 1], "dimension": 3})
    with pytest.raises(ValueError):
        realize.om_from_vectors(Arrangement(((1, 0),), (0, 0)))
    loop = realize.om_from_vectors(Arrangement(((1, 0),), (0, 0)), allow_loop_g=True)
    assert loop.g_is_loop and not loop.bounded


def test_central_arrangement_has_coloop_g():
    # a single point on the affine line: the arrangement is central
    m = realize.om_from_vectors(Arrangement(((1, 0),), (0, 1)))
    assert m.g_is_coloop
    assert m.bounded == {(0, 1)}
