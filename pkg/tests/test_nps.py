from dataclasses import replace

import pytest

from omx import cw, nps, om, sr
from omx.realize import Arrangement, om_from_vectors
from conftest import ARRANGEMENTS, affine_om


def X(i):
    return ("x", i)


def Y(i):
    return ("y", i)


def ideal_set(i):
    return set(i.to_strings())


def test_variable_order():
    m = affine_om("nongp-cm-arr")
    assert nps.variables(m) == (X(1), Y(1), X(2), Y(2), X(3), Y(3))


def test_specialization():
    O = nps.matroid_ideal(affine_om("cm-arr-1"))
    assert ideal_set(nps.specialize(O)) == {"x1*x2", "x1*x3", "x2*x3", "x4"}
    xy = sr.SquarefreeMonomialIdeal((X(1), Y(1), X(2), Y(2)), [{X(1)}, {X(2)}])
    assert ideal_set(nps.specialize(xy)) == {"x1", "x2"}


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_specialized_generators_are_positive_supports(name):
    # Obar is generated by x_{F - g} over supports F of cocircuits through g
    m = affine_om(name)
    supports = {frozenset(X(e) for e, p in zip(m.elements, m.element_positions) if c[p])
                for c in m.om.cocircuits if c[m.gpos]}
    expected = sr.SquarefreeMonomialIdeal(nps.x_variables(m), supports)
    assert nps.specialize(nps.matroid_ideal(m)).generators == expected.generators


def test_coloop_and_loop_conventions():
    central = om_from_vectors(Arrangement(((1, 0), (2, 0)), (0, 1)))
    assert nps.matroid_ideal(central).is_unit
    loop = om_from_vectors(Arrangement(((1, 0),), (0, 0)), allow_loop_g=True)
    assert nps.matroid_ideal(loop).is_zero
    with pytest.raises(ValueError):
        nps.cellular_resolution(loop)
    with pytest.raises(ValueError):
        nps.genpos_report(central)


def test_betti_cm_arr_1():
    res = nps.cellular_resolution(affine_om("cm-arr-1"))
    assert res.betti == (1, 4, 5, 2)
    # Auslander-Buchsbaum: projective dimension 3 = 2n - dim(S~/O) for a CM quotient
    assert len(res.betti) - 1 == 2 * 4 - 5


def test_single_bounded_vertex():
    # two crossing lines alone are central (g a coloop); a third hyperplane
    # parallel to g has no affine points but breaks centrality
    m = om_from_vectors(Arrangement(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 1)))
    assert not m.g_is_coloop
    res = nps.cellular_resolution(m)
    assert res.betti == (1, 1)
    assert ideal_set(res.ideal) == {"x3"}
    (v,) = m.bounded
    assert nps.canonical_ideal(m).generators == {nps.n_monomial(m, v)}


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_resolution_faithful_and_acyclic(name):
    res = nps.cellular_resolution(affine_om(name))
    assert nps.check_faithful(res)
    for p in (0, 2):
        assert nps.check_acyclic(res, p)
    assert res.betti[1:] == res.complex.f_vector()


def test_adversarial_labels():
    res = nps.cellular_resolution(affine_om("nongp-cm-arr"))
    x = res.complex
    # two vertices sharing a label
    labels = list(x.labels)
    labels[2] = labels[1]
    bad = replace(res, complex=x.with_labels(labels))
    assert not nps.check_faithful(bad)
    # an edge label larger than the join of its endpoints disconnects X_{<=a}
    labels = list(x.labels)
    labels[3] = labels[3] | {Y(3)}
    bad = replace(res, complex=x.with_labels(labels))
    assert not nps.check_acyclic(bad)
    assert nps.acyclicity_witness(bad) == labels[1] | labels[2]


def test_cm_cellular_examples():
    assert nps.is_cm_cellular(nps.cellular_resolution(affine_om("cm-arr-1")))
    assert nps.is_cm_cellular(nps.cellular_resolution(affine_om("nongp-cm-arr")))
    square = nps.cellular_resolution(affine_om("square"))
    assert not nps.is_cm_cellular(square)
    assert nps.cm_cellular_witness(square) is not None


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_cm_criteria_agree(name):
    m = affine_om(name)
    res = nps.cellular_resolution(m)
    O = res.ideal
    v = nps.is_cm_cellular(res, 2)
    assert sr.is_cm_reisner(sr.complex_from_ideal(O), 2) == v
    assert sr.is_cm_reisner(sr.complex_from_ideal(nps.specialize(O)), 2) == v


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_genpos_report_consistency(name):
    rep = nps.genpos_report(affine_om(name))
    assert not rep.findings
    if rep.full_rank:
        assert rep.agree()
    if rep.full_rank and rep.conditions["c2"]:
        assert rep.measured_dims == rep.dims


def test_genpos_report_without_full_rank():
    rep = nps.genpos_report(affine_om("nongp-cm-arr"))
    assert rep.conditions["c1"] is False
    assert rep.conditions["c2"] and rep.conditions["c3"]
    assert not rep.full_rank
    # quotient by (x1, x2) in six variables
    assert rep.measured_dims == (4, 1)
    assert rep.dims == (3, 0)


def test_matroid_complex_and_contractions():
    m = affine_om("cm-arr-1")
    dbar = sr.complex_from_ideal(nps.specialize(nps.matroid_ideal(m)))
    assert sr.is_matroid_complex(dbar)
    rb = om.bounded_rank(m)
    for e, p in zip(m.elements, m.element_positions):
        if any(lam[p] for lam in m.bounded):
            mc = om.contract_affine(m, [e])
            assert nps.is_cm(mc)
            assert om.bounded_rank(mc) < rb


def test_canonical_ideal_generator_counts():
    assert len(nps.canonical_ideal(affine_om("cm-arr-1")).generators) == 2
    assert len(nps.canonical_ideal(affine_om("four-generic-lines")).generators) == 3


@pytest.mark.parametrize("name", ["cm-arr-1", "four-generic-lines"])
def test_canonical_degree_table(name):
    t = nps.canonical_degree_table(affine_om(name))
    assert t.cm
    assert t.equality_holds() and t.at_most_one() and t.facets_give_one()
    assert t.cells_match()
    assert not t.n_outside_failures and not t.n_boundary_failures


def test_canonical_degree_table_non_cm_still_produced():
    t = nps.canonical_degree_table(affine_om("square"))
    assert not t.cm
    assert not t.equality_holds()


def test_regularity_precondition():
    assert nps.regularity_precondition_check(nps.matroid_ideal(affine_om("cm-arr-1")))
    vs = (X(1), Y(1))
    v = nps.regularity_precondition_check(sr.SquarefreeMonomialIdeal(vs, [{X(1), Y(1)}]))
    assert not v and v.axiom == "1"
    v = nps.regularity_precondition_check(sr.SquarefreeMonomialIdeal(vs, [{X(1)}, {Y(1)}]))
    assert not v and v.axiom == "2"


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_every_fixture_passes_precondition(name):
    assert nps.regularity_precondition_check(nps.matroid_ideal(affine_om(name)))


def test_manifold_report_cm_arr_1():
    m = affine_om("cm-arr-1")
    rep = nps.manifold_report(m)
    assert rep.cm and rep.full_rank and not rep.findings
    st = cw.strata(m.bounded, m.om.covectors)
    for c in rep.cells:
        if c["combinatorial_boundary"]:
            assert c["pattern"] == "boundary" and c["cohomology"] == {}
        else:
            assert c["cohomology"] == {"2": "Z"}
    assert sum(not c["combinatorial_boundary"] for c in rep.cells) == len(m.bounded) - len(st.boundary)
    O = nps.matroid_ideal(m)
    delta = sr.complex_from_ideal(O)
    assert delta.dim == 4
    ok, boundary = sr.is_homology_manifold(delta)
    assert ok and boundary
    bd = nps.boundary_complex(m)
    assert bd.dim == 3 and sr.is_homology_sphere(bd)


def test_rank_two_fixture_is_a_ball():
    # three points on the affine line: X(B_M) is a path
    m = om_from_vectors(Arrangement(((1, 0), (1, -1), (1, -2)), (0, 1)))
    assert m.rank == 2
    rep = nps.manifold_report(m)
    assert rep.cm and not rep.findings
    res = nps.cellular_resolution(m)
    h = cw.chain_cochains(res.complex).integral_cohomology()
    assert all(g.is_zero() for g in h.values())
    assert rep.boundary_x_manifold and rep.boundary_x_sphere


def test_report_json_schema():
    rep = nps.build_report(affine_om("cm-arr-1"), "cm-arr-1")
    assert set(rep) == {"input", "rank", "full_rank", "ideal", "betti", "genpos", "manifold", "findings"}
    assert set(rep["genpos"]) >= {"c1", "c2", "c3", "c4", "c5", "dims"}
    assert set(rep["manifold"]) >= {"cells", "delta_manifold", "boundary_sphere"}
    assert rep["findings"] == []
