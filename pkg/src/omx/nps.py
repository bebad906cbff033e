"""Matroid ideals of affine oriented matroids and the checks built on them.

Variables of the ring are pairs ``("x", e)`` / ``("y", e)`` for the non-g
elements ``e``, ordered ``x_1, y_1, x_2, y_2, ...``.  A squarefree monomial
or degree is the frozenset of its variables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from . import cw, om, sr
from . import signvec as sv
from .cw import CellComplex
from .om import AffineOM
from .signvec import Signs
from .sr import FIELDS, SimplicialComplex, SquarefreeMonomialIdeal


def variables(m: AffineOM) -> tuple:
    return tuple(v for e in m.elements for v in (("x", e), ("y", e)))


def x_variables(m: AffineOM) -> tuple:
    return tuple(("x", e) for e in m.elements)


def monomial(m: AffineOM, lam: Signs) -> frozenset:
    """Support of ``m_lam``: x_i where lam is +, y_i where lam is -, g ignored."""
    out = set()
    for e, p in zip(m.elements, m.element_positions):
        if lam[p] == 1:
            out.add(("x", e))
        elif lam[p] == -1:
            out.add(("y", e))
    return frozenset(out)


def n_monomial(m: AffineOM, lam: Signs) -> frozenset:
    """Support of ``n_lam = prod(x_i y_i) / m_lam``."""
    return frozenset(variables(m)) - monomial(m, lam)


def matroid_ideal(m: AffineOM) -> SquarefreeMonomialIdeal:
    """Generated by ``m_lam`` over positive cocircuits; unit ideal iff g is a
    coloop, zero ideal if g is a (permitted) loop."""
    if m.g_is_loop:
        return SquarefreeMonomialIdeal(variables(m))
    return SquarefreeMonomialIdeal(variables(m), {monomial(m, c) for c in m.positive_cocircuits})


def specialize(i: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
    """Image under ``y_i -> x_i``."""
    def image(v):
        return ("x", v[1]) if isinstance(v, tuple) and v[0] == "y" else v

    xs = []
    for v in i.variables:
        w = image(v)
        if w not in xs:
            xs.append(w)
    return SquarefreeMonomialIdeal(tuple(xs), {frozenset(map(image, g)) for g in i.generators})


# the cellular resolution -----------------------------------------------------

@dataclass(frozen=True)
class LabeledResolution:
    complex: CellComplex
    ideal: SquarefreeMonomialIdeal

    @property
    def betti(self) -> tuple[int, ...]:
        """Rank of F_i = number of (i-1)-cells, starting with F_0 for the empty cell."""
        x = self.complex
        return tuple(len(x.cells(k)) for k in range(-1, x.dim + 1))

    @property
    def dim(self) -> int:
        return self.complex.dim

    def degree_universe(self) -> frozenset:
        return frozenset().union(*self.complex.labels)


def cellular_resolution(m: AffineOM) -> LabeledResolution:
    B = m.bounded
    if not B:
        raise ValueError("empty bounded complex")
    x = cw.complex_from_poset(B, bottom=sv.zero(len(m.ground)))
    x = cw.incidence_function(x)
    x = x.with_labels([monomial(m, k) for k in x.keys])
    return LabeledResolution(x, matroid_ideal(m))


def faithful_witness(r: LabeledResolution):
    """A pair of cells violating faithfulness, or None."""
    x = r.complex
    seen = {}
    for s, lab in enumerate(x.labels):
        if lab in seen:
            return (seen[lab], s)
        seen[lab] = s
    for s in range(len(x)):
        down = x.down(s)
        for t in range(len(x)):
            if x.labels[t] < x.labels[s] and t not in down:
                return (s, t)
    return None


def check_faithful(r: LabeledResolution) -> bool:
    """Labels injective, and a larger label forces a larger cell."""
    return faithful_witness(r) is None


def _subsets(universe: Iterable):
    u = sorted(universe, key=sr.var_name)
    for k in range(len(u) + 1):
        for c in itertools.combinations(u, k):
            yield frozenset(c)


def lower_subcomplexes(r: LabeledResolution) -> dict[frozenset, frozenset]:
    """Distinct ``X_{<=a}`` over squarefree degrees a, keyed by cell set, with one degree each."""
    x = r.complex
    out: dict[frozenset, frozenset] = {}
    for a in _subsets(r.degree_universe()):
        cells = frozenset(i for i, lab in enumerate(x.labels) if lab <= a)
        out.setdefault(cells, a)
    return out


def upper_filters(r: LabeledResolution) -> dict[frozenset, frozenset]:
    """Distinct ``X^{>=a}`` over a in {0,1}^{2n}, keyed by cell set, with one degree each.

    Degrees using a variable outside every label give the empty filter, so
    only subsets of the label universe are enumerated.
    """
    x = r.complex
    out: dict[frozenset, frozenset] = {}
    for a in _subsets(r.degree_universe()):
        out.setdefault(cw.order_filter(x, degree=a), a)
    return out


def acyclicity_witness(r: LabeledResolution, char: int = 0):
    x = r.complex
    for cells, a in lower_subcomplexes(r).items():
        if cells == {0}:
            continue
        sub = cw.subcomplex(x, cells)
        if any(cw.chain_cochains(sub).cohomology(char).values()):
            return a
    return None


def check_acyclic(r: LabeledResolution, char: int = 0) -> bool:
    """Every nonempty ``X_{<=a}`` has vanishing reduced homology."""
    return acyclicity_witness(r, char) is None


def cm_cellular_witnesses(r: LabeledResolution, chars: Iterable[int] = FIELDS) -> dict:
    """Per characteristic, a degree a where ``C(X^{>=a})`` has cohomology
    outside degree dim X, or None."""
    x = r.complex
    top = x.dim
    out = {p: None for p in chars}
    pending = list(out)
    for Y, a in upper_filters(r).items():
        c = cw.cochain_complex(Y, x, check=False)
        for p in list(pending):
            if any(v for d, v in c.cohomology(p).items() if d != top):
                out[p] = a
                pending.remove(p)
        if not pending:
            break
    return out


def cm_cellular_witness(r: LabeledResolution, char: int = 0):
    return cm_cellular_witnesses(r, (char,))[char]


def is_cm_cellular(r: LabeledResolution, char: int = 0) -> bool:
    """Cohomology of every ``C(X^{>=a})`` concentrated in degree dim X."""
    return cm_cellular_witness(r, char) is None


# general position versus Cohen-Macaulayness ---------------------------------

@dataclass
class GenposReport:
    conditions: dict[str, bool]
    full_rank: bool
    rank: int
    n: int
    dims: tuple[int, int]
    measured_dims: tuple[int, int]
    cm_by_field: dict[str, dict[int, bool]]
    witnesses: dict[str, object] = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)

    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1

    def to_json(self) -> dict:
        d = {k: self.conditions[k] for k in ("c1", "c2", "c3", "c4", "c5")}
        d["full_rank"] = self.full_rank
        d["dims"] = list(self.dims)
        d["measured_dims"] = list(self.measured_dims)
        return d


def genpos_report(m: AffineOM, fields: Iterable[int] = FIELDS) -> GenposReport:
    """Evaluate the five conditions of the general-position characterization
    by independent routes; disagreements under full rank become findings."""
    if m.g_is_coloop:
        raise ValueError("g is a coloop")
    fields = tuple(fields)
    n, r = m.n, m.rank
    findings: list[str] = []
    witnesses: dict[str, object] = {}

    c1 = om.is_general_position(m)

    O = matroid_ideal(m)
    res = cellular_resolution(m)
    delta = sr.complex_from_ideal(O)
    cm_cell = {p: w is None for p, w in cm_cellular_witnesses(res, fields).items()}
    cm_reis = {p: w is None for p, w in sr.reisner_witnesses(delta, fields).items()}
    obar = specialize(O)
    dbar = sr.complex_from_ideal(obar)
    cm_bar = {p: w is None for p, w in sr.reisner_witnesses(dbar, fields).items()}
    c2 = cm_cell[fields[0]]
    c3 = cm_bar[fields[0]]
    if len(set(cm_cell.values()) | set(cm_reis.values())) > 1:
        findings.append(f"CM verdicts for S~/O_M differ: cellular {cm_cell}, Reisner {cm_reis}")
    if len(set(cm_bar.values())) > 1:
        findings.append(f"CM verdicts for S/Obar_M differ across fields: {cm_bar}")
    if not c2:
        witnesses["c2"] = sorted(map(sr.var_name, cm_cellular_witness(res, fields[0])))

    pos = om.underlying_restricted_circuits(m, positive_only=True)
    full = om.underlying_restricted_circuits(m, positive_only=False)
    axioms = om.check_circuit_axioms(pos)
    mrank = om.matroid_rank_from_circuits(pos) if axioms else None
    c4 = bool(axioms) and mrank == n - r
    if not axioms:
        witnesses["c4"] = f"{axioms.axiom}: {axioms.message}"
    elif not c4:
        witnesses["c4"] = f"matroid rank {mrank} != n - r = {n - r}"
    c5 = pos.circuits == full.circuits
    if not c5:
        witnesses["c5"] = sorted(sorted(map(str, c)) for c in full.circuits ^ pos.circuits)

    full_rank = om.is_full_rank(m)
    conds = {"c1": c1, "c2": c2, "c3": c3, "c4": c4, "c5": c5}
    if full_rank and len(set(conds.values())) > 1:
        findings.append(f"full rank but conditions disagree: {conds}")
    dims = (2 * n - r, n - r)
    measured = (delta.dim + 1, dbar.dim + 1)
    if full_rank and c2 and measured != dims:
        findings.append(f"Krull dimensions {measured} differ from (2n-r, n-r) = {dims}")
    return GenposReport(conds, full_rank, r, n, dims, measured,
                        {"cellular": cm_cell, "reisner": cm_reis, "specialized": cm_bar},
                        witnesses, findings)


def is_cm(m: AffineOM, char: int = 2) -> bool:
    """Cohen-Macaulayness of S~/O_M via the cellular criterion (unit ideal counts as CM)."""
    if m.g_is_loop:
        return True
    if m.g_is_coloop:
        return True
    return is_cm_cellular(cellular_resolution(m), char)


# canonical ideal ------------------------------------------------------------

def bounded_topes(m: AffineOM) -> frozenset:
    return cw.strata(m.bounded, m.om.covectors).topes


def canonical_ideal(m: AffineOM) -> SquarefreeMonomialIdeal:
    """``J_M = (n_lam : lam a tope of B_M)``, minimal generators of its image mod O_M."""
    if not m.bounded:
        raise ValueError("empty bounded complex")
    O = matroid_ideal(m)
    gens = {n_monomial(m, t) for t in bounded_topes(m)}
    return SquarefreeMonomialIdeal(variables(m), {g for g in gens if g not in O})


@dataclass
class CanonicalTable:
    """Degreewise comparison of J_M with the top link cohomology.

    ``rows`` has one entry ``(F, h, member)`` per face F of the Stanley-Reisner
    complex, with ``h = dim H^{d-#F}(lk F)`` and ``member`` whether ``m_F`` is
    nonzero in ``J_M`` modulo O_M.  ``cells`` has ``(lam, h, member)`` per cell
    of X(B_M), with ``h = dim H^{dim X}(C(X^{>=lam}))`` and ``member`` for
    ``n_lam``.
    """

    dim_delta: int
    rows: list[tuple[frozenset, int, bool]]
    cells: list[tuple[Signs, int, bool]]
    facets: frozenset
    cm: bool
    n_outside_failures: list[Signs]
    n_boundary_failures: list[Signs]

    def equality_holds(self) -> bool:
        return all(h == int(mem) for _, h, mem in self.rows)

    def at_most_one(self) -> bool:
        return all(h <= 1 for _, h, _ in self.rows)

    def facets_give_one(self) -> bool:
        return all(mem and h == 1 for f, h, mem in self.rows if f in self.facets)

    def cells_match(self) -> bool:
        return all(h == int(mem) for _, h, mem in self.cells)


def in_quotient(J: SquarefreeMonomialIdeal, O: SquarefreeMonomialIdeal, mono: frozenset) -> bool:
    """Whether the monomial is a nonzero element of ``(J + O) / O``."""
    return J.contains(mono) and not O.contains(mono)


def canonical_degree_table(m: AffineOM, char: int = 0) -> CanonicalTable:
    """Compare ``dim H^{d-#F}(lk F)`` with membership of ``m_F`` in ``J_M``
    for every face F of the Stanley-Reisner complex of O_M, and the top
    local cohomology of each cell with the degree of ``n_lam``.

    Also lists the covectors where ``n_mu`` fails to lie in O_M, for mu in
    ``L+ - B_M`` and for boundary cells of B_M (both lists are empty when the
    quotient is Cohen-Macaulay and of full rank).
    """
    O = matroid_ideal(m)
    J = canonical_ideal(m)
    delta = sr.complex_from_ideal(O)
    d = delta.dim
    rows = []
    for F in sorted(delta.faces, key=lambda f: (len(f), delta.key(f))):
        lk = sr.link(delta, F)
        h = sr.reduced_cohomology(lk, char).get(d - len(F), 0)
        rows.append((F, h, in_quotient(J, O, F)))
    x = cellular_resolution(m).complex
    cells = []
    for s in range(1, len(x)):
        h = cw.cochain_complex(x.up(s), x, check=False).cohomology(char).get(x.dim, 0)
        cells.append((x.keys[s], h, in_quotient(J, O, n_monomial(m, x.keys[s]))))
    outside = [mu for mu in sorted(m.positive_part - m.bounded) if n_monomial(m, mu) not in O]
    st = cw.strata(m.bounded, m.om.covectors)
    bnd = [lam for lam in sorted(st.boundary) if n_monomial(m, lam) not in O]
    return CanonicalTable(d, rows, cells, delta.facets, sr.is_cm_reisner(delta, char), outside, bnd)


# manifold diagnostics -------------------------------------------------------

@dataclass
class ManifoldReport:
    cm: bool
    full_rank: bool
    dim: int
    cells: list[dict]
    interior_pattern: bool
    boundary_match: bool
    x_manifold: bool
    boundary_x_manifold: bool
    boundary_x_sphere: bool
    delta_manifold: bool
    delta_boundary_matches_j: bool
    boundary_sphere: bool
    findings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"cm": self.cm, "full_rank": self.full_rank, "cells": self.cells, "interior_pattern": self.interior_pattern,
                "boundary_match": self.boundary_match, "x_manifold": self.x_manifold,
                "boundary_x_manifold": self.boundary_x_manifold,
                "boundary_x_sphere": self.boundary_x_sphere,
                "delta_manifold": self.delta_manifold,
                "delta_boundary_matches_j": self.delta_boundary_matches_j,
                "boundary_sphere": self.boundary_sphere}


def _local_pattern(groups: dict, top: int) -> str:
    """'interior' (Z in top degree only), 'boundary' (all zero) or 'other'."""
    if all(g.is_zero() for g in groups.values()):
        return "boundary"
    if groups.get(top) is not None and groups[top].is_z() and all(
            g.is_zero() for d, g in groups.items() if d != top):
        return "interior"
    return "other"


def boundary_complex(m: AffineOM, J: SquarefreeMonomialIdeal | None = None) -> SimplicialComplex:
    """Faces F of the Stanley-Reisner complex with ``m_F`` outside ``J_M``."""
    O = matroid_ideal(m)
    J = canonical_ideal(m) if J is None else J
    delta = sr.complex_from_ideal(O)
    faces = [F for F in delta.faces if not J.contains(F)]
    return SimplicialComplex(delta.vertices, faces)


def manifold_report(m: AffineOM) -> ManifoldReport:
    """Integral homology-manifold diagnostics for X(B_M) and the
    Stanley-Reisner complex of O_M.

    The expected patterns are only asserted (as findings) for Cohen-Macaulay
    inputs of full rank; otherwise the tables are reported as they are.
    """
    res = cellular_resolution(m)
    x = res.complex
    top = x.dim
    cm = is_cm_cellular(res, 2)
    st = cw.strata(m.bounded, m.om.covectors)
    cells = []
    pattern_ok = True
    match = True
    for s in range(1, len(x)):
        groups = cw.cochain_complex(x.up(s), x, check=False).integral_cohomology()
        pat = _local_pattern(groups, top)
        comb = x.keys[s] in st.boundary
        cells.append({"cell": sv.to_str(x.keys[s]), "dim": x.dims[s],
                      "cohomology": {str(d): str(g) for d, g in groups.items() if not g.is_zero()},
                      "pattern": pat, "combinatorial_boundary": comb})
        if pat == "other":
            pattern_ok = False
        elif (pat == "boundary") != comb:
            match = False
    x_manifold = pattern_ok

    bcells = {0} | {x.index[k] for k in st.boundary}
    bx = cw.subcomplex(x, bcells)
    bx_manifold = True
    for s in range(1, len(bx)):
        groups = cw.cochain_complex(bx.up(s), bx, check=False).integral_cohomology()
        if _local_pattern(groups, top - 1) != "interior":
            bx_manifold = False
            break
    # an empty boundary (X a point) is the (-1)-sphere: Z in degree -1
    glob = cw.chain_cochains(bx).integral_cohomology()
    bx_sphere = _local_pattern(glob, top - 1) == "interior"

    O = matroid_ideal(m)
    delta = sr.complex_from_ideal(O)
    delta_ok, delta_boundary = sr.is_homology_manifold(delta)
    J = canonical_ideal(m)
    bdelta = boundary_complex(m, J)
    jmatch = set(delta_boundary) == {F for F in bdelta.faces if F}
    sphere = sr.is_homology_sphere(bdelta)

    full_rank = om.is_full_rank(m)
    findings = []
    if cm and full_rank:
        if not pattern_ok:
            findings.append("local cohomology of X(B_M) is not 0 or Z in the top degree")
        if not match:
            findings.append("cohomological boundary differs from the combinatorial boundary")
        if not bx_manifold:
            findings.append("boundary of X(B_M) is not a homology manifold without boundary")
        if not delta_ok:
            findings.append("Stanley-Reisner complex is not a homology manifold over Z")
        if not jmatch:
            findings.append("manifold boundary of the Stanley-Reisner complex differs from {F : m_F not in J_M}")
        if not sphere:
            findings.append("boundary of the Stanley-Reisner complex is not a homology sphere")
    return ManifoldReport(cm, full_rank, top, cells, pattern_ok, match, x_manifold, bx_manifold, bx_sphere,
                          delta_ok, jmatch, sphere, findings)


# regularity precondition ----------------------------------------------------

def regularity_precondition_check(i: SquarefreeMonomialIdeal) -> om.Verdict:
    """No generator divisible by ``x_i y_i``, and every facet of the
    Stanley-Reisner complex meets ``{x_i, y_i}`` for each i."""
    pairs = [(("x", v[1]), v) for v in i.variables
             if isinstance(v, tuple) and v[0] == "y" and ("x", v[1]) in i.variables]
    for g in i.sorted_generators():
        for xv, yv in pairs:
            if xv in g and yv in g:
                return om.Verdict(False, "1", (i.monomial_str(g),), "generator divisible by x_i*y_i")
    d = sr.complex_from_ideal(i)
    for f in d.facets:
        for xv, yv in pairs:
            if xv not in f and yv not in f:
                return om.Verdict(False, "2", (i.monomial_str(f), sr.var_name(xv)),
                                  "associated prime contains x_i and y_i")
    return om.PASS


# report -----------------------------------------------------------------------

def build_report(m: AffineOM, name: str, fields: Iterable[int] = FIELDS) -> dict:
    """The JSON report: ideal, Betti ranks, the five conditions and manifold tables."""
    O = matroid_ideal(m)
    out = {"input": name, "rank": m.rank, "full_rank": om.is_full_rank(m),
           "ideal": O.to_strings(), "betti": None, "genpos": None, "manifold": None,
           "findings": []}
    if not m.bounded:
        return out
    res = cellular_resolution(m)
    out["betti"] = list(res.betti)
    if not check_faithful(res):
        out["findings"].append("labeling is not faithful")
    if not check_acyclic(res):
        out["findings"].append("labeled complex is not acyclic")
    if not m.g_is_coloop:
        gp = genpos_report(m, fields)
        out["genpos"] = gp.to_json()
        out["findings"] += gp.findings
        mr = manifold_report(m)
        out["manifold"] = {"cells": mr.cells, "delta_manifold": mr.delta_manifold,
                           "boundary_sphere": mr.boundary_sphere,
                           "boundary_x_sphere": mr.boundary_x_sphere}
        out["findings"] += mr.findings
    return out
