"""Oriented matroids given by covectors, affine oriented matroids, and
ordinary-matroid circuit families.

Covectors are raw sign tuples (see :mod:`omx.signvec`) indexed by position
in the ordered ground tuple.  Element ids may be any hashables.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from . import signvec as sv
from .signvec import Signs


@dataclass(frozen=True)
class Verdict:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def check_covector_axioms(vectors: Iterable[Signs], k: int | None = None) -> Verdict:
    """Check L0-L3 by exhaustive search; report the first violation."""
    L = set(vectors)
    lengths = {len(v) for v in L}
    if len(lengths) > 1 or (k is not None and lengths - {k}):
        raise ValueError("sign vectors on different ground sets")
    if k is None:
        k = lengths.pop() if lengths else 0
    z = sv.zero(k)
    if z not in L:
        return Verdict(False, "L0", (), "zero vector missing")
    ordered = sorted(L)
    for l in ordered:
        if sv.neg(l) not in L:
            return Verdict(False, "L1", (l,), f"opposite of {sv.to_str(l)} missing")
    for l in ordered:
        for m in ordered:
            c = sv.compose(l, m)
            if c not in L:
                return Verdict(False, "L2", (l, m), f"{sv.to_str(l)} o {sv.to_str(m)} missing")
    for i, l in enumerate(ordered):
        for m in ordered[i + 1:]:
            sep = sv.separation(l, m)
            if not sep:
                continue
            lm = sv.compose(l, m)
            for e in sorted(sep):
                if not _has_eliminant(L, lm, sep, e):
                    return Verdict(False, "L3", (l, m, e),
                                   f"no elimination of {sv.to_str(l)}, {sv.to_str(m)} at {e}")
    return PASS


def _has_eliminant(L: set, lm: Signs, sep: frozenset, e: int) -> bool:
    free = sorted(sep - {e})
    if 3 ** len(free) <= len(L):
        base = list(lm)
        base[e] = 0
        for vals in itertools.product((-1, 0, 1), repeat=len(free)):
            for pos, v in zip(free, vals):
                base[pos] = v
            if tuple(base) in L:
                return True
        return False
    fixed = [f for f in range(len(lm)) if f not in sep]
    return any(n[e] == 0 and all(n[f] == lm[f] for f in fixed) for n in L)


def cocircuits(L: Iterable[Signs]) -> frozenset[Signs]:
    """Support-minimal nonzero covectors."""
    return frozenset(sv.support_minimal(v for v in L if any(v)))


def cocircuits_by_order(L: Iterable[Signs]) -> frozenset[Signs]:
    """Nonzero covectors minimal in the conformal order (same set as :func:`cocircuits`)."""
    nz = [v for v in set(L) if any(v)]
    return frozenset(v for v in nz if not any(u != v and sv.leq(u, v) for u in nz))


def span_from_cocircuits(C: Iterable[Signs], k: int | None = None, check: bool = True) -> frozenset[Signs]:
    """Zero vector plus all compositions of cocircuits.

    Raises ValueError if ``check`` is set and the closure violates the
    covector axioms (the input was not a cocircuit set).
    """
    C = sorted(set(C))
    if k is None:
        if not C:
            raise ValueError("ground size needed for an empty cocircuit set")
        k = len(C[0])
    if any(len(c) != k for c in C):
        raise ValueError("sign vectors on different ground sets")
    z = sv.zero(k)
    seen = {z}
    todo = [z]
    while todo:
        x = todo.pop()
        for c in C:
            y = sv.compose(x, c)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    if check:
        verdict = check_covector_axioms(seen, k)
        if not verdict:
            raise ValueError(f"cocircuit closure is not a covector set: {verdict.message}")
    return frozenset(seen)


def chain_rank(P: Iterable[Signs]) -> int:
    """Number of elements in a longest chain of ``P`` under the conformal order."""
    P = sorted(set(P), key=lambda v: sum(1 for a in v if a))
    height: dict[Signs, int] = {}
    for x in P:
        h = 0
        for y, hy in height.items():
            if hy > h and sv.leq(y, x) and y != x:
                h = hy
        height[x] = h + 1
    return max(height.values(), default=0)


class OrientedMatroid:
    """An oriented matroid on an ordered ground tuple, stored by its covectors."""

    def __init__(self, ground: Sequence[Hashable], covectors: Iterable[Signs], check: bool = False):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground elements")
        self.covectors = frozenset(covectors)
        if any(len(v) != len(self.ground) for v in self.covectors):
            raise ValueError("covector length does not match ground set")
        if check:
            verdict = check_covector_axioms(self.covectors, len(self.ground))
            if not verdict:
                raise ValueError(f"covector axioms fail: {verdict.message}")

    @classmethod
    def from_cocircuits(cls, ground, C, check: bool = True) -> "OrientedMatroid":
        ground = tuple(ground)
        return cls(ground, span_from_cocircuits(C, len(ground), check=check))

    def __repr__(self):
        return f"OrientedMatroid(ground={self.ground!r}, |L|={len(self.covectors)})"

    def __eq__(self, other):
        return (isinstance(other, OrientedMatroid) and self.ground == other.ground
                and self.covectors == other.covectors)

    def __hash__(self):
        return hash((self.ground, self.covectors))

    def pos(self, e: Hashable) -> int:
        return self.ground.index(e)

    def positions(self, elements: Iterable[Hashable]) -> list[int]:
        out = []
        for e in elements:
            if e not in self.ground:
                raise ValueError(f"{e!r} is not a ground element")
            out.append(self.ground.index(e))
        return out

    @cached_property
    def cocircuits(self) -> frozenset[Signs]:
        return cocircuits(self.covectors)

    @cached_property
    def rank(self) -> int:
        return chain_rank(v for v in self.covectors if any(v))

    @cached_property
    def loops(self) -> frozenset:
        return frozenset(e for i, e in enumerate(self.ground)
                         if all(v[i] == 0 for v in self.covectors))

    @cached_property
    def coloops(self) -> frozenset:
        out = set()
        for c in self.cocircuits:
            s = sv.support(c)
            if len(s) == 1:
                out.add(self.ground[next(iter(s))])
        return frozenset(out)

    def to_json(self, g: Hashable | None = None) -> dict:
        d = {"elements": list(self.ground)}
        if g is not None:
            d["g"] = g
        d["cocircuits"] = sorted(sv.to_str(c) for c in self.cocircuits)
        return d


def rank(m: OrientedMatroid) -> int:
    return m.rank


def restricted_cocircuits(C: Iterable[Signs], positions: Sequence[int]) -> frozenset[Signs]:
    """``Min{c|_F : c in C, F meets supp(c)}`` with F given by positions."""
    rs = [sv.restrict(c, positions) for c in C]
    return frozenset(sv.support_minimal(r for r in rs if any(r)))


def restriction(m: OrientedMatroid, elements: Iterable[Hashable]) -> OrientedMatroid:
    if isinstance(elements, (set, frozenset)):
        missing = elements - set(m.ground)
        if missing:
            raise ValueError(f"{sorted(map(str, missing))} not in the ground set")
        elements = [e for e in m.ground if e in elements]
    else:
        elements = list(elements)
    pos = m.positions(elements)
    return OrientedMatroid(elements, {sv.restrict(v, pos) for v in m.covectors})


def contraction(m: OrientedMatroid, elements: Iterable[Hashable]) -> OrientedMatroid:
    drop = set(m.positions(elements))
    keep = [i for i in range(len(m.ground)) if i not in drop]
    cov = {sv.restrict(v, keep) for v in m.covectors if all(v[i] == 0 for i in drop)}
    return OrientedMatroid([m.ground[i] for i in keep], cov)


class AffineOM:
    """An oriented matroid with a distinguished element ``g``.

    ``g`` must not be a loop unless ``allow_loop_g`` is set; a looped ``g``
    gets an empty bounded complex and a zero matroid ideal.
    """

    def __init__(self, om: OrientedMatroid, g: Hashable, allow_loop_g: bool = False):
        if g not in om.ground:
            raise ValueError(f"g={g!r} is not a ground element")
        self.om = om
        self.g = g
        self.gpos = om.pos(g)
        self.allow_loop_g = allow_loop_g
        if self.g_is_loop and not allow_loop_g:
            raise ValueError("g is a loop")

    def __repr__(self):
        return f"AffineOM(ground={self.om.ground!r}, g={self.g!r})"

    @property
    def ground(self):
        return self.om.ground

    @cached_property
    def elements(self) -> tuple:
        """The non-g elements, in ground order."""
        return tuple(e for e in self.om.ground if e != self.g)

    @cached_property
    def element_positions(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.om.ground)) if i != self.gpos)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.om.rank

    @property
    def g_is_loop(self) -> bool:
        return self.g in self.om.loops

    @property
    def g_is_coloop(self) -> bool:
        return self.g in self.om.coloops

    @cached_property
    def positive_part(self) -> frozenset[Signs]:
        return frozenset(v for v in self.om.covectors if v[self.gpos] == 1)

    @cached_property
    def positive_cocircuits(self) -> frozenset[Signs]:
        return frozenset(c for c in self.om.cocircuits if c[self.gpos] == 1)

    @cached_property
    def bounded(self) -> frozenset[Signs]:
        if self.g_is_loop:
            return frozenset()
        g = self.gpos
        zero_cc = [c for c in self.om.cocircuits if c[g] == 0]
        return frozenset(v for v in self.positive_part
                         if not any(sv.leq(c, v) for c in zero_cc))

    def to_json(self) -> dict:
        return self.om.to_json(self.g)


def bounded_complex(m: AffineOM) -> frozenset[Signs]:
    """``{l in L+ : (0, l] is inside L+}``; the single point (0,..,0,+) when g is a coloop."""
    return m.bounded


def bounded_rank(m: AffineOM) -> int:
    """Rank of B_M as a poset (length of a longest chain, so dim X(B_M)); -1 if empty."""
    return chain_rank(m.bounded) - 1


def is_general_position(m: AffineOM, e: Hashable | None = None) -> bool:
    """Whether ``e`` (default ``g``) is in general position."""
    e = m.g if e is None else e
    om = m.om
    epos = om.pos(e)
    if e in om.coloops:
        return False
    rest = [i for i in range(len(om.ground)) if i != epos]
    C = om.cocircuits
    extended = {sv.restrict(c, rest) for c in C if c[epos] != 0}
    return restricted_cocircuits(C, rest) <= extended


def is_full_rank(m: AffineOM) -> bool:
    """Every non-loop element lies in the support of some bounded covector."""
    if not m.bounded:
        return False
    covered = set()
    for v in m.bounded:
        covered |= sv.support(v)
    return all(i in covered for i, e in enumerate(m.ground) if e not in m.om.loops)


@dataclass(frozen=True)
class CircuitFamily:
    elements: tuple
    circuits: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "circuits", frozenset(frozenset(c) for c in self.circuits))
        extra = set().union(*self.circuits) - set(self.elements) if self.circuits else set()
        if extra:
            raise ValueError(f"circuit elements {sorted(map(str, extra))} not in ground set")

    def sorted_circuits(self) -> list[list]:
        order = {e: i for i, e in enumerate(self.elements)}
        return sorted((sorted(c, key=order.__getitem__) for c in self.circuits),
                      key=lambda c: (len(c), [order[e] for e in c]))


def _minimal_sets(sets: Iterable[frozenset]) -> frozenset:
    sets = set(sets)
    return frozenset(s for s in sets if not any(t < s for t in sets))


def underlying_restricted_circuits(m: AffineOM, positive_only: bool) -> CircuitFamily:
    pos = m.element_positions
    if positive_only:
        supps = [sv.support(c) & set(pos) for c in m.positive_cocircuits]
    else:
        supps = [sv.support(c) for c in restricted_cocircuits(m.om.cocircuits, pos)]
        supps = [frozenset(pos[i] for i in s) for s in supps]
    ids = [frozenset(m.ground[i] for i in s) for s in supps]
    return CircuitFamily(m.elements, _minimal_sets(ids))


def check_circuit_axioms(c: CircuitFamily) -> Verdict:
    """Circuit axioms: no empty circuit, antichain, and elimination."""
    circ = list(c.circuits)
    if frozenset() in c.circuits:
        return Verdict(False, "C1", (frozenset(),), "empty set is a circuit")
    for a in circ:
        for b in circ:
            if a < b:
                return Verdict(False, "C2", (a, b), "circuits are not an antichain")
    for i, a in enumerate(circ):
        for b in circ[i + 1:]:
            for e in a & b:
                u = (a | b) - {e}
                if not any(x <= u for x in circ):
                    return Verdict(False, "C3", (a, b, e), "circuit elimination fails")
    return PASS


def matroid_rank_from_circuits(c: CircuitFamily) -> int:
    """Size of a largest subset containing no circuit."""
    idx = {e: i for i, e in enumerate(c.elements)}
    masks = [sum(1 << idx[e] for e in circ) for circ in c.circuits]
    n = len(c.elements)
    for k in range(n, -1, -1):
        for combo in itertools.combinations(range(n), k):
            s = sum(1 << i for i in combo)
            if not any(mk & s == mk for mk in masks):
                return k
    return 0


def contract_affine(m: AffineOM, elements: Iterable[Hashable]) -> AffineOM:
    """Contraction of an affine oriented matroid; g may become a loop."""
    elements = list(elements)
    if m.g in elements:
        raise ValueError("cannot contract g")
    return AffineOM(contraction(m.om, elements), m.g, allow_loop_g=True)


def _element_id(x):
    return x if isinstance(x, (int, str)) else str(x)


def om_from_json(data: dict, allow_loop_g: bool = False) -> OrientedMatroid | AffineOM:
    """Load the OM JSON format; covectors are regenerated from the cocircuits."""
    try:
        ground = [_element_id(e) for e in data["elements"]]
        C = [sv.from_str(s) for s in data["cocircuits"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed OM file: {exc}") from None
    if any(len(c) != len(ground) for c in C):
        raise ValueError("cocircuit length does not match elements")
    om = OrientedMatroid.from_cocircuits(ground, C)
    if om.cocircuits != frozenset(C):
        raise ValueError("listed sign vectors are not the cocircuits of their span")
    if data.get("g") is None:
        return om
    return AffineOM(om, _element_id(data["g"]), allow_loop_g=allow_loop_g)


def load_om(path, allow_loop_g: bool = False):
    with open(path) as fh:
        return om_from_json(json.load(fh), allow_loop_g)
