"""Regular CW complexes presented by their face posets.

Cells are integer indices; cell 0 is the empty cell of dimension -1.
Cells are sorted by (dimension, key), so indices are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from . import exactla, homology
from . import signvec as sv
from .homology import CochainComplex
from .sr import SimplicialComplex


class CellComplex:
    def __init__(self, keys: Sequence[Hashable], dims: Sequence[int], covers: Sequence[Iterable[int]],
                 incidence: dict | None = None, labels: Sequence[frozenset] | None = None):
        self.keys = tuple(keys)
        self.dims = tuple(dims)
        self.covers = tuple(tuple(sorted(c)) for c in covers)
        if not (len(self.keys) == len(self.dims) == len(self.covers)):
            raise ValueError("inconsistent cell data")
        if not self.keys or self.dims[0] != -1:
            raise ValueError("cell 0 must be the empty cell")
        self.incidence = dict(incidence) if incidence is not None else None
        self.labels = tuple(labels) if labels is not None else None
        self.index = {k: i for i, k in enumerate(self.keys)}
        cof: list[list[int]] = [[] for _ in self.keys]
        for s, cs in enumerate(self.covers):
            for t in cs:
                cof[t].append(s)
        self.cofaces = tuple(tuple(c) for c in cof)

    def __len__(self):
        return len(self.keys)

    def __repr__(self):
        return f"CellComplex(f={self.f_vector()})"

    @property
    def dim(self) -> int:
        return max(self.dims)

    def cells(self, k: int | None = None) -> list[int]:
        if k is None:
            return list(range(len(self.keys)))
        return [i for i, d in enumerate(self.dims) if d == k]

    def f_vector(self) -> tuple[int, ...]:
        """Cell counts in dimensions 0..dim (the empty cell excluded)."""
        return tuple(len(self.cells(k)) for k in range(self.dim + 1))

    def _replace(self, **kw) -> "CellComplex":
        args = dict(keys=self.keys, dims=self.dims, covers=self.covers,
                    incidence=self.incidence, labels=self.labels)
        args.update(kw)
        return CellComplex(**args)

    def with_incidence(self, inc: dict) -> "CellComplex":
        return self._replace(incidence=inc)

    def with_labels(self, labels: Sequence[frozenset]) -> "CellComplex":
        if len(labels) != len(self.keys):
            raise ValueError("one label per cell required")
        return self._replace(labels=labels)

    def up(self, i: int) -> frozenset[int]:
        """All cells >= i."""
        seen = {i}
        todo = [i]
        while todo:
            for s in self.cofaces[todo.pop()]:
                if s not in seen:
                    seen.add(s)
                    todo.append(s)
        return frozenset(seen)

    def down(self, i: int) -> frozenset[int]:
        """All cells <= i (the empty cell included)."""
        seen = {i}
        todo = [i]
        while todo:
            for t in self.covers[todo.pop()]:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return frozenset(seen)

    def geq(self, a: int, b: int) -> bool:
        return b in self.down(a)

    def inc(self, s: int, t: int) -> int:
        return self.incidence.get((s, t), 0)


def complex_from_poset(elements: Iterable[Hashable], leq: Callable = sv.leq,
                       bottom: Hashable = None) -> CellComplex:
    """Cell complex of a CW poset given without its least element.

    ``bottom`` is the key recorded for the empty cell.  Raises ValueError if
    the poset (with a least element adjoined) is not graded.
    """
    elems = sorted(set(elements))
    if bottom in elems:
        elems.remove(bottom)
    n = len(elems)
    below = [0] * n
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and leq(b, a):
                below[i] |= 1 << j
    covers = []
    for i in range(n):
        shadow = 0
        m = below[i]
        j = 0
        while m:
            if m & 1:
                shadow |= below[j]
            m >>= 1
            j += 1
        covers.append(below[i] & ~shadow)
    order = sorted(range(n), key=lambda i: bin(below[i]).count("1"))
    dim = [0] * n
    for i in order:
        cs = [j for j in range(n) if covers[i] >> j & 1]
        dim[i] = 1 + max((dim[j] for j in cs), default=-1)
        if any(dim[j] != dim[i] - 1 for j in cs):
            raise ValueError("poset is not graded")
    perm = sorted(range(n), key=lambda i: (dim[i], elems[i]))
    new = {old: k + 1 for k, old in enumerate(perm)}
    keys = [bottom] + [elems[i] for i in perm]
    dims = [-1] + [dim[i] for i in perm]
    cov = [()]
    for i in perm:
        cs = [new[j] for j in range(n) if covers[i] >> j & 1]
        cov.append(tuple(cs) if cs else (0,))
    return CellComplex(keys, dims, cov)


def incidence_function(x: CellComplex) -> CellComplex:
    """Build an incidence function dimension by dimension.

    For each k-cell the coefficients on its facets are a generator of the
    integer kernel of the lower boundary map restricted to those facets,
    i.e. a fundamental cycle of the boundary sphere.  Raises ValueError if
    that kernel is not spanned by a single +-1 vector.
    """
    inc: dict[tuple[int, int], int] = {}
    for v in x.cells(0):
        inc[(v, 0)] = 1
    for k in range(1, x.dim + 1):
        for s in x.cells(k):
            facets = list(x.covers[s])
            rows = sorted({r for t in facets for r in x.covers[t]})
            D = [[inc.get((t, r), 0) for t in facets] for r in rows]
            ker = exactla.kernel_basis(D, ncols=len(facets))
            if len(ker) != 1 or any(abs(c) != 1 for c in ker[0]):
                raise ValueError(f"boundary of cell {x.keys[s]!r} is not a homology sphere")
            for t, c in zip(facets, ker[0]):
                inc[(s, t)] = c
    return x.with_incidence(inc)


def check_incidence(x: CellComplex) -> bool:
    """+-1 exactly on covers, and the boundary squares to zero."""
    if x.incidence is None:
        return False
    covers = {(s, t) for s in range(len(x)) for t in x.covers[s]}
    if any(x.incidence[p] for p in set(x.incidence) - covers):
        return False
    if any(abs(x.incidence.get(p, 0)) != 1 for p in covers):
        return False
    for s in range(len(x)):
        for r in {r for t in x.covers[s] for r in x.covers[t]}:
            if sum(x.inc(s, t) * x.inc(t, r) for t in x.covers[s]) != 0:
                return False
    return True


def reorient(x: CellComplex, cell: int) -> CellComplex:
    """Flip the orientation of one cell (negate its row and column)."""
    inc = {p: (-v if cell in p else v) for p, v in x.incidence.items()}
    return x.with_incidence(inc)


def subcomplex(x: CellComplex, cells: Iterable[int]) -> CellComplex:
    """Restriction to a downward-closed cell set containing the empty cell."""
    keep = sorted(set(cells))
    if not keep or keep[0] != 0:
        raise ValueError("subcomplex must contain the empty cell")
    ks = set(keep)
    if any(t not in ks for s in keep for t in x.covers[s]):
        raise ValueError("cell set is not downward closed")
    new = {old: k for k, old in enumerate(keep)}
    inc = None
    if x.incidence is not None:
        inc = {(new[s], new[t]): v for (s, t), v in x.incidence.items() if s in ks}
    labels = [x.labels[i] for i in keep] if x.labels is not None else None
    return CellComplex([x.keys[i] for i in keep], [x.dims[i] for i in keep],
                       [[new[t] for t in x.covers[i]] for i in keep], inc, labels)


# strata of a bounded complex inside its covector set ---------------------------

@dataclass(frozen=True)
class Strata:
    topes: frozenset
    subtopes: frozenset
    boundary: frozenset


def _strictly_below(a, b) -> bool:
    return a != b and sv.leq(a, b)


def strata(b: Iterable, L: Iterable) -> Strata:
    """Topes (maximal elements), subtopes (covered by a tope) and boundary
    cells (below some covector outside ``b``) of a bounded complex."""
    B = set(b)
    L = set(L)
    topes = {t for t in B if not any(_strictly_below(t, u) for u in B)}
    subtopes = set()
    for s in B:
        for t in topes:
            if _strictly_below(s, t) and not any(
                    _strictly_below(s, u) and _strictly_below(u, t) for u in B):
                subtopes.add(s)
                break
    outside = L - B
    boundary = {s for s in B if any(_strictly_below(s, m) for m in outside)}
    return Strata(frozenset(topes), frozenset(subtopes), frozenset(boundary))


# order filters and cellular cochains -------------------------------------------

def order_filter(x: CellComplex, cell: int | None = None, degree: Iterable | None = None) -> frozenset[int]:
    """``X^{>=cell}`` or ``X^{>=a}`` for a squarefree degree ``a``.

    Labels are squarefree, so a degree is given by its support.
    """
    if (cell is None) == (degree is None):
        raise ValueError("give exactly one of cell, degree")
    if cell is not None:
        return x.up(cell)
    if x.labels is None:
        raise ValueError("complex has no labels")
    a = frozenset(degree)
    return frozenset(i for i, lab in enumerate(x.labels) if a <= lab)


def is_order_filter(x: CellComplex, Y: Iterable[int]) -> bool:
    Y = set(Y)
    return all(s in Y for t in Y for s in x.cofaces[t])


def cochain_complex(Y: Iterable[int], x: CellComplex, check: bool = True) -> CochainComplex:
    """``C^i(Y)`` spanned by the i-cells of Y, ``d(s) = sum [t:s] t``; degrees -1..dim X."""
    if x.incidence is None:
        raise ValueError("complex has no incidence function")
    Y = set(Y)
    if check and not is_order_filter(x, Y):
        raise ValueError("not an order filter")
    bases = [[i for i in x.cells(k) if i in Y] for k in range(-1, x.dim + 1)]
    return homology.build(bases, -1, x.inc)


def chain_cochains(x: CellComplex) -> CochainComplex:
    """Augmented cellular cochains of the whole complex (reduced cohomology)."""
    return cochain_complex(range(len(x)), x, check=False)


def cohomology(c: CochainComplex, char: int = 0) -> dict[int, int]:
    return c.cohomology(char)


def integral_cohomology(c: CochainComplex):
    return c.integral_cohomology()


def local_cohomology_table(x: CellComplex, char: int | None = 0) -> dict[int, dict]:
    """``H^*(C(X^{>=s}))`` for every cell, over a field or over ZZ (``char=None``)."""
    out = {}
    for s in range(len(x)):
        c = cochain_complex(x.up(s), x, check=False)
        out[s] = c.integral_cohomology() if char is None else c.cohomology(char)
    return out


def is_cm_space(x: CellComplex, char: int = 0) -> bool:
    """Cohomology of every ``X^{>=s}`` concentrated in degree dim X."""
    top = x.dim
    for s in range(len(x)):
        h = cochain_complex(x.up(s), x, check=False).cohomology(char)
        if any(v for d, v in h.items() if d != top):
            return False
    return True


# barycentric subdivision ---------------------------------------------------------

def _maximal_chains(x: CellComplex, cells: set[int]) -> list[tuple[int, ...]]:
    tops = [s for s in cells if s != 0 and not any(u in cells for u in x.cofaces[s])]
    out = []

    def walk(chain):
        below = [t for t in x.covers[chain[-1]] if t != 0 and t in cells]
        if not below:
            out.append(tuple(chain))
            return
        for t in below:
            walk(chain + [t])

    for t in sorted(tops):
        walk([t])
    return out


def order_complex(x: CellComplex, cells: Iterable[int] | None = None) -> SimplicialComplex:
    """Order complex of the nonempty cells (a downward-closed set by default all)."""
    cells = set(range(len(x))) if cells is None else set(cells)
    verts = sorted(c for c in cells if c != 0)
    chains = _maximal_chains(x, cells)
    return SimplicialComplex(verts, chains)


def barycentric_pair(x: CellComplex, sigma: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Barycentric subdivision of X and of the subcomplex of cells not >= sigma."""
    if sigma == 0:
        raise ValueError("sigma must be a nonempty cell; use absolute cohomology instead")
    upper = x.up(sigma)
    rest = {c for c in range(len(x)) if c not in upper}
    return order_complex(x), order_complex(x, rest)
