"""Cochain complexes of finite free modules and their (co)homology."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import exactla


class ZGroup(NamedTuple):
    """A finitely generated abelian group Z^rank + sum of Z/t."""

    rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_z(self) -> bool:
        return self.rank == 1 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class CochainComplex:
    """``d[k]: C^{deg[k]} -> C^{deg[k]+1}`` as a ``dims[k+1] x dims[k]`` matrix.

    ``degrees`` are consecutive; the last differential maps to zero and is
    not stored.
    """

    degrees: tuple[int, ...]
    dims: tuple[int, ...]
    diffs: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.diffs) != max(len(self.degrees) - 1, 0):
            raise ValueError("need one differential between consecutive degrees")
        for k, d in enumerate(self.diffs):
            rows, cols = exactla.shape(d, self.dims[k])
            if rows != self.dims[k + 1] or cols != self.dims[k]:
                raise ValueError("differential has the wrong shape")

    def _ranks(self, char: int) -> list[int]:
        return [exactla.rank(d, char) if self.dims[k] and self.dims[k + 1] else 0
                for k, d in enumerate(self.diffs)]

    def composes_to_zero(self) -> bool:
        for k in range(len(self.diffs) - 1):
            a, b = self.diffs[k], self.diffs[k + 1]
            if not (self.dims[k] and self.dims[k + 2] and self.dims[k + 1]):
                continue
            if any(any(row) for row in exactla.matmul(b, a)):
                return False
        return True

    def cohomology(self, char: int = 0) -> dict[int, int]:
        """Dimensions of H^i over QQ (char 0) or GF(char)."""
        ranks = self._ranks(char)
        out = {}
        for k, deg in enumerate(self.degrees):
            r_out = ranks[k] if k < len(ranks) else 0
            r_in = ranks[k - 1] if k > 0 else 0
            out[deg] = self.dims[k] - r_out - r_in
        return out

    def _smith(self) -> list[exactla.SmithForm]:
        return [exactla.smith_normal_form(d, self.dims[k], transforms=False)
                for k, d in enumerate(self.diffs)]

    def integral_cohomology(self) -> dict[int, ZGroup]:
        snf = self._smith()
        out = {}
        for k, deg in enumerate(self.degrees):
            r_out = snf[k].rank if k < len(snf) else 0
            r_in = snf[k - 1].rank if k > 0 else 0
            tors = snf[k - 1].torsion if k > 0 else ()
            out[deg] = ZGroup(self.dims[k] - r_out - r_in, tors)
        return out

    def integral_homology(self) -> dict[int, ZGroup]:
        """Homology of the dual chain complex (boundary maps are the transposes)."""
        snf = self._smith()
        out = {}
        for k, deg in enumerate(self.degrees):
            r_out = snf[k].rank if k < len(snf) else 0
            r_in = snf[k - 1].rank if k > 0 else 0
            tors = snf[k].torsion if k < len(snf) else ()
            out[deg] = ZGroup(self.dims[k] - r_out - r_in, tors)
        return out


def build(bases: Sequence[Sequence], start: int, coefficient) -> CochainComplex:
    """Cochain complex from graded bases.

    ``bases[k]`` lists the basis of degree ``start + k``;
    ``coefficient(hi, lo)`` gives the matrix entry of ``d`` from ``lo`` to ``hi``.
    """
    dims = tuple(len(b) for b in bases)
    diffs = []
    for k in range(len(bases) - 1):
        lo, hi = bases[k], bases[k + 1]
        diffs.append(tuple(tuple(coefficient(h, l) for l in lo) for h in hi))
    return CochainComplex(tuple(range(start, start + len(bases))), dims, tuple(diffs))


def is_acyclic(groups: dict) -> bool:
    return all((g == 0) if isinstance(g, int) else g.is_zero() for g in groups.values())
