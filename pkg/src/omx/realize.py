"""Affine oriented matroids of integer hyperplane arrangements."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactla
from . import signvec as sv
from .om import AffineOM, OrientedMatroid, span_from_cocircuits

G = "g"


@dataclass(frozen=True)
class Arrangement:
    """Normal vectors ``v_1..v_n`` and ``v_g`` of linear hyperplanes in R^{d+1}.

    The affine arrangement lives on ``<v, v_g> = 1``.  Elements are labelled
    ``1..n`` followed by ``"g"``.
    """

    vectors: tuple[tuple[int, ...], ...]
    g: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors))
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        dims = {len(v) for v in self.vectors} | {len(self.g)}
        if len(dims) != 1:
            raise ValueError("vectors of different dimensions")

    @property
    def dimension(self) -> int:
        """Ambient dimension d + 1."""
        return len(self.g)

    @property
    def ground(self) -> tuple:
        return tuple(range(1, len(self.vectors) + 1)) + (G,)

    @property
    def all_vectors(self) -> tuple[tuple[int, ...], ...]:
        return self.vectors + (self.g,)

    def to_json(self) -> dict:
        return {"name": self.name, "dimension": self.dimension,
                "vectors": [list(v) for v in self.vectors], "g": list(self.g)}

    @classmethod
    def from_json(cls, data: dict) -> "Arrangement":
        try:
            arr = cls(tuple(map(tuple, data["vectors"])), tuple(data["g"]), data.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed arrangement file: {exc}") from None
        if "dimension" in data and data["dimension"] != arr.dimension:
            raise ValueError("declared dimension does not match the vectors")
        return arr


def load_arrangement(path) -> Arrangement:
    with open(path) as fh:
        return Arrangement.from_json(json.load(fh))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_vector_of_point(a: Arrangement, v: Sequence) -> sv.Signs:
    if len(v) != a.dimension:
        raise ValueError(f"point has dimension {len(v)}, expected {a.dimension}")
    v = [Fraction(x) for x in v]
    return tuple(_sign(sum(x * y for x, y in zip(w, v))) for w in a.all_vectors)


def cocircuits_of_vectors(vectors: Sequence[Sequence[int]]) -> frozenset[sv.Signs]:
    """Cocircuits of the oriented matroid of ``vectors`` (rows).

    Each independent set of size r-1 cuts a line out of the row space;
    both generators of that line give cocircuits.
    """
    vectors = [tuple(v) for v in vectors]
    basis = exactla.row_space_basis(vectors)
    r = len(basis)
    if r == 0:
        raise ValueError("all vectors are zero")
    # coordinates of each vector against the row-space basis: w = B^T c
    gram = [[sum(x * y for x, y in zip(v, b)) for b in basis] for v in vectors]
    out = set()
    for T in itertools.combinations(range(len(vectors)), r - 1):
        rows = [gram[i] for i in T]
        if exactla.rank(rows) != r - 1:
            continue
        ker = exactla.kernel_basis(rows, ncols=r)
        (c,) = ker
        lam = tuple(_sign(sum(x * y for x, y in zip(row, c))) for row in gram)
        out.add(lam)
        out.add(sv.neg(lam))
    return frozenset(out)


def om_from_vectors(a: Arrangement, allow_loop_g: bool = False) -> AffineOM:
    if not any(any(v) for v in a.all_vectors):
        raise ValueError("all vectors are zero")
    if not any(a.g) and not allow_loop_g:
        raise ValueError("g is a loop (zero vector); pass allow_loop_g to permit it")
    C = cocircuits_of_vectors(a.all_vectors)
    ground = a.ground
    L = span_from_cocircuits(C, len(ground))
    return AffineOM(OrientedMatroid(ground, L), G, allow_loop_g=allow_loop_g)
