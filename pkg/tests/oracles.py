"""Independent reference computations used to freeze expected values.

Nothing here goes through cocircuit enumeration or the cellular machinery:
covectors are read off from integer points of every intersection flat, and
homology of standard spaces is known in closed form.
"""
import itertools
from fractions import Fraction

from omx import exactla


def _sign(x):
    return (x > 0) - (x < 0)


def grid_covectors(vectors, radius=4):
    """Sign vectors ``sign(V x)`` for integer points x of every flat
    ``{x : v_i . x = 0, i in S}``, coordinates in a box of the given radius.

    Every face of a central arrangement is an open cone inside the flat it
    spans, and for small integer data it contains a short lattice point.
    """
    vectors = [tuple(v) for v in vectors]
    dim = len(vectors[0])
    out = set()
    for k in range(len(vectors) + 1):
        for S in itertools.combinations(range(len(vectors)), k):
            rows = [vectors[i] for i in S]
            basis = exactla.kernel_basis(rows, ncols=dim) if rows else [
                tuple(int(i == j) for j in range(dim)) for i in range(dim)]
            for coeffs in itertools.product(range(-radius, radius + 1), repeat=len(basis)):
                x = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(dim)]
                out.add(tuple(_sign(sum(a * b for a, b in zip(v, x))) for v in vectors))
    return frozenset(out)


def bounded_faces_2d(lines):
    """Vertices, edges and regions of the bounded part of a line arrangement
    ``a x + b y + c = 0`` in the plane, by direct geometry.

    Returns (f0, f1, f2).  Assumes no two lines coincide.
    """
    pts = set()
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        den = a1 * b2 - a2 * b1
        if den:
            pts.add((Fraction(b1 * c2 - b2 * c1, den), Fraction(a2 * c1 - a1 * c2, den)))
    f0 = len(pts)
    f1 = 0
    for a, b, c in lines:
        on = [p for p in pts if a * p[0] + b * p[1] + c == 0]
        f1 += max(len(on) - 1, 0)
    # Euler characteristic of the contractible bounded complex
    f2 = 1 - f0 + f1 if f0 else 0
    return f0, f1, f2


# standard triangulations ------------------------------------------------------

RP2_FACETS = [(1, 2, 4), (2, 3, 4), (3, 1, 5), (4, 5, 1), (5, 6, 4), (6, 4, 3),
              (6, 2, 5), (2, 5, 3), (3, 6, 1), (1, 6, 2)]
"""Six-vertex real projective plane: H_1 = Z/2, H_2 = 0."""

TORUS_FACETS = [
    (1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (3, 1, 6), (1, 6, 4),
    (4, 5, 7), (5, 7, 8), (5, 6, 8), (6, 8, 9), (6, 4, 9), (4, 9, 7),
    (7, 8, 1), (8, 1, 2), (8, 9, 2), (9, 2, 3), (9, 7, 3), (7, 3, 1),
]
"""Nine-vertex torus: H_1 = Z^2, H_2 = Z."""


def sphere_reduced_homology(k):
    """Reduced homology of the boundary of a (k+1)-simplex, degrees -1..k."""
    return {d: (1 if d == k else 0) for d in range(-1, k + 1)}
