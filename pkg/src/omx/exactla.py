"""Exact linear algebra over QQ, GF(p) and ZZ.

Matrices are plain nested sequences (lists or tuples of rows) of Python
ints or :class:`fractions.Fraction`.  Fields are named by characteristic:
``char=0`` is the rationals, ``char=p`` is GF(p) for a prime ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence]


def shape(m: Matrix, ncols: int | None = None) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else (ncols or 0)
    for r in m:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in m:
        den = 1
        for x in row:
            if type(x) is not int:
                den = _lcm(den, Fraction(x).denominator)
        out.append(list(row) if den == 1 else [int(x * den) for x in row])
    return out


def rank(m: Matrix, char: int = 0) -> int:
    """Row rank of ``m`` over QQ (``char=0``) or GF(char)."""
    if not len(m):
        return 0
    if char == 0:
        return _rank_sparse_q(_integer_rows(m))
    return _rank_mod_p(m, char)


def _sparse(rows) -> list[dict[int, int]]:
    return [d for d in ({j: x for j, x in enumerate(r) if x} for r in rows) if d]


def _rank_sparse_q(a: list[list[int]]) -> int:
    # integer row reduction on sparse rows; each reduced row is divided by its
    # content so entries stay small
    pivots: dict[int, dict[int, int]] = {}
    for row in _sparse(a):
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                break
            p, f = prow[c], row[c]
            g = gcd(p, f)
            p, f = p // g, f // g
            new = {j: x * p for j, x in row.items()}
            for j, x in prow.items():
                v = new.get(j, 0) - f * x
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            if new:
                cont = 0
                for x in new.values():
                    cont = gcd(cont, x)
                if cont > 1:
                    new = {j: x // cont for j, x in new.items()}
            row = new
    return len(pivots)


def _rank_mod_p(m: Matrix, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for r in m:
        row = {}
        for j, x in enumerate(r):
            if x:
                if type(x) is not int:
                    x = Fraction(x)
                    x = x.numerator * pow(x.denominator, -1, p)
                x %= p
                if x:
                    row[j] = x
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {j: x * inv % p for j, x in row.items()}
                break
            f = row[c]
            for j, x in prow.items():
                v = (row.get(j, 0) - f * x) % p
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
    return len(pivots)


def rref(m: Matrix, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over QQ and the list of pivot columns."""
    _, cols = shape(m, ncols)
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to integers with content 1, first nonzero positive."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = _lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def kernel_basis(m: Matrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the right kernel over QQ, as primitive integer vectors.

    ``ncols`` is only needed when ``m`` has no rows.
    """
    _, cols = shape(m, ncols)
    red, pivots = rref(m, cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def row_space_basis(m: Matrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    red, _ = rref(m, ncols)
    return [primitive(row) for row in red]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def det(m: Matrix) -> int | Fraction:
    """Determinant by fraction-free elimination (exact)."""
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prod = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        prod *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    d = sign * prod
    return int(d) if d.denominator == 1 else d


@dataclass(frozen=True)
class SmithForm:
    """``left @ A @ right == diag(diagonal)`` padded to the shape of ``A``."""

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...] | None
    right: tuple[tuple[int, ...], ...] | None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(m: Matrix, ncols: int | None = None, transforms: bool = True) -> SmithForm:
    """Smith normal form of an integer matrix.

    The diagonal has length ``min(rows, cols)`` and satisfies
    ``d_1 | d_2 | ... | d_k`` (zeros last).  With ``transforms=False``
    only the diagonal is computed, which is what homology needs.
    """
    nrows, cols = shape(m, ncols)
    a = [[int(x) for x in row] for row in m]
    U = identity(nrows) if transforms else None
    V = identity(cols) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        rs, rd = a[src], a[dst]
        for j in range(cols):
            if rs[j]:
                rd[j] += q * rs[j]
        if U is not None:
            us, ud = U[src], U[dst]
            for j in range(nrows):
                ud[j] += q * us[j]

    def add_col(dst, src, q):  # col dst += q * col src
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(nrows, cols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # a remainder smaller than the pivot becomes the new pivot
            for i in range(t + 1, nrows):
                if a[i][t]:
                    swap_rows(t, i)
                    done = False
                    break
            if done:
                for j in range(t + 1, cols):
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
                        break
            if not done:
                continue
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]

    diag = tuple(a[i][i] for i in range(min(nrows, cols)))
    if U is None:
        return SmithForm(diag, None, None)
    return SmithForm(diag, tuple(map(tuple, U)), tuple(map(tuple, V)))
