"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions (or ints).  Everything is computed
exactly; there are no tolerances anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]


def _to_rows(m: Sequence[Sequence]) -> List[List[Fraction]]:
    return [[Fraction(c) for c in row] for row in m]


def rref(m: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = _to_rows(m)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Sequence[Sequence]) -> List[Vector]:
    """Basis of the right null space {v : m v = 0}; exact."""
    rows = _to_rows(m)
    if not rows:
        return []
    ncols = len(rows[0])
    echelon, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: List[Vector] = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -echelon[ri][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One exact solution of m x = b, or None if inconsistent."""
    rows = _to_rows(m)
    target = [Fraction(c) for c in b]
    if not rows:
        return () if not any(target) else None
    ncols = len(rows[0])
    aug = [row + [t] for row, t in zip(rows, target)]
    echelon, pivots = rref(aug)
    for row in echelon:
        if all(v == 0 for v in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for ri, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = echelon[ri][ncols]
    return tuple(x)


class Subspace:
    """A subspace of Q^n held in reduced row echelon form.

    Supports membership, reduction modulo the space, and dimension; used for
    graded pieces of ideals and for limit computations.
    """

    def __init__(self, vectors: Sequence[Sequence], ncols: int):
        self.ncols = ncols
        rows = [v for v in _to_rows(vectors) if any(v)]
        self.rows, self.pivots = rref(rows) if rows else ([], [])

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Sequence) -> List[Fraction]:
        """Normal form of v modulo the subspace (zero iff v is a member)."""
        w = [Fraction(c) for c in v]
        for row, pc in zip(self.rows, self.pivots):
            if w[pc]:
                f = w[pc]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def extended(self, vectors: Sequence[Sequence]) -> "Subspace":
        s = Subspace([], self.ncols)
        s.rows = [r[:] for r in self.rows]
        s.pivots = list(self.pivots)
        for v in vectors:
            w = s.reduce(v)
            lead = next((i for i, c in enumerate(w) if c), None)
            if lead is None:
                continue
            lv = w[lead]
            w = [c / lv for c in w]
            for row, pc in zip(s.rows, s.pivots):
                if row[lead]:
                    f = row[lead]
                    for i in range(s.ncols):
                        row[i] -= f * w[i]
            pos = next((k for k, pc in enumerate(s.pivots) if pc > lead), len(s.pivots))
            s.rows.insert(pos, w)
            s.pivots.insert(pos, lead)
        return s

    def basis(self) -> List[Vector]:
        return [tuple(r) for r in self.rows]

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-free intersection via kernel of stacked bases."""
        if self.ncols != other.ncols:
            raise ValueError("subspaces of different ambient spaces")
        a, b = self.basis(), other.basis()
        if not a or not b:
            return Subspace([], self.ncols)
        cols = [list(v) for v in a] + [list(v) for v in b]
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(self.ncols)]
        vectors = []
        for k in kernel_basis(matrix):
            v = [Fraction(0)] * self.ncols
            for coeff, basis_vec in zip(k[: len(a)], a):
                for i in range(self.ncols):
                    v[i] += coeff * basis_vec[i]
            vectors.append(v)
        return Subspace(vectors, self.ncols)


# ---------------------------------------------------------------------------
# integer helpers for fraction-free work

def int_content(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def primitive_int_vector(v: Sequence) -> List[int]:
    """Scale a rational vector to coprime integers (empty/zero stays zero)."""
    fracs = [Fraction(c) for c in v]
    den = 1
    for c in fracs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = int_content(ints)
    if g > 1:
        ints = [c // g for c in ints]
    return ints
