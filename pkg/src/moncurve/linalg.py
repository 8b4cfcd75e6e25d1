"""Exact row reduction over Q for the small systems that cut out graded pieces."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Row = Union[Sequence, Mapping[int, object]]


def _dense(row: Row, ncols: int) -> list[Fraction]:
    if isinstance(row, Mapping):
        out = [Fraction(0)] * ncols
        for j, v in row.items():
            out[j] += Fraction(v)
        return out
    return [Fraction(v) for v in row]


def rref(rows: Iterable[Row], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [_dense(r, ncols) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Iterable[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of {c : row . c = 0 for every row}, returned in reduced echelon form."""
    red, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return rref(basis, ncols)[0]


class Span:
    """Incrementally grown subspace of Q^ncols with membership tests."""

    def __init__(self, ncols: int, vectors: Iterable[Row] = ()):
        self.ncols = ncols
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        for row, p in zip(self._rows, self._pivots):
            if vec[p]:
                factor = vec[p]
                vec = [a - factor * b for a, b in zip(vec, row)]
        return vec

    def contains(self, v: Row) -> bool:
        return not any(self._reduce(_dense(v, self.ncols)))

    def add(self, v: Row) -> bool:
        """Add v; returns False when it was already in the span."""
        vec = self._reduce(_dense(v, self.ncols))
        p = next((j for j, x in enumerate(vec) if x), None)
        if p is None:
            return False
        lead = vec[p]
        vec = [x / lead for x in vec]
        for i, row in enumerate(self._rows):
            if row[p]:
                factor = row[p]
                self._rows[i] = [a - factor * b for a, b in zip(row, vec)]
        self._rows.append(vec)
        self._pivots.append(p)
        return True
