"""Exact dense linear algebra over a finite field.

Matrices are lists of rows. The field is any object exposing ``add``,
``sub``, ``mul``, ``inv`` and ``neg`` on its element encoding with 0 and 1
as additive and multiplicative identities. ``FieldTower`` satisfies this
protocol, and so does :class:`PrimeField`.
"""

from __future__ import annotations

from typing import Protocol, Sequence

Matrix = list[list[int]]


class FieldOps(Protocol):
    def add(self, a: int, b: int) -> int: ...
    def sub(self, a: int, b: int) -> int: ...
    def mul(self, a: int, b: int) -> int: ...
    def inv(self, a: int) -> int: ...
    def neg(self, a: int) -> int: ...


class PrimeField:
    """The prime field F_p on the integers 0..p-1."""

    def __init__(self, p: int) -> None:
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)


def rref(matrix: Sequence[Sequence[int]], field: FieldOps) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.

    Returns the reduced matrix (same shape, zero rows at the bottom) and the
    list of pivot columns.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    mul, sub = field.mul, field.sub
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if prow[c] != 1:
            s = field.inv(prow[c])
            prow = [mul(s, v) if v else 0 for v in prow]
            rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for j in nz:
                    row[j] = sub(row[j], mul(f, prow[j]))
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix: Sequence[Sequence[int]], field: FieldOps) -> int:
    return len(rref(matrix, field)[1])


def determinant(matrix: Sequence[Sequence[int]], field: FieldOps) -> int:
    """Determinant of a square matrix by Gaussian elimination."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = field.neg(det)
        det = field.mul(det, rows[c][c])
        s = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = field.mul(rows[i][c], s)
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[c])]
    return det


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int], field: FieldOps) -> list[int] | None:
    """One solution of ``matrix @ x = rhs``, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return x


def nullspace(matrix: Sequence[Sequence[int]], ncols: int, field: FieldOps) -> Matrix:
    """Basis (as rows) of the right kernel ``{x : matrix @ x = 0}``."""
    red, pivots = rref(matrix, field) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, c in enumerate(pivots):
            x[c] = field.neg(red[i][f])
        basis.append(x)
    return basis


def mat_vec(matrix: Sequence[Sequence[int]], vec: Sequence[int], field: FieldOps) -> list[int]:
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def vec_mat(vec: Sequence[int], matrix: Sequence[Sequence[int]], field: FieldOps) -> list[int]:
    """Row vector times matrix."""
    ncols = len(matrix[0]) if matrix else 0
    out = [0] * ncols
    for a, row in zip(vec, matrix):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] = field.add(out[j], field.mul(a, b))
    return out


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], field: FieldOps) -> Matrix:
    return [vec_mat(row, b, field) for row in a]


def transpose(matrix: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*matrix)]
