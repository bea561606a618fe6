"""Exact linear algebra over Q with Fraction entries.

Dense vectors are plain lists; the sparse solver takes rows as
``{column: value}`` dicts.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class Echelon:
    """Incrementally built row-echelon basis of a subspace of Q^n.

    Every stored row remembers how it was combined from the vectors that
    were added, so :meth:`coords` can express a vector in terms of the
    independent inputs.
    """

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        self.n = n
        self._rows: list[tuple[int, list[Fraction], dict[int, Fraction]]] = []
        self.independent: list[int] = []  # indices of added vectors kept
        self._count = 0
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Sequence) -> tuple[list[Fraction], dict[int, Fraction]]:
        r = [Fraction(a) for a in v]
        combo: dict[int, Fraction] = {}
        for col, row, rc in self._rows:
            c = r[col]
            if c == 0:
                continue
            c = c / row[col]
            for j in range(col, self.n):
                if row[j]:
                    r[j] -= c * row[j]
            for k, a in rc.items():
                combo[k] = combo.get(k, Fraction(0)) + c * a
        return r, combo

    def add(self, v: Sequence) -> int | None:
        """Add v; return its insertion index if independent, else None."""
        idx = self._count
        self._count += 1
        r, combo = self._reduce(v)
        col = next((j for j, a in enumerate(r) if a != 0), None)
        if col is None:
            return None
        # r = v - sum combo_k u_k
        rc = {k: -a for k, a in combo.items() if a != 0}
        rc[idx] = Fraction(1)
        self._rows.append((col, r, rc))
        self.independent.append(idx)
        return idx

    def contains(self, v: Sequence) -> bool:
        r, _ = self._reduce(v)
        return not any(r)

    def coords(self, v: Sequence) -> dict[int, Fraction] | None:
        """Coefficients on the added vectors (by insertion index), or None."""
        r, combo = self._reduce(v)
        if any(r):
            return None
        return {k: a for k, a in combo.items() if a != 0}

    def basis(self) -> list[list[Fraction]]:
        return [list(row) for _, row, _ in self._rows]


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return Echelon(len(rows[0]), rows).rank


def rref_sparse(rows: Iterable[dict]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of sparse rows, keyed by pivot column."""
    piv: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v != 0}
        for col in [c for c in r if c in piv]:
            c = r.get(col)
            if not c:
                continue
            for k, v in piv[col].items():
                nv = r.get(k, Fraction(0)) - c * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        col = min(r)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        for other in piv.values():
            c = other.get(col)
            if c:
                for k, v in r.items():
                    nv = other.get(k, Fraction(0)) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        piv[col] = r
    return piv


def nullspace_sparse(rows: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    piv = rref_sparse(rows)
    out = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for col, r in piv.items():
            c = r.get(f)
            if c:
                v[col] = -c
        out.append(v)
    return out


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows = [{j: a for j, a in enumerate(r) if a != 0} for r in matrix]
    return nullspace_sparse(rows, ncols)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int | None = None) -> list[list[Fraction]]:
    """Product of an (m x k) and a (k x n) matrix; ``inner`` covers k = 0."""
    m = len(a)
    k = inner if inner is not None else (len(b) if b else 0)
    n = len(b[0]) if b else 0
    out = [[Fraction(0)] * n for _ in range(m)]
    for i in range(m):
        for t in range(k):
            c = a[i][t]
            if c:
                brow = b[t]
                row = out[i]
                for j in range(n):
                    if brow[j]:
                        row[j] += c * brow[j]
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(m)]


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    return [[a[i][j] for i in range(len(a))] for j in range(n)]


def is_zero(a: Sequence[Sequence]) -> bool:
    return not any(x for row in a for x in row)


def determinant(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for j in range(c, n):
                    m[r][j] -= f * m[c][j]
    return det
