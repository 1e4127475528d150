"""Exact integer matrix algebra.

Everything here works over Python ``int`` so there is no overflow: Smith
normal form with unimodular transforms, invariant factors, kernels,
cokernels and the primitive-element test for submodules of ``Z^k``.

>>> snf = smith_normal_form(IntMatrix.from_rows([[4, 0], [0, 6]]))
>>> snf.diagonal
(2, 12)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; ``data`` is a tuple of row tuples.

    ``rows`` and ``cols`` are stored explicitly so that 0 x n and n x 0
    matrices keep their shape.
    """

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            m[i][i] = int(e)
        return cls.from_rows(m, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self.data],
            other.cols,
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix.from_rows([[-x for x in r] for r in self.data], self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix.from_rows(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(self.data[i][i] for i in range(self.rows))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        cols = list(cols)
        return IntMatrix.from_rows([[self.data[i][j] for j in cols] for i in rows], len(cols))


def as_matrix(m: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    source: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def check(self) -> bool:
        """Re-verify every invariant exactly."""
        if self.U @ self.source @ self.V != self.D:
            return False
        if abs(determinant(self.U)) != 1 or abs(determinant(self.V)) != 1:
            return False
        for i in range(self.D.rows):
            for j in range(self.D.cols):
                if i != j and self.D[i, j] != 0:
                    return False
        diag = self.diagonal
        if any(d < 0 for d in diag):
            return False
        r = self.rank
        if any(d == 0 for d in diag[:r]) or any(d != 0 for d in diag[r:]):
            return False
        return all(diag[i + 1] % diag[i] == 0 for i in range(r - 1))


def _pick_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    # smallest |entry|, ties by lowest row then lowest column
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with transforms, by repeated Euclidean pivoting.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block (ties: lowest row, then lowest column), so the output is
    a deterministic function of the input.
    """
    m = as_matrix(m)
    r, c = m.shape
    a = m.tolist()
    u = IntMatrix.identity(r).tolist()
    v = IntMatrix.identity(c).tolist()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            piv = _pick_pivot(a, t)
            if piv is None:
                break
            pi, pj = piv
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < r and t < c and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(
        U=IntMatrix.from_rows(u, r),
        D=IntMatrix.from_rows(a, c),
        V=IntMatrix.from_rows(v, c),
        source=m,
    )


@dataclass(frozen=True)
class InvariantFactors:
    nontrivial: tuple[int, ...]
    unit_count: int
    zero_count: int  # zero columns of D, i.e. the kernel rank

    @property
    def rank(self) -> int:
        return self.unit_count + len(self.nontrivial)


def invariant_factors(m: IntMatrix | Sequence[Sequence[int]]) -> InvariantFactors:
    snf = smith_normal_form(m)
    diag = snf.diagonal
    return InvariantFactors(
        nontrivial=tuple(d for d in diag if d > 1),
        unit_count=sum(1 for d in diag if d == 1),
        zero_count=snf.D.cols - snf.rank,
    )


def _normalize_sign(vec: list[int]) -> list[int]:
    lead = next((x for x in vec if x), 0)
    return [-x for x in vec] if lead < 0 else vec


def kernel_basis(m: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    """Columns form a Z-basis of ``ker(m: Z^cols -> Z^rows)``.

    Taken from the trailing columns of the right transform ``V``; each
    column is scaled by -1 if needed so its first nonzero entry is positive.
    """
    m = as_matrix(m)
    snf = smith_normal_form(m)
    cols = [_normalize_sign(list(snf.V.column(j))) for j in range(snf.rank, m.cols)]
    return IntMatrix.from_columns(cols, m.cols)


@dataclass(frozen=True)
class CokernelStructure:
    free_rank: int
    torsion: tuple[int, ...]

    @property
    def factor_count(self) -> int:
        return self.free_rank + len(self.torsion)


def cokernel_structure(m: IntMatrix | Sequence[Sequence[int]]) -> CokernelStructure:
    """Structure of ``Z^rows / (column span of m)``."""
    m = as_matrix(m)
    inv = invariant_factors(m)
    return CokernelStructure(free_rank=m.rows - inv.rank, torsion=inv.nontrivial)


def submodule_has_primitive(generators: IntMatrix | Sequence[Sequence[int]], k: int) -> bool:
    """Whether the submodule spanned by the columns contains a primitive vector of ``Z^k``.

    Holds exactly when ``Z^k / S`` needs fewer than ``k`` cyclic factors,
    counting free factors as well as nontrivial torsion ones.
    """
    generators = as_matrix(generators)
    if generators.rows != k:
        raise ValueError(f"generators live in Z^{generators.rows}, expected Z^{k}")
    return cokernel_structure(generators).factor_count < k


def solve(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """An integer solution of ``a @ x == b``, or ``None`` if there is none."""
    snf = smith_normal_form(a)
    ub = [sum(x * y for x, y in zip(row, b)) for row in snf.U.data]
    diag = snf.diagonal
    y = [0] * a.cols
    for i, rhs in enumerate(ub):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if rhs != 0:
                return None
        elif rhs % d:
            return None
        else:
            y[i] = rhs // d
    return tuple(sum(vij * yj for vij, yj in zip(row, y)) for row in snf.V.data)


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g
