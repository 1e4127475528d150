"""Standard 2-complexes of presentations and their cellular chains.

Only single-vertex complexes are modelled.  A :class:`TwoComplex` is the
standard complex of a presentation: one 1-cell per generator and one
2-cell per relator, attached along the relator word.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .intlinalg import IntMatrix, solve
from .presentations import Presentation, Word, commutator, exponent_sum_matrix


@dataclass(frozen=True)
class TwoComplex:
    one_cells: tuple[str, ...]
    two_cells: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "one_cells", tuple(self.one_cells))
        object.__setattr__(self, "two_cells", tuple(self.two_cells))

    vertex_count = 1

    def presentation(self) -> Presentation:
        return Presentation(self.one_cells, self.two_cells)

    def to_dict(self) -> dict:
        return {
            "vertex_count": 1,
            "one_cells": list(self.one_cells),
            "two_cells": [w.format(self.one_cells) for w in self.two_cells],
        }


@dataclass(frozen=True)
class ChainComplexData:
    d2: IntMatrix  # one_cells x two_cells
    d1: IntMatrix  # 1 x one_cells, always zero


@dataclass(frozen=True)
class CellularMapData:
    f1: IntMatrix
    f2: IntMatrix
    f0: IntMatrix = IntMatrix.identity(1)

    def to_dict(self) -> dict:
        return {"f0": self.f0.tolist(), "f1": self.f1.tolist(), "f2": self.f2.tolist()}

    def compose(self, inner: CellularMapData) -> CellularMapData:
        """``self`` after ``inner``."""
        return CellularMapData(self.f1 @ inner.f1, self.f2 @ inner.f2, self.f0 @ inner.f0)


def standard_complex(p: Presentation) -> TwoComplex:
    return TwoComplex(p.generator_names, p.relators)


def chain_complex(x: TwoComplex) -> ChainComplexData:
    return ChainComplexData(d2=exponent_sum_matrix(x.presentation()).T,
                            d1=IntMatrix.zeros(1, len(x.one_cells)))


def euler_characteristic(x: TwoComplex) -> int:
    return 1 - len(x.one_cells) + len(x.two_cells)


def is_chain_map(source: TwoComplex, target: TwoComplex, f: CellularMapData) -> bool:
    cs, ct = chain_complex(source), chain_complex(target)
    if f.f1.shape != (len(target.one_cells), len(source.one_cells)):
        return False
    if f.f2.shape != (len(target.two_cells), len(source.two_cells)):
        return False
    return ct.d2 @ f.f2 == f.f1 @ cs.d2 and ct.d1 @ f.f1 == f.f0 @ cs.d1


def _fresh(name: str, taken: set[str]) -> str:
    k = 2
    while f"{name}{k}" in taken:
        k += 1
    return f"{name}{k}"


def wedge(x: TwoComplex, y: TwoComplex) -> TwoComplex:
    """One-point union; colliding names from ``y`` get a numeric suffix."""
    taken = set(x.one_cells)
    names = list(x.one_cells)
    for name in y.one_cells:
        if name in taken:
            name = _fresh(name, taken)
        taken.add(name)
        names.append(name)
    off = len(x.one_cells)
    shifted = [Word(tuple((g + off, e) for g, e in w.letters)) for w in y.two_cells]
    return TwoComplex(tuple(names), x.two_cells + tuple(shifted))


def wedge_map(f: CellularMapData, g: CellularMapData) -> CellularMapData:
    """Block-diagonal chain map on a wedge, sharing the vertex."""

    def block(a: IntMatrix, b: IntMatrix) -> IntMatrix:
        rows = [list(r) + [0] * b.cols for r in a.data]
        rows += [[0] * a.cols + list(r) for r in b.data]
        return IntMatrix.from_rows(rows, a.cols + b.cols)

    return CellularMapData(block(f.f1, g.f1), block(f.f2, g.f2))


def identity_map(x: TwoComplex) -> CellularMapData:
    return CellularMapData(IntMatrix.identity(len(x.one_cells)), IntMatrix.identity(len(x.two_cells)))


def _check_chain(invariant_factors: Sequence[int], d: int) -> list[int]:
    m = [int(v) for v in invariant_factors]
    if len(m) < 2:
        raise ValueError("need at least two invariant factors")
    if any(v < 2 for v in m):
        raise ValueError("invariant factors must be >= 2")
    if any(m[i + 1] % m[i] for i in range(len(m) - 1)):
        raise ValueError(f"{m} is not a divisibility chain")
    if gcd(d, m[0]) != 1:
        raise ValueError(f"gcd({d}, {m[0]}) != 1")
    return m


def build_Td(invariant_factors: Sequence[int], d: int) -> Presentation:
    """The presentation with generators a1..an, powers ai^mi, the twisted
    commutator [a1^d, a2] and all other commutators [ai, aj], i < j."""
    m = _check_chain(invariant_factors, d)
    n = len(m)
    a = [Word.gen(i) for i in range(n)]
    rels = [a[i] ** m[i] for i in range(n)]
    rels.append(commutator(a[0] ** d, a[1]))
    rels += [commutator(a[i], a[j]) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)]
    return Presentation(tuple(f"a{i + 1}" for i in range(n)), tuple(rels))


def build_Rd(m1: int, m2: int, d: int) -> Presentation:
    return build_Td([m1, m2], d)


def inclusion_Rd_to_Td(invariant_factors: Sequence[int], d: int) -> CellularMapData:
    m = _check_chain(invariant_factors, d)
    n = len(m)
    n_cells = n + n * (n - 1) // 2
    f1 = IntMatrix.from_rows([[int(i == j) for j in range(2)] for i in range(n)], 2)
    # R_d cells a1^m1, a2^m2, [a1^d,a2] sit at positions 0, 1, n of T_d
    pos = [0, 1, n]
    f2 = IntMatrix.from_rows([[int(pos[j] == i) for j in range(3)] for i in range(n_cells)], 3)
    return CellularMapData(f1, f2)


def retraction_Td_to_Rd(invariant_factors: Sequence[int], d: int) -> CellularMapData:
    """Chain-level retraction of the standard complex of T_d onto that of R_d.

    Generators a3..an collapse to the vertex.  Each 2-cell of T_d is sent to
    an integer chain of R_d whose boundary matches the image of its attaching
    word; cells whose image word has zero exponent vector go to zero.
    """
    m = _check_chain(invariant_factors, d)
    n = len(m)
    td = build_Td(m, d)
    rd = build_Rd(m[0], m[1], d)
    images = [Word.gen(0), Word.gen(1)] + [Word()] * (n - 2)
    f1 = IntMatrix.from_rows([[int(i == j) for j in range(n)] for i in range(2)], n)
    d2r = chain_complex(standard_complex(rd)).d2
    keep = {0: 0, 1: 1, n: 2}
    cols = []
    for j, rel in enumerate(td.relators):
        if j in keep:
            col = [int(keep[j] == i) for i in range(3)]
        else:
            e = rel.substitute(images).exponent_sums(2)
            if any(e):
                sol = solve(d2r, e)
                if sol is None:
                    raise ArithmeticError(f"cell {j} has no chain-level image")
                col = list(sol)
            else:
                col = [0, 0, 0]
        cols.append(col)
    f2 = IntMatrix.from_columns(cols, 3)
    r = CellularMapData(f1, f2)
    if not is_chain_map(standard_complex(td), standard_complex(rd), r):
        raise ArithmeticError("retraction failed the chain-map identity")
    return r
