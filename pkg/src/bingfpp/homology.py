"""Integral homology of single-vertex 2-complexes and Hopf-trace Lefschetz numbers."""

from __future__ import annotations

from dataclasses import dataclass

from .complex2 import CellularMapData, TwoComplex, chain_complex, is_chain_map
from .intlinalg import cokernel_structure, smith_normal_form


@dataclass(frozen=True)
class HomologySummary:
    h0_rank: int
    h1_rank: int
    h1_torsion: tuple[int, ...]
    h2_rank: int  # H2 = ker d2 is free

    @property
    def euler_characteristic(self) -> int:
        return self.h0_rank - self.h1_rank + self.h2_rank

    def to_dict(self) -> dict:
        return {
            "H0": _fmt(self.h0_rank, ()),
            "H1": _fmt(self.h1_rank, self.h1_torsion),
            "H2": _fmt(self.h2_rank, ()),
            "h0_rank": self.h0_rank,
            "h1_rank": self.h1_rank,
            "h1_torsion": list(self.h1_torsion),
            "h2_rank": self.h2_rank,
        }


def _fmt(rank: int, torsion: tuple[int, ...]) -> str:
    parts = ["Z"] * rank + [f"Z_{t}" for t in torsion]
    return " + ".join(parts) if parts else "0"


def homology(x: TwoComplex) -> HomologySummary:
    d2 = chain_complex(x).d2
    coker = cokernel_structure(d2)
    rank = smith_normal_form(d2).rank
    return HomologySummary(
        h0_rank=1,
        h1_rank=coker.free_rank,
        h1_torsion=coker.torsion,
        h2_rank=len(x.two_cells) - rank,
    )


def rational_acyclicity(x: TwoComplex) -> bool:
    h = homology(x)
    return h.h1_rank == 0 and h.h2_rank == 0


def lefschetz_number(x: TwoComplex, f: CellularMapData) -> int:
    """Alternating sum of chain-level traces of a cellular self-map."""
    if not is_chain_map(x, x, f):
        raise ValueError("map data does not satisfy the chain-map condition")
    return f.f0.trace() - f.f1.trace() + f.f2.trace()
