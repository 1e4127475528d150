"""Finite abelian groups, Schur multipliers and the group catalog."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import gcd, prod
from typing import Sequence, Union

from .intlinalg import IntMatrix, invariant_factors


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        m = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", m)
        if any(x < 2 for x in m):
            raise ValueError(f"invariant factors must be >= 2, got {list(m)}")
        if any(m[i + 1] % m[i] for i in range(len(m) - 1)):
            raise ValueError(f"{list(m)} is not a divisibility chain")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __str__(self) -> str:
        return " x ".join(f"Z_{m}" for m in self.invariant_factors) or "1"


def canonicalize_abelian(cyclic_orders: Sequence[int]) -> FiniteAbelianGroup:
    """Invariant-factor form of a direct sum of cyclic groups."""
    if any(int(x) < 1 for x in cyclic_orders):
        raise ValueError("cyclic orders must be >= 1")
    if not cyclic_orders:
        return FiniteAbelianGroup()
    return FiniteAbelianGroup(invariant_factors(IntMatrix.diag(cyclic_orders)).nontrivial)


def schur_multiplier_abelian(g: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """H2 of a finite abelian group: sum of Z_gcd(mi, mj) over i < j."""
    return canonicalize_abelian([gcd(a, b) for a, b in combinations(g.invariant_factors, 2)])


# --- group specifications -------------------------------------------------


@dataclass(frozen=True)
class Abelian:
    group: FiniteAbelianGroup

    def label(self) -> str:
        return "abelian:" + ",".join(map(str, self.group.invariant_factors))


@dataclass(frozen=True)
class Catalog:
    name: str
    parameter: int | None = None  # n for D2n

    def __post_init__(self):
        catalog_lookup(self.name)
        if self.parameter is not None and self.parameter < 2:
            raise ValueError("catalog parameter must be >= 2")

    def label(self) -> str:
        return f"catalog:{self.name}" + ("" if self.parameter is None else f":{self.parameter}")

    @property
    def record(self) -> dict:
        return catalog_lookup(self.name)

    def multiplier(self) -> tuple[int, ...] | None:
        rec = self.record
        if rec["name"] == "D2n" and self.parameter is not None:
            return () if self.parameter % 2 else (2,)
        if rec["multiplier"] is None:
            return None
        return tuple(rec["multiplier"])

    def triangle(self) -> tuple[int, int, int | None] | None:
        tri = self.record.get("triangle")
        if tri is None:
            return None
        if tri[2] is None:
            return (tri[0], tri[1], self.parameter)
        return tuple(tri)


@dataclass(frozen=True)
class Unknown:
    def label(self) -> str:
        return "unknown"


GroupSpec = Union[Abelian, Catalog, Unknown]


def parse_group_spec(text: str) -> GroupSpec:
    """``abelian:2,4`` | ``catalog:A5`` | ``catalog:D2n:6`` | ``unknown``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    if kind == "unknown" and not rest:
        return Unknown()
    if kind == "abelian":
        orders = [int(t) for t in rest.split(",") if t.strip()] if rest.strip() else []
        return Abelian(canonicalize_abelian(orders))
    if kind == "catalog" and rest:
        name, _, param = rest.partition(":")
        return Catalog(catalog_lookup(name)["name"], int(param) if param else None)
    raise ValueError(f"unrecognized group spec {text!r}")


@lru_cache(maxsize=None)
def _catalog() -> dict:
    with resources.files("bingfpp.data").joinpath("catalog.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def catalog_table() -> list[dict]:
    return [dict(row) for row in _catalog()["groups"]]


def catalog_version() -> int:
    return _catalog()["version"]


def catalog_lookup(name: str) -> dict:
    """Catalog row by name (case-insensitive); ``KeyError`` if absent."""
    for row in _catalog()["groups"]:
        if row["name"].lower() == name.lower():
            out = dict(row)
            out.setdefault("triangle_covered", False)
            return out
    raise KeyError(f"unknown catalog group {name!r}")


def multiplier_invariant_factor_count(spec: GroupSpec) -> int | None:
    """Number of invariant factors of H2(G); ``None`` when not known."""
    if isinstance(spec, Abelian):
        return schur_multiplier_abelian(spec.group).rank
    if isinstance(spec, Catalog):
        mult = spec.multiplier()
        return None if mult is None else len(mult)
    return None


def deficiency_lower_bound(spec: GroupSpec) -> int | None:
    return multiplier_invariant_factor_count(spec)


# --- homotopy types of minimal complexes -----------------------------------


def _units(m: int) -> list[int]:
    return [u for u in range(1, m) if gcd(u, m) == 1]


def _browning_subgroup(g: FiniteAbelianGroup) -> set[int]:
    m1, n = g.invariant_factors[0], g.rank
    powers = {pow(u, n - 1, m1) for u in _units(m1)}
    return {p % m1 for p in powers} | {(-p) % m1 for p in powers}


def browning_count(g: FiniteAbelianGroup) -> int:
    """Order of (Z/m1)^* / <-1, (n-1)-st powers>.

    This counts homotopy types of 2-complexes with fundamental group ``g``
    and minimal Euler characteristic.  Requires at least two factors.
    """
    if g.rank < 2:
        raise ValueError("browning_count needs at least two invariant factors")
    return len(_units(g.invariant_factors[0])) // len(_browning_subgroup(g))


def browning_representatives(g: FiniteAbelianGroup) -> list[int]:
    """Smallest positive representative d of each coset; one T_d per homotopy type."""
    if g.rank < 2:
        raise ValueError("browning_representatives needs at least two invariant factors")
    m1 = g.invariant_factors[0]
    h = _browning_subgroup(g)
    reps, covered = [], set()
    for u in _units(m1):
        if u in covered:
            continue
        reps.append(u)
        covered |= {(u * x) % m1 for x in h}
    return reps
