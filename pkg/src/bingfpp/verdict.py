"""Decide whether the standard complex of a presentation can be a Bing space.

A Bing space is a compact 2-dimensional polyhedron with the fixed point
property and nontrivial rational homology.  :func:`analyze` runs a fixed
ladder of obstructions and returns a :class:`Verdict` whose certificate
lists each step with the result it relies on and the concrete data used,
so that every step can be re-checked with the other modules
(:func:`validate_certificate`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Sequence

from . import groups
from .complex2 import (
    CellularMapData,
    build_Rd,
    build_Td,
    chain_complex,
    euler_characteristic,
    inclusion_Rd_to_Td,
    is_chain_map,
    retraction_Td_to_Rd,
    standard_complex,
)
from .groups import Abelian, Catalog, FiniteAbelianGroup, GroupSpec
from .homology import HomologySummary, homology, lefschetz_number
from .intlinalg import IntMatrix, kernel_basis
from .mapdyn.kp import kp_chain_map, kp_nielsen_summary
from .mapdyn.xspace import triangle_presentation, x_nielsen_summary
from .presentations import Presentation, parse_presentation


class Outcome(str, Enum):
    HAS_FPP_LEFSCHETZ = "HasFPP_Lefschetz"
    NOT_BING_NO_FPP = "NotBing_NoFPPUpToHomotopy"
    NOT_BING_S1_RETRACT = "NotBing_S1Retract"
    INCONCLUSIVE = "Inconclusive"

    @property
    def decided(self) -> bool:
        return self is not Outcome.INCONCLUSIVE


# Fixed vocabulary of certificate references.
THEOREM_REFS = (
    "§1",              # H1 with a free summand: S^1 is a retract
    "Lefschetz-§1",    # rationally acyclic: every self-map has Lefschetz number 1
    "Thm 2.2",         # FPP is a homotopy invariant without global separating points
    "Prop 3.3",        # S^2 retract up to homotopy iff #inv. factors of H2(G) < rank H2(X)
    "Thm 3.4",         # trivial Schur multiplier: no Bing spaces
    "Cor 3.5",         # catalog of trivial-multiplier groups
    "Prop 3.7",        # rank H2(X) equals #inv. factors of H2(G)
    "Cor 3.9",         # minimum Euler characteristic / efficiency
    "Lemma 4.2",       # N(f) = 0 map on <a,b | a^m, b^n, [a,b]>
    "Thm 4.3",         # T_d classification of minimal complexes, finite abelian G
    "Cor 4.4",         # two invariant factors: a single homotopy type R_1
    "Lemma 4.5",       # K(R_d) is a retract of K(T_d)
    "Thm 4.6",         # no Bing spaces with abelian fundamental group
    "Thm 5.3",         # A4, S4, A5, dihedral groups
)


KP_GRID = 32
X_RESOLUTION = 64


class SpecMismatchError(ValueError):
    """The declared group is incompatible with the presentation."""


@dataclass(frozen=True)
class Step:
    claim: str
    theorem_ref: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.theorem_ref not in THEOREM_REFS:
            raise ValueError(f"unknown theorem reference {self.theorem_ref!r}")

    def to_dict(self) -> dict:
        return {"claim": self.claim, "theorem_ref": self.theorem_ref, "data": self.data}


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    steps: tuple[Step, ...]

    @property
    def certificate(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]

    @property
    def theorem_refs(self) -> list[str]:
        return [s.theorem_ref for s in self.steps]

    def to_dict(self) -> dict:
        return {"outcome": self.outcome.value, "certificate": self.certificate}


def _h_data(h: HomologySummary) -> dict:
    return h.to_dict()


def _mat(m: IntMatrix) -> list[list[int]]:
    return m.tolist()


def check_spec(p: Presentation, spec: GroupSpec, h: HomologySummary | None = None) -> None:
    """Abelian declarations must match the abelianization of the presentation."""
    if not isinstance(spec, Abelian):
        return
    h = h or homology(standard_complex(p))
    if h.h1_rank or h.h1_torsion != spec.group.invariant_factors:
        raise SpecMismatchError(
            f"abelianization is Z^{h.h1_rank} + {list(h.h1_torsion)}, "
            f"declared {list(spec.group.invariant_factors)}")


def minimum_euler_check(p: Presentation, spec: GroupSpec) -> dict:
    chi = euler_characteristic(standard_complex(p))
    bound = groups.deficiency_lower_bound(spec)
    if bound is None:
        raise ValueError(f"no deficiency bound known for {spec.label()}")
    return {"chi": chi, "lower_bound": bound + 1, "is_minimum_known": chi == bound + 1}


def analyze(p: Presentation, spec: GroupSpec) -> Verdict:
    x = standard_complex(p)
    h = homology(x)
    check_spec(p, spec, h)
    hdata = _h_data(h)

    if h.h1_rank > 0:
        return Verdict(Outcome.NOT_BING_S1_RETRACT, (Step(
            f"H1 has free rank {h.h1_rank}, so S^1 is a retract of K_P and K_P lacks the fixed point property",
            "§1", {"homology": hdata}),))

    if h.h2_rank == 0:
        return Verdict(Outcome.HAS_FPP_LEFSCHETZ, (Step(
            "K_P is rationally acyclic: every self-map has Lefschetz number 1, so K_P has the "
            "fixed point property and is not a Bing space",
            "Lefschetz-§1", {"homology": hdata, "chi": euler_characteristic(x)}),))

    c = groups.multiplier_invariant_factor_count(spec)
    if c is not None and h.h2_rank < c:
        # H2(K_P) surjects onto H2(pi_1), so this group cannot be pi_1
        raise SpecMismatchError(f"rank H2 = {h.h2_rank} is below the {c} invariant factors of H2({spec.label()})")
    d2 = chain_complex(x).d2

    if c is not None and c < h.h2_rank:
        steps = [
            Step(f"H2(G) has {c} invariant factor(s) < rank H2(K_P) = {h.h2_rank}: some spherical "
                 "class is primitive in H2, so K_P is homotopy equivalent to a polyhedron retracting onto S^2",
                 "Prop 3.3", {"multiplier_factor_count": c, "h2_rank": h.h2_rank,
                              "h2_basis": _mat(kernel_basis(d2)), "d2": _mat(d2)}),
            Step("a polyhedron retracting onto S^2 lacks the fixed point property; this transfers to K_P "
                 "when K_P has no global separating points (not verified here)",
                 "Thm 2.2", {"global_separating_points": "not verified"}),
        ]
        steps += _trivial_multiplier_steps(spec, c)
        return Verdict(Outcome.NOT_BING_NO_FPP, tuple(steps))

    if c == 0:
        steps = _trivial_multiplier_steps(spec, c)
        return Verdict(Outcome.NOT_BING_NO_FPP, tuple(steps))

    if isinstance(spec, Abelian):
        return Verdict(Outcome.NOT_BING_NO_FPP, tuple(_abelian_chain(p, spec, h)))

    if isinstance(spec, Catalog) and spec.record.get("triangle_covered"):
        return Verdict(Outcome.NOT_BING_NO_FPP, tuple(_triangle_chain(p, spec)))

    return Verdict(Outcome.INCONCLUSIVE, (Step(
        "rational homology is nontrivial, so the Lefschetz argument does not apply, and no "
        "obstruction is available for the declared group",
        "Lefschetz-§1", {"homology": hdata, "group": spec.label(),
                         "multiplier_factor_count": "unknown" if c is None else c}),))


def _trivial_multiplier_steps(spec: GroupSpec, c: int) -> list[Step]:
    if c != 0:
        return []
    steps = []
    if isinstance(spec, Catalog) and spec.record["trivial_multiplier"]:
        rec = spec.record
        steps.append(Step(f"{rec['family']} have trivial Schur multiplier", "Cor 3.5",
                          {"group": spec.label(), "citation": rec["citation"]}))
    steps.append(Step("H2(G) = 0, so there are no Bing spaces with fundamental group G", "Thm 3.4",
                      {"multiplier_factor_count": 0, "group": spec.label()}))
    return steps


def _abelian_chain(p: Presentation, spec: Abelian, h: HomologySummary) -> list[Step]:
    g = spec.group
    m = list(g.invariant_factors)
    mult = groups.schur_multiplier_abelian(g)
    mincheck = minimum_euler_check(p, spec)
    if not mincheck["is_minimum_known"]:
        # chi >= def(G) + 1 >= c + 1 always; below it the declared group cannot be pi_1
        raise SpecMismatchError(f"chi = {mincheck['chi']} is below the bound {mincheck['lower_bound']}")
    reps = groups.browning_representatives(g)
    steps = [
        Step(f"no Bing space has abelian fundamental group; G = {g}", "Thm 4.6",
             {"invariant_factors": m, "schur_multiplier": list(mult.invariant_factors)}),
        Step("a Bing space with freely indecomposable G has minimum Euler characteristic; "
             "K_P attains the bound", "Cor 3.9", dict(mincheck)),
        Step(f"every minimal complex with pi_1 = G is homotopy equivalent to some K(T_d); "
             f"{len(reps)} homotopy type(s)", "Thm 4.3",
             {"invariant_factors": m, "browning_count": groups.browning_count(g), "d_values": reps,
              "presentations": {str(d): build_Td(m, d).format() for d in reps}}),
        Step("K(R_d) on the first two generators is a retract of K(T_d)", "Lemma 4.5",
             {"retractions": {str(d): _retraction_data(m, d) for d in reps}}),
        Step(f"with two invariant factors {m[0]} | {m[1]} there is one homotopy type, so every K(R_d) "
             "is homotopy equivalent to K(R_1); the fixed point property would pass to it",
             "Cor 4.4",
             {"invariant_factors": m[:2], "browning_count": groups.browning_count(FiniteAbelianGroup(tuple(m[:2]))),
              "R_d": {str(d): build_Rd(m[0], m[1], d).format() for d in reps},
              "R_1": build_Rd(m[0], m[1], 1).format()}),
        _kp_step(m[0], m[1]),
    ]
    return steps


def _retraction_data(m: list[int], d: int) -> dict:
    r = retraction_Td_to_Rd(m, d)
    i = inclusion_Rd_to_Td(m, d)
    ri = r.compose(i)
    return {"f1": _mat(r.f1), "f2": _mat(r.f2),
            "chain_map": is_chain_map(standard_complex(build_Td(m, d)), standard_complex(build_Rd(m[0], m[1], d)), r),
            "retraction_after_inclusion_is_identity": ri.f1 == IntMatrix.identity(2) and ri.f2 == IntMatrix.identity(3)}


def _kp_step(m1: int, m2: int) -> Step:
    rp = build_Rd(m1, m2, 1)
    f = kp_chain_map(m1, m2)
    lam = lefschetz_number(standard_complex(rp), f)
    sim = kp_nielsen_summary(m1, m2, grid=KP_GRID)
    return Step(
        f"K(R_1) = K<a,b | a^{m1}, b^{m2}, [a,b]> has a self-map whose two fixed points, of index +1 and -1, "
        "form one fixed point class, so N(f) = 0 and a homotopic map is fixed point free: contradiction",
        "Lemma 4.2",
        {"m": m1, "n": m2, "presentation": rp.format(), "chain_map": f.to_dict(),
         "lefschetz_number": lam,
         "fixed_points": [repr(q) for q in sim.fixed_points],
         "indices": [r.index for r in sim.indices],
         "fixed_point_classes": sim.classes,
         "nielsen_number": sim.nielsen_number})


def _triangle_chain(p: Presentation, spec: Catalog) -> list[Step]:
    l, m, n = spec.triangle()
    data = {"group": spec.label(), "triangle": [l, m, n], "chi_K_P": euler_characteristic(standard_complex(p)),
            "citation": spec.record["citation"]}
    if n is not None:
        sim = x_nielsen_summary(l, m, n, resolution=X_RESOLUTION)
        data.update({
            "triangle_presentation": triangle_presentation(l, m, n).format(),
            "chi_X": sim.chi_x, "betti_X": list(sim.betti_x),
            "fixed_component_chi": list(sim.component_indices),
            "nielsen_number": sim.nielsen_number,
        })
    return [
        Step(f"no Bing space has fundamental group {spec.name}: K_P is homotopy equivalent to "
             f"X({l},{m},{'n' if n is None else n}), whose reflection has fixed set a union of circles, so "
             "every fixed point class has index 0 and N(f) = 0",
             "Thm 5.3", data),
        Step("the fixed point property is a homotopy invariant here, so K_P lacks it too; global "
             "separating points are not verified", "Thm 2.2", {"global_separating_points": "not verified"}),
    ]


# --- independent re-checking -----------------------------------------------


# Reference sequences each rung may emit, in ladder order.
RUNG_SEQUENCES = {
    1: [("§1",)],
    2: [("Lefschetz-§1",)],
    3: [("Prop 3.3", "Thm 2.2"), ("Prop 3.3", "Thm 2.2", "Thm 3.4"),
        ("Prop 3.3", "Thm 2.2", "Cor 3.5", "Thm 3.4")],
    4: [("Thm 3.4",), ("Cor 3.5", "Thm 3.4")],
    5: [("Thm 4.6", "Cor 3.9", "Thm 4.3", "Lemma 4.5", "Cor 4.4", "Lemma 4.2")],
    6: [("Thm 5.3", "Thm 2.2")],
    7: [("Lefschetz-§1",)],
}
RUNG_OUTCOMES = {1: Outcome.NOT_BING_S1_RETRACT, 2: Outcome.HAS_FPP_LEFSCHETZ, 3: Outcome.NOT_BING_NO_FPP,
                 4: Outcome.NOT_BING_NO_FPP, 5: Outcome.NOT_BING_NO_FPP, 6: Outcome.NOT_BING_NO_FPP,
                 7: Outcome.INCONCLUSIVE}


def ladder_rungs(outcome: Outcome, refs: Sequence[str]) -> list[int]:
    """Rungs whose reference sequence and outcome both match."""
    return [r for r, seqs in RUNG_SEQUENCES.items() if tuple(refs) in seqs and RUNG_OUTCOMES[r] is outcome]


def _as_steps(v) -> tuple[Outcome, list[dict]]:
    if isinstance(v, Verdict):
        return v.outcome, v.certificate
    return Outcome(v["outcome"]), list(v["certificate"])


def _matrix(rows) -> IntMatrix | None:
    return IntMatrix.from_rows(rows) if rows else None


def validate_certificate(p: Presentation, v) -> list[str]:
    """Re-derive every embedded claim from scratch.

    ``v`` is a :class:`Verdict` or its JSON form.  Returns the problems
    found; an empty list means the certificate checks out.
    """
    outcome, steps = _as_steps(v)
    refs = [s["theorem_ref"] for s in steps]
    problems = [f"unknown reference {r!r}" for r in refs if r not in THEOREM_REFS]
    if not ladder_rungs(outcome, refs):
        problems.append(f"reference sequence {refs} does not fit outcome {outcome.value}")
    x = standard_complex(p)
    h = homology(x)
    d2 = chain_complex(x).d2
    chain = None
    for s in steps:
        d: dict[str, Any] = s["data"]
        ref = s["theorem_ref"]
        if ref == "§1" and h.h1_rank == 0:
            problems.append("S^1 retract claimed without free H1")
        elif ref == "Lefschetz-§1" and outcome is Outcome.HAS_FPP_LEFSCHETZ and (h.h1_rank or h.h2_rank):
            problems.append("Lefschetz step on a rationally non-acyclic complex")
        elif ref == "Prop 3.3":
            c, r = d.get("multiplier_factor_count"), d.get("h2_rank")
            if c is None or r is None or not c < r or r != h.h2_rank:
                problems.append("Prop 3.3 needs c < rank H2 with both recorded")
            basis = _matrix(d["h2_basis"])
            if basis is not None and (basis.cols != r or not (d2 @ basis).is_zero()):
                problems.append("embedded H2 basis is not a basis of ker d2")
        elif ref == "Thm 3.4" and d["multiplier_factor_count"] != 0:
            problems.append("Thm 3.4 cited with nontrivial multiplier")
        elif ref == "Thm 4.6":
            chain = list(d["invariant_factors"])
            if list(groups.schur_multiplier_abelian(FiniteAbelianGroup(tuple(chain))).invariant_factors) \
                    != d["schur_multiplier"]:
                problems.append("Schur multiplier mismatch")
        elif ref == "Cor 3.9":
            if d["chi"] != euler_characteristic(x) or d["chi"] != d["lower_bound"]:
                problems.append("Cor 3.9: Euler characteristic not minimal")
        elif ref == "Thm 4.3":
            g = FiniteAbelianGroup(tuple(d["invariant_factors"]))
            if groups.browning_count(g) != d["browning_count"] or len(d["d_values"]) != d["browning_count"]:
                problems.append("Thm 4.3 count mismatch")
            for dv, text in d["presentations"].items():
                if parse_presentation(text) != build_Td(d["invariant_factors"], int(dv)):
                    problems.append(f"T_{dv} presentation mismatch")
        elif ref == "Lemma 4.5":
            for dv, rd in d["retractions"].items():
                td = standard_complex(build_Td(chain, int(dv)))
                rr = standard_complex(build_Rd(chain[0], chain[1], int(dv)))
                f = CellularMapData(IntMatrix.from_rows(rd["f1"]), IntMatrix.from_rows(rd["f2"]))
                if not is_chain_map(td, rr, f):
                    problems.append(f"retraction for d={dv} is not a chain map")
                ri = f.compose(inclusion_Rd_to_Td(chain, int(dv)))
                if ri.f1 != IntMatrix.identity(2) or ri.f2 != IntMatrix.identity(3):
                    problems.append(f"retraction for d={dv} is not the identity on K(R_d)")
        elif ref == "Cor 4.4":
            if groups.browning_count(FiniteAbelianGroup(tuple(d["invariant_factors"]))) != 1:
                problems.append("Cor 4.4 with more than one homotopy type")
            if parse_presentation(d["R_1"]) != build_Rd(*d["invariant_factors"], 1):
                problems.append("R_1 presentation mismatch")
        elif ref == "Lemma 4.2":
            rp = parse_presentation(d["presentation"])
            if chain is not None and rp != build_Rd(chain[0], chain[1], 1):
                problems.append("Lemma 4.2 applied to the wrong complex")
            f = CellularMapData(IntMatrix.from_rows(d["chain_map"]["f1"]), IntMatrix.from_rows(d["chain_map"]["f2"]))
            lam = lefschetz_number(standard_complex(rp), f)
            if lam != 0 or lam != d["lefschetz_number"] or sum(d["indices"]) != lam:
                problems.append("Lemma 4.2: Lefschetz number and index sum must both vanish")
            if d["fixed_point_classes"] != 1 or d["nielsen_number"] != 0:
                problems.append("Lemma 4.2: expected a single inessential fixed point class")
        elif ref == "Thm 5.3":
            if d["chi_K_P"] != euler_characteristic(x):
                problems.append("chi(K_P) mismatch")
            if "triangle_presentation" in d:
                l, m, n = d["triangle"]
                tp = parse_presentation(d["triangle_presentation"])
                if tp != triangle_presentation(l, m, n):
                    problems.append("triangle presentation mismatch")
                if euler_characteristic(standard_complex(tp)) != d["chi_X"] or d["chi_X"] != d["chi_K_P"]:
                    problems.append("chi(X) differs from chi(K_P)")
                if any(d["fixed_component_chi"]) or d["nielsen_number"] != 0:
                    problems.append("fixed component with nonzero index")
    return problems
