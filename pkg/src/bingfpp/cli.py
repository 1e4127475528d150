"""Command line interface.

Every subcommand builds a report ``{command, inputs, result, version}``;
``--json`` prints it as sorted JSON, otherwise a short text rendering is
printed.  Exit codes: 0 success, 2 usage error, 3 inconclusive verdict,
4 a numerical check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, groups
from .complex2 import build_Td, euler_characteristic, standard_complex
from .homology import homology
from .intlinalg import IntMatrix, invariant_factors, smith_normal_form
from .mapdyn.kp import kp_nielsen_summary
from .mapdyn.winding import IndexComputationError
from .mapdyn.xspace import SeamResolutionError, x_nielsen_summary
from .presentations import parse_presentation
from .verdict import Outcome, SpecMismatchError, analyze

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_NUMERIC = 0, 2, 3, 4


class UsageError(Exception):
    pass


class NumericalFailure(Exception):
    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report


def _read_presentation(arg: str):
    text = arg
    if arg.startswith("@"):
        try:
            text = Path(arg[1:]).read_text()
        except OSError as e:
            raise UsageError(f"cannot read {arg[1:]}: {e.strerror}") from None
    elif not arg.lstrip().startswith("<") and Path(arg).is_file():
        text = Path(arg).read_text()
    return parse_presentation(text.strip())


def _parse_matrix(text: str) -> IntMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"matrix is not valid JSON: {e.msg}") from None
    if not isinstance(rows, list) or not all(
            isinstance(r, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in r) for r in rows):
        raise UsageError("matrix must be a list of integer rows")
    return IntMatrix.from_rows(rows)


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# --- subcommands -------------------------------------------------------------


def cmd_snf(args) -> tuple[dict, dict, list[str]]:
    m = _parse_matrix(args.matrix)
    dec = smith_normal_form(m)
    inv = invariant_factors(m)
    result = {"U": dec.U.tolist(), "D": dec.D.tolist(), "V": dec.V.tolist(), "diagonal": list(dec.diagonal),
              "rank": dec.rank, "invariant_factors": list(inv.nontrivial), "unit_count": inv.unit_count}
    text = [f"D = diag({', '.join(map(str, dec.diagonal))})", f"rank = {dec.rank}"]
    return {"matrix": m.tolist()}, result, text


def cmd_homology(args):
    p = _read_presentation(args.presentation)
    x = standard_complex(p)
    h = homology(x)
    result = {**h.to_dict(), "chi": euler_characteristic(x)}
    text = [f"H0 = {result['H0']}", f"H1 = {result['H1']}", f"H2 = {result['H2']}", f"chi = {result['chi']}"]
    return {"presentation": p.format()}, result, text


def cmd_analyze(args):
    p = _read_presentation(args.presentation)
    spec = groups.parse_group_spec(args.group)
    v = analyze(p, spec)
    text = [f"outcome: {v.outcome.value}"]
    for i, s in enumerate(v.steps, 1):
        text.append(f"  {i}. [{s.theorem_ref}] {s.claim}")
    return {"presentation": p.format(), "group": spec.label()}, v.to_dict(), text


def cmd_classify_abelian(args):
    g = groups.canonicalize_abelian(_parse_ints(args.invariants))
    if g.rank < 2:
        raise UsageError("classification needs at least two invariant factors")
    reps = groups.browning_representatives(g)
    m = list(g.invariant_factors)
    result = {"invariant_factors": m, "schur_multiplier": list(groups.schur_multiplier_abelian(g).invariant_factors),
              "browning_count": groups.browning_count(g), "d_values": reps,
              "T_d": {str(d): build_Td(m, d).format() for d in reps}}
    text = [f"G = {g}", f"browning count = {result['browning_count']}"]
    text += [f"  T_{d}: {result['T_d'][str(d)]}" for d in reps]
    return {"invariants": _parse_ints(args.invariants)}, result, text


def cmd_simulate_kp(args):
    try:
        s = kp_nielsen_summary(args.m, args.n, grid=args.grid)
    except IndexComputationError as e:
        raise NumericalFailure(str(e)) from None
    result = s.to_dict()
    inputs = {"m": args.m, "n": args.n, "grid": args.grid}
    ok = (s.path_check.passed() and s.seam_residual < 1e-10 and len(s.fixed_points) == 2
          and sum(r.index for r in s.indices) == s.lefschetz_number)
    text = [f"fixed points: {', '.join(map(repr, s.fixed_points))}",
            f"indices: {[r.index for r in s.indices]}", f"Lefschetz number: {s.lefschetz_number}",
            f"Nielsen number: {s.nielsen_number}", f"seam residual: {s.seam_residual:.3g}"]
    if not ok:
        raise NumericalFailure("kp checks failed", (inputs, result, text))
    return inputs, result, text


def cmd_simulate_x(args):
    if args.resolution < 64:
        raise UsageError("resolution must be at least 64")
    try:
        s = x_nielsen_summary(args.l, args.m, args.n, resolution=args.resolution)
    except SeamResolutionError as e:
        raise NumericalFailure(str(e)) from None
    result = s.to_dict()
    inputs = {"l": args.l, "m": args.m, "n": args.n, "resolution": args.resolution}
    text = [f"fixed components: {len(s.components)}", f"component chi: {list(s.component_indices)}",
            f"Nielsen number: {s.nielsen_number}", f"chi(X) = {s.chi_x}, chi(K_P) = {s.chi_kp}"]
    if s.nielsen_number != 0 or s.boundary_residual > 1e-12:
        raise NumericalFailure("x checks failed", (inputs, result, text))
    return inputs, result, text


def cmd_catalog(args):
    rows = groups.catalog_table()
    text = []
    for r in rows:
        mult = "trivial" if r["trivial_multiplier"] else ("?" if r["multiplier"] is None else
                                                          " x ".join(f"Z_{k}" for k in r["multiplier"]))
        text.append(f"{r['name']:<28} {mult:<10} {r['family']}")
    return {}, {"catalog_version": groups.catalog_version(), "rows": rows}, text


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bingfpp", description="Bing space obstructions and fixed point data.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="print the JSON report")
        sp.set_defaults(fn=fn)
        return sp

    add("snf", cmd_snf, "Smith normal form").add_argument("--matrix", required=True, help='e.g. "[[4,0],[0,6]]"')
    add("homology", cmd_homology, "cellular homology of K_P").add_argument(
        "-p", "--presentation", required=True, help="inline presentation, @file or a path")
    sp = add("analyze", cmd_analyze, "Bing space verdict with certificate")
    sp.add_argument("-p", "--presentation", required=True)
    sp.add_argument("--group", default="unknown", help="abelian:2,4 | catalog:A5 | catalog:D2n:6 | unknown")
    sp.add_argument("--format", choices=("json", "text"), default=None)
    add("classify-abelian", cmd_classify_abelian, "minimal complexes for a finite abelian group").add_argument(
        "--invariants", required=True, help="comma-separated cyclic orders")
    sp = add("simulate-kp", cmd_simulate_kp, "fixed point data of the map on K<a,b|a^m,b^n,[a,b]>")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--grid", type=int, default=64)
    sp = add("simulate-x", cmd_simulate_x, "fixed set of the reflection on X(l,m,n)")
    for k in ("l", "m", "n"):
        sp.add_argument(f"--{k}", type=int, required=True)
    sp.add_argument("--resolution", type=int, default=128)
    add("catalog", cmd_catalog, "groups with known Schur multiplier")
    return ap


def _emit(args, inputs, result, text, out) -> None:
    as_json = args.json or getattr(args, "format", None) == "json"
    if as_json:
        report = {"command": args.command, "inputs": inputs, "result": result, "version": __version__}
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(text) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        inputs, result, text = args.fn(args)
    except NumericalFailure as e:
        if e.report:
            _emit(args, *e.report, out)
        print(f"bingfpp: numerical check failed: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, SpecMismatchError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"bingfpp {args.command}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, inputs, result, text, out)
    if args.command == "analyze" and result["outcome"] == Outcome.INCONCLUSIVE.value:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
