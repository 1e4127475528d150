"""Run the verdict ladder over a table of presentations and declared groups."""

import argparse
from dataclasses import dataclass, field

from bingfpp.complex2 import build_Td
from bingfpp.groups import parse_group_spec
from bingfpp.presentations import parse_presentation
from bingfpp.verdict import analyze, validate_certificate

DEFAULT_ROWS = [
    ("<a,b | a^2, b^2, [a,b]>", "abelian:2,2"),
    ("<a | a^5>", "abelian:5"),
    ("<a,b | a^2, b^3>", "unknown"),
    ("<a,b,c | a^2, b^3, c^5, abc>", "catalog:A5"),
    ("<a,b,c | a^2, b^3, c^4, abc>", "catalog:S4"),
    ("<a,b,c | a^2, b^2, c^6, abc>", "catalog:D2n:6"),
    (build_Td([8, 8, 8], 3).format(), "abelian:8,8,8"),
    ("<a,b | a^2, b^2, [a,b], a^2>", "abelian:2,2"),
    ("<a | a, a>", "catalog:M11"),
    ("<a | a, a>", "unknown"),
    ("<a,b | [a,b]>", "unknown"),
]


@dataclass
class Config:
    rows: list = field(default_factory=lambda: list(DEFAULT_ROWS))
    show_claims: bool = False


def main(cfg: Config) -> None:
    for text, spec in cfg.rows:
        p = parse_presentation(text)
        v = analyze(p, parse_group_spec(spec))
        ok = "ok" if not validate_certificate(p, v) else "INVALID"
        print(f"{spec:<16} {v.outcome.value:<26} {' > '.join(v.theorem_refs):<58} [{ok}]  {text}")
        if cfg.show_claims:
            for s in v.steps:
                print(f"    {s.theorem_ref}: {s.claim}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--claims", action="store_true", help="print each certificate claim")
    main(Config(show_claims=ap.parse_args().claims))
