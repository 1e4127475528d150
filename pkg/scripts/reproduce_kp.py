"""Fixed point data of the self-map of K<a,b | a^m, b^n, [a,b]> over a sweep of (m, n)."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from bingfpp.mapdyn.kp import kp_nielsen_summary


@dataclass
class Config:
    pairs: list = field(default_factory=lambda: [(2, 2), (2, 3), (5, 7), (6, 10), (3, 9)])
    grid: int = 128
    out: str | None = None


def main(cfg: Config) -> list[dict]:
    rows = []
    print(f"{'m':>3} {'n':>3}  fixed points              indices    L(f)  N(f)  max path err  seam")
    for m, n in cfg.pairs:
        s = kp_nielsen_summary(m, n, grid=cfg.grid)
        pc = s.path_check
        err = max(pc.eq1_max_err, pc.eq2_max_err, pc.eq3_max_err, pc.junction_err)
        print(f"{m:>3} {n:>3}  {', '.join(map(repr, s.fixed_points)):<26}"
              f"{str([r.index for r in s.indices]):<9} {s.lefschetz_number:>4} {s.nielsen_number:>5}"
              f"  {err:12.2e}  {s.seam_residual:.1e}")
        rows.append(s.to_dict())
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2, sort_keys=True)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=Config.grid)
    ap.add_argument("--out")
    args = ap.parse_args()
    main(Config(grid=args.grid, out=args.out))
