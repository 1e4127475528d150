"""Fixed set of the reflection of X(l,m,n) for the triangle data of A4, S4, A5 and some dihedral groups."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from bingfpp.mapdyn.xspace import x_nielsen_summary


@dataclass
class Config:
    triangles: dict = field(default_factory=lambda: {
        "A4": (2, 3, 3), "S4": (2, 3, 4), "A5": (2, 3, 5), "D6": (2, 2, 3), "D8": (2, 2, 4), "D10": (2, 2, 5)})
    resolution: int = 128
    out: str | None = None


def main(cfg: Config) -> dict:
    rows = {}
    print(f"{'group':<5} {'(l,m,n)':<10} components  chi per component  N(f)  chi(X)  chi(K_P)")
    for name, lmn in cfg.triangles.items():
        s = x_nielsen_summary(*lmn, resolution=cfg.resolution)
        print(f"{name:<5} {str(lmn):<10} {len(s.components):>10}  {str(list(s.component_indices)):<17}"
              f"  {s.nielsen_number:>4}  {s.chi_x:>6}  {s.chi_kp:>8}")
        rows[name] = s.to_dict()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2, sort_keys=True)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--resolution", type=int, default=Config.resolution)
    ap.add_argument("--out")
    args = ap.parse_args()
    main(Config(resolution=args.resolution, out=args.out))
