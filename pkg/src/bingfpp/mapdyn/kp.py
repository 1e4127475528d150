"""The fixed-point-free-up-to-homotopy self-map of K<a,b | a^m, b^n, [a,b]>.

The complex is modelled as a torus T = S^1 x S^1 (angles theta, psi) with two
disks glued on: the boundary point exp(i*alpha) of disk A goes to
(m*alpha, 0) on the torus, and that of disk B to (0, n*alpha).

The map is

* on T:       (z, w) -> (-z, -conj(w))
* on disk A:  z -> 2z for |z| <= 1/2, and
              z -> ((z/|z|)^m e^{i pi (2|z|-1)}, e^{i pi (2|z|-1)}) in T otherwise
* on disk B:  z -> 2 conj(z) for |z| <= 1/2, and
              z -> (e^{i pi (2|z|-1)}, (conj(z)/|z|)^n e^{i pi (2|z|-1)}) in T otherwise

Its only fixed points are the two disk centres, with indices +1 and -1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..complex2 import CellularMapData, standard_complex
from ..homology import lefschetz_number
from ..intlinalg import IntMatrix
from ..presentations import Presentation, Word, commutator
from .winding import IndexReport, fixed_point_index

TWO_PI = 2 * math.pi
SEAM_EPS = 1e-12
DEFAULT_TOL = 1e-9
CLUSTER_RADIUS = 1e-6


class InvalidChartPoint(ValueError):
    pass


@dataclass(frozen=True)
class Torus:
    theta: float
    psi: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)
        object.__setattr__(self, "psi", float(self.psi) % TWO_PI)


@dataclass(frozen=True)
class DiskA:
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        if abs(self.z) > 1 + SEAM_EPS:
            raise InvalidChartPoint(f"|z| = {abs(self.z)} > 1")


@dataclass(frozen=True)
class DiskB(DiskA):
    pass


KPPoint = Union[Torus, DiskA, DiskB]


def _check_params(m: int, n: int) -> None:
    if int(m) != m or int(n) != n or m < 2 or n < 2:
        raise ValueError(f"m, n must be integers >= 2, got {m}, {n}")


def angular_distance(a: float, b: float) -> float:
    d = (a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _boundary_image(m: int, n: int, p: DiskA) -> Torus:
    alpha = cmath.phase(p.z) if p.z else 0.0
    if type(p) is DiskA:
        return Torus(m * alpha, 0.0)
    return Torus(0.0, n * alpha)


def canonical(m: int, n: int, p: KPPoint) -> KPPoint:
    """Boundary disk points are rewritten as the torus points they are glued to."""
    if isinstance(p, DiskA) and abs(p.z) >= 1 - SEAM_EPS:
        return _boundary_image(m, n, p)
    return p


def chart_distance(m: int, n: int, p: KPPoint, q: KPPoint) -> float:
    """Max-angle metric on T, modulus on disks; otherwise pulled back to the seam."""
    p, q = canonical(m, n, p), canonical(m, n, q)
    if isinstance(p, Torus) and isinstance(q, Torus):
        return max(angular_distance(p.theta, q.theta), angular_distance(p.psi, q.psi))
    if type(p) is type(q):
        return abs(p.z - q.z)
    gap = 0.0
    if not isinstance(p, Torus):
        gap += 1 - abs(p.z)
        p = _boundary_image(m, n, p)
    if not isinstance(q, Torus):
        gap += 1 - abs(q.z)
        q = _boundary_image(m, n, q)
    return gap + chart_distance(m, n, p, q)


def _a_inner(m, n, z):
    return DiskA(2 * z)


def _a_annulus(m, n, z):
    s = math.pi * (2 * abs(z) - 1)
    return Torus(m * cmath.phase(z) + s, s)


def _b_inner(m, n, z):
    return DiskB(2 * z.conjugate())


def _b_annulus(m, n, z):
    s = math.pi * (2 * abs(z) - 1)
    return Torus(s, -n * cmath.phase(z) + s)


_BRANCHES = {"DiskA": (_a_inner, _a_annulus), "DiskB": (_b_inner, _b_annulus)}


def kp_map(m: int, n: int, p: KPPoint) -> KPPoint:
    _check_params(m, n)
    if isinstance(p, Torus):
        return Torus(p.theta + math.pi, math.pi - p.psi)
    if not isinstance(p, DiskA):
        raise InvalidChartPoint(f"not a chart point: {p!r}")
    inner, annulus = _BRANCHES[type(p).__name__]
    return inner(m, n, p.z) if abs(p.z) <= 0.5 else annulus(m, n, p.z)


def residual(m: int, n: int, p: KPPoint) -> float:
    return chart_distance(m, n, kp_map(m, n, p), p)


# --- vectorised evaluation for grid searches ------------------------------


def _ang(a):
    d = np.mod(a, TWO_PI)
    return np.minimum(d, TWO_PI - d)


def residual_torus_grid(m: int, n: int, theta, psi):
    ftheta, fpsi = theta + math.pi, math.pi - psi
    return np.maximum(_ang(ftheta - theta), _ang(fpsi - psi))


def residual_disk_grid(m: int, n: int, chart: type, z):
    """Residual of kp_map on an array of points of disk A or B (|z| <= 1)."""
    r = np.abs(z)
    alpha = np.angle(z)
    s = math.pi * (2 * r - 1)
    if chart is DiskA:
        inner = np.abs(2 * z - z)
        img_t, img_p = m * alpha + s, s
        own_t, own_p = m * alpha, np.zeros_like(r)
    else:
        inner = np.abs(2 * np.conj(z) - z)
        img_t, img_p = s, -n * alpha + s
        own_t, own_p = np.zeros_like(r), n * alpha
    # interior point vs its torus-valued image: distance through the seam
    outer = (1 - r) + np.maximum(_ang(img_t - own_t), _ang(img_p - own_p))
    on_seam = r >= 1 - SEAM_EPS
    seam = np.maximum(_ang(img_t - own_t), _ang(img_p - own_p))
    return np.where(r <= 0.5, inner, np.where(on_seam, seam, outer))


def residual_grids(m: int, n: int, grid: int) -> dict:
    """Residuals on a regular grid of every chart (used by search and certification)."""
    _check_params(m, n)
    ang = TWO_PI * np.arange(grid) / grid
    th, ps = np.meshgrid(ang, ang, indexing="ij")
    xs = np.linspace(-1.0, 1.0, grid + 1)
    x, y = np.meshgrid(xs, xs, indexing="ij")
    z = x + 1j * y
    inside = np.abs(z) <= 1.0
    out = {"torus": (th, ps, residual_torus_grid(m, n, th, ps))}
    for chart in (DiskA, DiskB):
        res = np.full(z.shape, np.inf)
        res[inside] = residual_disk_grid(m, n, chart, z[inside])
        out[chart.__name__] = (z, res)
    return out


def _local_minima(res: np.ndarray, wrap: bool) -> list[tuple[int, int]]:
    if wrap:
        padded = np.pad(res, 1, mode="wrap")
    else:
        padded = np.pad(res, 1, mode="constant", constant_values=np.inf)
    core = padded[1:-1, 1:-1]
    is_min = np.ones_like(core, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                nb = padded[1 + di:padded.shape[0] - 1 + di, 1 + dj:padded.shape[1] - 1 + dj]
                is_min &= core <= nb
    return [tuple(ix) for ix in np.argwhere(is_min & np.isfinite(core))]


def _refine(m: int, n: int, make, x0: float, y0: float, step: float, tol: float):
    """Coordinate-wise bisection of the residual: probe +-step per axis, halve on failure."""
    best = (x0, y0)
    fbest = residual(m, n, make(*best))
    while step > 1e-14 and fbest > tol * 1e-3:
        moved = False
        for axis in (0, 1):
            for sign in (1, -1):
                cand = list(best)
                cand[axis] += sign * step
                try:
                    fc = residual(m, n, make(*cand))
                except InvalidChartPoint:
                    continue
                if fc < fbest:
                    best, fbest, moved = tuple(cand), fc, True
        if not moved:
            step /= 2
    return make(*best), fbest


_COARSE = 1.0  # grid minima above this residual are not refined


def kp_fixed_points(m: int, n: int, grid: int = 64, tol: float = DEFAULT_TOL) -> list[KPPoint]:
    """Fixed points of kp_map found by grid search plus local refinement.

    Results are merged within ``CLUSTER_RADIUS`` and returned in a canonical
    order (disk A, disk B, torus; then by coordinates).
    """
    if grid < 32 or tol <= 0:
        raise ValueError("need grid >= 32 and tol > 0")
    grids = residual_grids(m, n, grid)
    found: list[tuple[KPPoint, float]] = []

    th, ps, res = grids["torus"]
    for i, j in _local_minima(res, wrap=True):
        if res[i, j] < _COARSE:
            found.append(_refine(m, n, Torus, th[i, j], ps[i, j], TWO_PI / grid, tol))
    for chart in (DiskA, DiskB):
        z, res = grids[chart.__name__]
        for i, j in _local_minima(res, wrap=False):
            if res[i, j] < _COARSE:
                mk = lambda x, y, c=chart: c(complex(x, y))
                found.append(_refine(m, n, mk, z[i, j].real, z[i, j].imag, 2.0 / grid, tol))

    merged: list[KPPoint] = []
    for p, r in found:
        if r >= tol:
            continue
        if any(type(q) is type(p) and chart_distance(m, n, p, q) < CLUSTER_RADIUS for q in merged):
            continue
        merged.append(p)
    return sorted(merged, key=_order_key)


def _order_key(p: KPPoint):
    if isinstance(p, Torus):
        return (2, p.theta, p.psi)
    return (0 if type(p) is DiskA else 1, p.z.real, p.z.imag)


def kp_index(m: int, n: int, p: DiskA, radius: float = 0.1, samples: int = 512) -> IndexReport:
    return fixed_point_index(lambda q: kp_map(m, n, q), p, radius, samples)


def kp_seam_residual(m: int, n: int, samples: int = 1000) -> float:
    """Largest disagreement between branches of kp_map across every seam.

    Checks |z| = 1/2 inside each disk (inner vs annulus formula) and |z| = 1
    (disk formula vs the torus formula at the glued point).
    """
    _check_params(m, n)
    if samples < 8:
        raise ValueError("need at least 8 samples")
    worst = 0.0
    for k in range(samples):
        u = cmath.exp(1j * TWO_PI * k / samples)
        for chart in (DiskA, DiskB):
            inner, annulus = _BRANCHES[chart.__name__]
            # |z| = 1/2: the two disk formulas agree
            worst = max(worst, chart_distance(m, n, inner(m, n, 0.5 * u), annulus(m, n, 0.5 * u)))
            # |z| = 1: the disk formula agrees with the torus map at the glued point
            on_torus = kp_map(m, n, _boundary_image(m, n, chart(u)))
            worst = max(worst, chart_distance(m, n, annulus(m, n, u), on_torus))
    return worst


# --- Nielsen data ----------------------------------------------------------


def _concat(p1, p2):
    return lambda t: p1(2 * t) if t <= 0.5 else p2(2 * t - 1)


def kp_paths():
    """The four real-axis paths joining DiskA(0) to DiskB(0) through the torus."""
    return {
        "gamma_a": lambda t: DiskA(t / 2),
        "delta_a": lambda t: DiskA(0.5 + t / 2),
        "delta_b": lambda t: DiskB(1 - t / 2),
        "gamma_b": lambda t: DiskB(0.5 - t / 2),
    }


@dataclass(frozen=True)
class PathCheck:
    eq1_max_err: float
    eq2_max_err: float
    eq3_max_err: float
    junction_err: float

    def passed(self, tol: float = 1e-10) -> bool:
        return max(self.eq1_max_err, self.eq2_max_err, self.eq3_max_err, self.junction_err) < tol

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("eq1_max_err", "eq2_max_err", "eq3_max_err", "junction_err")}


def kp_nielsen_path_check(m: int, n: int, samples: int = 100) -> PathCheck:
    """Pointwise check that the joining path c satisfies c ~ f o c.

    (1) gamma_a * delta_a == f o gamma_a
    (2) delta_b * gamma_b == f o gamma_b
    (3) (f o delta_a)(t) == (f o delta_b)(1 - t), so their product is null
    """
    _check_params(m, n)
    if samples < 16:
        raise ValueError("need at least 16 samples")
    P = kp_paths()
    f = lambda q: kp_map(m, n, q)
    d = lambda p, q: chart_distance(m, n, p, q)
    ga_da = _concat(P["gamma_a"], P["delta_a"])
    db_gb = _concat(P["delta_b"], P["gamma_b"])
    ts = np.linspace(0.0, 1.0, samples)
    e1 = max(d(ga_da(t), f(P["gamma_a"](t))) for t in ts)
    e2 = max(d(db_gb(t), f(P["gamma_b"](t))) for t in ts)
    e3 = max(d(f(P["delta_a"](t)), f(P["delta_b"](1 - t))) for t in ts)
    # the joined path gamma_a * delta_a * delta_b * gamma_b is continuous
    junction = max(d(P["gamma_a"](1.0), P["delta_a"](0.0)),
                   d(P["delta_a"](1.0), P["delta_b"](0.0)),
                   d(P["delta_b"](1.0), P["gamma_b"](0.0)))
    return PathCheck(float(e1), float(e2), float(e3), float(junction))


def kp_presentation(m: int, n: int) -> Presentation:
    a, b = Word.gen(0), Word.gen(1)
    return Presentation(("a", "b"), (a ** m, b ** n, commutator(a, b)))


def kp_chain_map(m: int, n: int) -> CellularMapData:
    """Cellular chain data of kp_map on cells (a, b | a^m, b^n, [a,b]).

    On 1-chains a -> a, b -> -b (the torus map reverses the second circle).
    The inner halves of the disks map with degree +1 and -1, and the torus
    cell with degree -1 (orientation-reversing reflection).
    """
    _check_params(m, n)
    return CellularMapData(IntMatrix.diag([1, -1]), IntMatrix.diag([1, -1, -1]))


@dataclass(frozen=True)
class KPSummary:
    m: int
    n: int
    fixed_points: tuple
    indices: tuple[IndexReport, ...]
    path_check: PathCheck
    lefschetz_number: int
    classes: int
    class_index_sum: int
    nielsen_number: int
    seam_residual: float

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "fixed_points": [repr(p) for p in self.fixed_points],
            "indices": [r.to_dict() for r in self.indices],
            "path_check": self.path_check.to_dict(),
            "lefschetz_number": self.lefschetz_number,
            "classes": self.classes,
            "class_index_sum": self.class_index_sum,
            "nielsen_number": self.nielsen_number,
            "seam_residual": self.seam_residual,
        }


def kp_nielsen_summary(m: int, n: int, grid: int = 64, path_tol: float = 1e-10) -> KPSummary:
    fps = kp_fixed_points(m, n, grid)
    reports = tuple(kp_index(m, n, p) for p in fps)
    paths = kp_nielsen_path_check(m, n, 100)
    lam = lefschetz_number(standard_complex(kp_presentation(m, n)), kp_chain_map(m, n))
    index_sum = sum(r.index for r in reports)
    ends = [DiskA(0), DiskB(0)]
    joined = len(fps) == 2 and all(chart_distance(m, n, p, q) < CLUSTER_RADIUS for p, q in zip(fps, ends))
    if joined and paths.passed(path_tol):
        # the path check puts both disk centres in one fixed point class
        classes = 1
        nielsen = int(index_sum != 0)
    else:
        classes = len(fps)
        nielsen = sum(1 for r in reports if r.index != 0)
    return KPSummary(m, n, tuple(fps), reports, paths, lam, classes, index_sum, nielsen,
                     kp_seam_residual(m, n, 1000))
