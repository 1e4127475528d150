"""The space X(l,m,n) and its reflection map.

X is the sphere with three caps removed,

    S = {x^2 + y^2 + z^2 = 1, x <= 4/5, |y| <= 4/5},

with three disks attached along its boundary circles by

    phi_a(w) = ( 3/5 Re w^l, -4/5, 3/5 Im w^l)
    phi_b(w) = ( 4/5, 3/5 Re w^m, 3/5 Im w^m)
    phi_c(w) = (-3/5 Re w^n,  4/5, 3/5 Im w^n)

The map reflects S in the plane z = 0 and conjugates every disk.  Its fixed
set is the equator of S together with the real diameters of the disks; each
component is a circle up to homotopy, so every fixed point class has index 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..complex2 import euler_characteristic, standard_complex
from ..intlinalg import IntMatrix, smith_normal_form
from ..presentations import Presentation, Word
from .graphs import components

SEAM_EPS = 1e-12
FIXED_TOL = 1e-9


class InvalidChartPoint(ValueError):
    pass


class SeamResolutionError(RuntimeError):
    """Sampling too coarse to join fixed arcs across a seam."""


@dataclass(frozen=True)
class Surface:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for k in ("x", "y", "z"):
            object.__setattr__(self, k, float(getattr(self, k)))
        if abs(self.x ** 2 + self.y ** 2 + self.z ** 2 - 1) > 1e-9:
            raise InvalidChartPoint(f"({self.x}, {self.y}, {self.z}) is not on the unit sphere")
        if self.x > 0.8 + 1e-9 or abs(self.y) > 0.8 + 1e-9:
            raise InvalidChartPoint(f"({self.x}, {self.y}, {self.z}) lies in a removed cap")

    def vec(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class DiskA:
    w: complex

    def __post_init__(self):
        object.__setattr__(self, "w", complex(self.w))
        if abs(self.w) > 1 + SEAM_EPS:
            raise InvalidChartPoint(f"|w| = {abs(self.w)} > 1")

    @property
    def z(self) -> complex:  # planar coordinate, shared with the index machinery
        return self.w


@dataclass(frozen=True)
class DiskB(DiskA):
    pass


@dataclass(frozen=True)
class DiskC(DiskA):
    pass


XPoint = Union[Surface, DiskA, DiskB, DiskC]


def _check_params(l: int, m: int, n: int) -> None:
    if any(int(v) != v or v < 2 for v in (l, m, n)):
        raise ValueError(f"l, m, n must be integers >= 2, got {l}, {m}, {n}")


def attaching_point(l: int, m: int, n: int, chart: type, w: complex) -> np.ndarray:
    """phi_a, phi_b or phi_c at a unit complex number (array-friendly)."""
    w = np.asarray(w)
    if chart is DiskA:
        p = w ** l
        return np.stack([0.6 * p.real, np.full(p.shape, -0.8), 0.6 * p.imag], axis=-1)
    if chart is DiskB:
        p = w ** m
        return np.stack([np.full(p.shape, 0.8), 0.6 * p.real, 0.6 * p.imag], axis=-1)
    if chart is DiskC:
        p = w ** n
        return np.stack([-0.6 * p.real, np.full(p.shape, 0.8), 0.6 * p.imag], axis=-1)
    raise InvalidChartPoint(f"{chart!r} is not a disk chart")


def _glued(l, m, n, p: DiskA) -> Surface:
    w = p.w / abs(p.w) if p.w else 1.0
    v = attaching_point(l, m, n, type(p), w)
    return Surface(*_project(v))


def _project(v):
    # cancel rounding so the glued point passes the on-sphere check
    v = np.asarray(v, dtype=float)
    return tuple(v / np.linalg.norm(v))


def canonical(l: int, m: int, n: int, p: XPoint) -> XPoint:
    if isinstance(p, DiskA) and abs(p.w) >= 1 - SEAM_EPS:
        return _glued(l, m, n, p)
    return p


def chart_distance(l: int, m: int, n: int, p: XPoint, q: XPoint) -> float:
    """Euclidean on S, modulus on disks; otherwise pulled back to the seam."""
    p, q = canonical(l, m, n, p), canonical(l, m, n, q)
    if isinstance(p, Surface) and isinstance(q, Surface):
        return float(np.linalg.norm(p.vec() - q.vec()))
    if type(p) is type(q):
        return abs(p.w - q.w)
    gap = 0.0
    if not isinstance(p, Surface):
        gap += 1 - abs(p.w)
        p = _glued(l, m, n, p)
    if not isinstance(q, Surface):
        gap += 1 - abs(q.w)
        q = _glued(l, m, n, q)
    return gap + chart_distance(l, m, n, p, q)


def x_map(l: int, m: int, n: int, p: XPoint) -> XPoint:
    _check_params(l, m, n)
    if isinstance(p, Surface):
        return Surface(p.x, p.y, -p.z)
    if isinstance(p, DiskA):
        return type(p)(p.w.conjugate())
    raise InvalidChartPoint(f"not a chart point: {p!r}")


def x_boundary_residual(l: int, m: int, n: int, samples: int = 1000) -> float:
    """max |f(phi(w)) - phi(conj w)| over sampled boundary points of every disk."""
    _check_params(l, m, n)
    worst = 0.0
    for k in range(samples):
        w = complex(math.cos(2 * math.pi * k / samples), math.sin(2 * math.pi * k / samples))
        for chart in (DiskA, DiskB, DiskC):
            on_s = Surface(*_project(attaching_point(l, m, n, chart, w)))
            lhs = x_map(l, m, n, on_s).vec()
            rhs = attaching_point(l, m, n, chart, w.conjugate())
            worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


# --- fixed set --------------------------------------------------------------


@dataclass(frozen=True)
class FixedComponent:
    component_id: int
    sampled_vertices: int
    sampled_edges: int
    simplified_vertices: int
    simplified_edges: int
    charts: tuple[str, ...]

    @property
    def estimated_chi(self) -> int:
        return self.sampled_vertices - self.sampled_edges

    def to_dict(self) -> dict:
        return {
            "component_id": self.component_id,
            "sampled_vertices": self.sampled_vertices,
            "sampled_edges": self.sampled_edges,
            "simplified_vertices": self.simplified_vertices,
            "simplified_edges": self.simplified_edges,
            "estimated_chi": self.estimated_chi,
            "charts": list(self.charts),
        }


def _grid_edges(idx: np.ndarray) -> list[tuple[int, int]]:
    """4-neighbour edges among the grid cells marked with node ids (-1 = absent)."""
    edges = []
    rows, cols = idx.shape
    for i, j in np.argwhere(idx >= 0):
        for di, dj in ((1, 0), (0, 1)):
            a, b = i + di, j + dj
            if a < rows and b < cols and idx[a, b] >= 0:
                edges.append((int(idx[i, j]), int(idx[a, b])))
    return edges


def x_fixed_components(l: int, m: int, n: int, resolution: int = 128, glue: bool = True) -> list[FixedComponent]:
    """Components of the sampled fixed set of x_map.

    Every chart is sampled on a regular grid and grid points with residual
    below ``FIXED_TOL`` are kept.  Grid neighbours are joined; with ``glue``,
    the fixed sample of each disk nearest its boundary is joined to the
    closest fixed sample of S through the attaching map.  The Euler
    characteristic of each component is V - E of the resulting 1-complex.
    """
    _check_params(l, m, n)
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    nodes: list[tuple[str, object]] = []
    edges: list[tuple[int, int]] = []

    # S, parametrised by longitude and height
    nt, nz = 4 * resolution, 2 * resolution + 1
    t = -math.pi + 2 * math.pi * np.arange(nt) / nt
    h = np.linspace(-1.0, 1.0, nz)
    T, H = np.meshgrid(t, h, indexing="ij")
    rho = np.sqrt(np.clip(1 - H ** 2, 0, None))
    X, Y = rho * np.cos(T), rho * np.sin(T)
    in_s = (X <= 0.8) & (np.abs(Y) <= 0.8)
    res = np.where(in_s, 2 * np.abs(H), np.inf)  # |f(p) - p| for the reflection
    s_idx = np.full(res.shape, -1)
    for i, j in np.argwhere(res < FIXED_TOL):
        s_idx[i, j] = len(nodes)
        nodes.append(("S", np.array([X[i, j], Y[i, j], H[i, j]])))
    edges += _surface_edges(s_idx)
    s_ids = [k for k, (c, _) in enumerate(nodes) if c == "S"]
    s_pts = np.array([nodes[k][1] for k in s_ids]) if s_ids else np.zeros((0, 3))

    step_s = 2 * math.pi / nt
    nd = 2 * resolution + 1
    xs = np.linspace(-1.0, 1.0, nd)
    step_d = xs[1] - xs[0]
    link_radius = 2 * (step_s + step_d)
    WX, WY = np.meshgrid(xs, xs, indexing="ij")
    W = WX + 1j * WY
    interior = np.abs(W) < 1 - SEAM_EPS
    for chart in (DiskA, DiskB, DiskC):
        dres = np.where(interior, np.abs(np.conj(W) - W), np.inf)
        d_idx = np.full(dres.shape, -1)
        for i, j in np.argwhere(dres < FIXED_TOL):
            d_idx[i, j] = len(nodes)
            nodes.append((chart.__name__, complex(W[i, j])))
        edges += _grid_edges(d_idx)
        if not glue:
            continue
        for i, j in np.argwhere(d_idx >= 0):
            outward = [(i + a, j + b) for a, b in ((1, 0), (-1, 0), (0, 1), (0, -1))]
            if all(0 <= a < nd and 0 <= b < nd and interior[a, b] for a, b in outward):
                continue
            w = complex(W[i, j])
            target = attaching_point(l, m, n, chart, w / abs(w))
            dist = (1 - abs(w)) + np.linalg.norm(s_pts - target, axis=1) if len(s_pts) else np.array([])
            if not len(dist) or dist.min() > link_radius:
                raise SeamResolutionError(
                    f"{chart.__name__} sample {w:.4g} has no fixed surface sample within {link_radius:.3g}")
            edges.append((int(d_idx[i, j]), s_ids[int(np.argmin(dist))]))

    out = []
    for cid, comp in enumerate(components(len(nodes), edges)):
        charts = tuple(sorted({nodes[k][0] for k in comp.nodes}))
        out.append(FixedComponent(cid, len(comp.nodes), comp.edge_count,
                                  comp.simplified_vertices, comp.simplified_edges, charts))
    return out


def _surface_edges(idx: np.ndarray) -> list[tuple[int, int]]:
    # longitude is periodic (axis 0), height is not (axis 1)
    edges = []
    rows, cols = idx.shape
    for i, j in np.argwhere(idx >= 0):
        for a, b in (((i + 1) % rows, j), (i, j + 1)):
            if b < cols and idx[a, b] >= 0:
                edges.append((int(idx[i, j]), int(idx[a, b])))
    return edges


# --- cell structure and Nielsen summary ------------------------------------


def triangle_presentation(l: int, m: int, n: int) -> Presentation:
    a, b, c = Word.gen(0), Word.gen(1), Word.gen(2)
    return Presentation(("a", "b", "c"), (a ** l, b ** m, c ** n, a * b * c))


def x_cellular_chain_complex(l: int, m: int, n: int) -> tuple[IntMatrix, IntMatrix]:
    """Boundary matrices (d1, d2) of a CW structure on X(l,m,n).

    Vertices: one on each boundary circle.  Edges: the three circles and two
    arcs of S joining their vertices.  Faces: S cut open along the arcs, and
    the three attached disks.
    """
    _check_params(l, m, n)
    # edges: alpha, beta, gamma (loops), e1: v_a -> v_b, e2: v_b -> v_c
    d1 = IntMatrix.from_rows([
        [0, 0, 0, -1, 0],
        [0, 0, 0, 1, -1],
        [0, 0, 0, 0, 1],
    ])
    # faces: S (boundary alpha + beta + gamma, arcs cancel), D_a, D_b, D_c
    d2 = IntMatrix.from_rows([
        [1, l, 0, 0],
        [1, 0, m, 0],
        [1, 0, 0, n],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ])
    return d1, d2


def x_betti_numbers(l: int, m: int, n: int) -> tuple[int, int, int]:
    d1, d2 = x_cellular_chain_complex(l, m, n)
    r1, r2 = smith_normal_form(d1).rank, smith_normal_form(d2).rank
    return (d1.rows - r1, d1.cols - r1 - r2, d2.cols - r2)


def x_euler_characteristic(l: int, m: int, n: int) -> int:
    d1, d2 = x_cellular_chain_complex(l, m, n)
    return d1.rows - d1.cols + d2.cols


LEMMA_HYPOTHESES = (
    "f(K) is contained in K",
    "K deformation retracts onto the fixed point class F",
    "F lies in the interior of K",
    "F is exactly K intersected with Fix(f)",
)


@dataclass(frozen=True)
class XSummary:
    l: int
    m: int
    n: int
    components: tuple[FixedComponent, ...]
    component_indices: tuple[int, ...]
    nielsen_number: int | None
    chi_x: int
    chi_kp: int
    betti_x: tuple[int, int, int]
    boundary_residual: float

    def to_dict(self) -> dict:
        return {
            "l": self.l, "m": self.m, "n": self.n,
            "components": [c.to_dict() for c in self.components],
            "component_indices": list(self.component_indices),
            "nielsen_number": self.nielsen_number,
            "chi_X": self.chi_x,
            "chi_KP": self.chi_kp,
            "betti_X": list(self.betti_x),
            "boundary_residual": self.boundary_residual,
            "index_hypotheses": list(LEMMA_HYPOTHESES),
        }


def x_nielsen_summary(l: int, m: int, n: int, resolution: int = 128) -> XSummary:
    """Index of each fixed class = Euler characteristic of the class.

    The neighbourhood hypotheses that justify this are recorded, not checked.
    Every class is a union of components, so when all components have
    chi = 0 every class is inessential and N(f) = 0.
    """
    comps = tuple(x_fixed_components(l, m, n, resolution))
    indices = tuple(c.estimated_chi for c in comps)
    nielsen = 0 if all(i == 0 for i in indices) else None
    kp = standard_complex(triangle_presentation(l, m, n))
    return XSummary(l, m, n, comps, indices, nielsen,
                    x_euler_characteristic(l, m, n), euler_characteristic(kp),
                    x_betti_numbers(l, m, n), x_boundary_residual(l, m, n, 1000))
