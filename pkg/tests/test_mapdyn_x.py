import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bingfpp.complex2 import euler_characteristic, standard_complex
from bingfpp.homology import homology
from bingfpp.mapdyn.graphs import components, simplify
from bingfpp.mapdyn.xspace import (
    DiskA,
    DiskB,
    DiskC,
    InvalidChartPoint,
    SeamResolutionError,
    Surface,
    attaching_point,
    chart_distance,
    triangle_presentation,
    x_betti_numbers,
    x_boundary_residual,
    x_cellular_chain_complex,
    x_euler_characteristic,
    x_fixed_components,
    x_map,
    x_nielsen_summary,
)

TRIANGLES = [(2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 2, 3)]


def test_map_examples():
    assert x_map(2, 3, 4, Surface(0, 0, 1)) == Surface(0, 0, -1)
    assert x_map(2, 3, 4, DiskA(0.5j)) == DiskA(-0.5j)
    assert type(x_map(2, 3, 4, DiskC(0.1))) is DiskC
    with pytest.raises(InvalidChartPoint):
        Surface(1, 0, 0)  # inside the cap removed for disk B
    with pytest.raises(InvalidChartPoint):
        Surface(0.5, 0.5, 0.5)


@pytest.mark.parametrize("lmn", TRIANGLES)
def test_boundary_compatibility(lmn):
    assert x_boundary_residual(*lmn, 1000) < 1e-12


@given(st.sampled_from(TRIANGLES), st.sampled_from([DiskA, DiskB, DiskC]), st.floats(0, 2 * math.pi))
def test_gluing_soundness(lmn, chart, theta):
    w = cmath.exp(1j * theta)
    on_s = Surface(*(attaching_point(*lmn, chart, w) / np.linalg.norm(attaching_point(*lmn, chart, w))))
    assert chart_distance(*lmn, chart(w), on_s) < 1e-10
    assert chart_distance(*lmn, x_map(*lmn, chart(w)), x_map(*lmn, on_s)) < 1e-10


@pytest.mark.parametrize("lmn", TRIANGLES + [(2, 2, 2), (3, 3, 3), (2, 2, 6)])
def test_components_are_circles(lmn):
    comps = x_fixed_components(*lmn, resolution=128)
    assert comps and all(c.estimated_chi == 0 for c in comps)
    assert all(c.simplified_vertices - c.simplified_edges == 0 for c in comps)


@pytest.mark.parametrize("lmn, count", [((2, 2, 2), 3), ((2, 3, 4), 2), ((2, 2, 5), 2), ((2, 3, 3), 1), ((3, 5, 7), 1)])
def test_component_count_tracks_parity(lmn, count):
    # the equator minus three caps is three arcs; the fixed diameter of a disk
    # with odd degree joins the two arcs meeting at its cap
    n_odd = sum(k % 2 for k in lmn)
    assert count == max(1, 3 - n_odd)
    assert len(x_fixed_components(*lmn, resolution=64)) == count


def test_unglued_diameters_are_arcs():
    comps = x_fixed_components(2, 3, 4, resolution=64, glue=False)
    disks = [c for c in comps if c.charts != ("S",)]
    assert len(disks) == 3 and all(c.estimated_chi == 1 for c in disks)


def test_coarse_resolution_rejected():
    with pytest.raises(ValueError):
        x_fixed_components(2, 3, 4, resolution=32)


def test_seam_failure_is_reported(monkeypatch):
    import bingfpp.mapdyn.xspace as xs
    real = xs.attaching_point
    monkeypatch.setattr(xs, "attaching_point", lambda l, m, n, c, w: real(l, m, n, c, w * 1j))
    with pytest.raises(SeamResolutionError):
        xs.x_fixed_components(2, 3, 4, resolution=64)


@pytest.mark.parametrize("lmn", TRIANGLES)
def test_cell_structure_matches_standard_complex(lmn):
    d1, d2 = x_cellular_chain_complex(*lmn)
    assert (d1 @ d2).is_zero()
    kp = standard_complex(triangle_presentation(*lmn))
    h = homology(kp)
    assert x_betti_numbers(*lmn) == (1, h.h1_rank, h.h2_rank) == (1, 0, 1)
    assert x_euler_characteristic(*lmn) == euler_characteristic(kp) == 2


@pytest.mark.parametrize("lmn", TRIANGLES)
def test_nielsen_summary(lmn):
    s = x_nielsen_summary(*lmn, resolution=64)
    assert s.nielsen_number == 0 and set(s.component_indices) == {0}
    assert s.chi_x == s.chi_kp == 2


def test_graph_estimator():
    cycle = [(i, (i + 1) % 5) for i in range(5)]
    (c,) = components(5, cycle)
    assert c.chi == 0 and (c.simplified_vertices, c.simplified_edges) == (1, 1)
    path = [(0, 1), (1, 2)]
    assert components(3, path)[0].chi == 1
    assert simplify([0], [(0, 0)]) == (1, 1)
    theta = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    assert components(4, theta)[0].chi == -1


@given(st.integers(3, 30), st.integers(0, 5))
def test_simplify_preserves_chi(n, extra):
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + 2) for i in range(min(extra, n - 2))]
    v, e = simplify(range(n), edges)
    assert v - e == n - len(edges)
