"""Fixed point indices of planar chart maps via winding numbers."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

GUARD_BAND = 0.25  # radians of slack around a multiple of 2*pi


class IndexComputationError(ValueError):
    pass


@dataclass(frozen=True)
class IndexReport:
    fixed_point: object
    index: int
    radius: float
    samples: int
    total_turning: float  # accumulated argument of x - f(x), radians

    def to_dict(self) -> dict:
        return {
            "fixed_point": repr(self.fixed_point),
            "index": self.index,
            "radius": self.radius,
            "samples": self.samples,
            "winding": self.total_turning / (2 * math.pi),
        }


def fixed_point_index(f: Callable, p, radius: float, samples: int = 512) -> IndexReport:
    """Index of an isolated fixed point ``p`` lying inside a disk chart.

    ``p`` must carry a complex coordinate ``z`` and be constructible as
    ``type(p)(z)``.  The index is the winding number of ``x - f(x)`` along the
    circle of the given radius, which must stay inside the chart and whose
    image must stay in the same chart.
    """
    if samples < 8:
        raise IndexComputationError("need at least 8 samples")
    chart = type(p)
    centre = complex(p.z)
    if abs(centre) + radius >= 1.0:
        raise IndexComputationError("circle leaves the chart")
    ts = 2 * math.pi * np.arange(samples) / samples
    diffs = np.empty(samples, dtype=complex)
    for k, t in enumerate(ts):
        x = centre + radius * cmath.exp(1j * t)
        fx = f(chart(x))
        if type(fx) is not chart:
            raise IndexComputationError(f"image of {chart.__name__}({x:.6g}) left the chart")
        diffs[k] = x - complex(fx.z)
    mags = np.abs(diffs)
    if mags.min() <= 1e-9 * radius:
        raise IndexComputationError("circle passes through a fixed point")
    steps = np.angle(np.roll(diffs, -1) / diffs)
    if np.abs(steps).max() >= math.pi / 2:
        raise IndexComputationError("too few samples to track the argument")
    total = float(steps.sum())
    k = round(total / (2 * math.pi))
    if abs(total - 2 * math.pi * k) > GUARD_BAND:
        raise IndexComputationError(f"winding {total / (2 * math.pi):.4f} is not near an integer")
    return IndexReport(p, int(k), radius, samples, total)
