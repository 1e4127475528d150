"""Chart-level models of the two explicit self-map families and their fixed point data."""

from .kp import kp_fixed_points, kp_index, kp_map, kp_nielsen_path_check, kp_nielsen_summary, kp_seam_residual
from .winding import IndexComputationError, IndexReport, fixed_point_index
from .xspace import SeamResolutionError, x_fixed_components, x_map, x_nielsen_summary

__all__ = [
    "IndexComputationError", "IndexReport", "SeamResolutionError", "fixed_point_index",
    "kp_fixed_points", "kp_index", "kp_map", "kp_nielsen_path_check", "kp_nielsen_summary", "kp_seam_residual",
    "x_fixed_components", "x_map", "x_nielsen_summary",
]
