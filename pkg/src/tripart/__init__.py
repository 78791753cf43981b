"""Exact three-plane partitions of axis-parallel line sets in R^3."""

from .constructions import (
    LineSet,
    gen_four_bundle,
    gen_random,
    gen_three_bundle,
    is_general_position,
    perturb_general_position,
)
from .geometry import (
    Axis,
    AxisPlane,
    Contained,
    Crossing,
    GeneralPlane,
    Line,
    LoadReport,
    PlaneTriple,
    Side,
    SignedPermutation,
    axis_triple,
    fragment_total,
    load_report,
    plane_through_parallel_lines,
    side_of,
)
from .harness import TheoremReport, run_benchmark, verify_bundle_theorems
from .serialize import decode, encode
from .solvers import (
    GuaranteeViolation,
    QuadrantTally,
    Solution,
    brute_force,
    candidate_offsets,
    quadrant_split_third,
    quadrant_tally,
    solve_orthogonal_512,
    solve_slab_split,
)

__version__ = "0.1.0"
