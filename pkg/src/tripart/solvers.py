"""Plane-triple optimizers.

``brute_force`` computes the best orthogonal or axis-parallel triple exactly
by searching planes that contain a line (plus one plane beyond everything);
moving a plane until it hits a line never increases a cell's load, so this
finite search is exhaustive. ``solve_slab_split`` and ``solve_orthogonal_512``
are the constructive partitions with guarantees of ``floor((5n - m) / 12)``
and ``ceil(5n / 12)`` lines per cell.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .constructions import LineSet, is_general_position
from .geometry import (
    SIGN_VECTORS,
    Axis,
    AxisPlane,
    Line,
    PlaneTriple,
    SignedPermutation,
    as_fraction,
    axis_triple,
    load_report,
)

log = logging.getLogger(__name__)

ORTHOGONAL = "orthogonal"
AXIS_PARALLEL = "axis_parallel"


class GuaranteeViolation(RuntimeError):
    """A constructive partition exceeded the bound it is proven to meet."""


@dataclass(frozen=True)
class Solution:
    triple: PlaneTriple
    achieved: int
    bound: Optional[int] = None


def _line_set(lines) -> LineSet:
    return lines if isinstance(lines, LineSet) else LineSet(tuple(lines))


def candidate_offsets(lines: Iterable[Line], axis) -> List[Fraction]:
    """Sorted positions where a plane perpendicular to ``axis`` contains a line,
    followed by one sentinel beyond all of them."""
    axis = Axis.parse(axis)
    values = sorted({line.fixed(axis) for line in lines if line.axis != axis})
    return values + [values[-1] + 1 if values else Fraction(0)]


# --- brute force -------------------------------------------------------------


def _normalize_mode(mode: str) -> str:
    mode = mode.replace("-", "_")
    if mode not in (ORTHOGONAL, AXIS_PARALLEL):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


class _RankSpace:
    """Lines and offsets mapped to integer ranks per axis (exact order only)."""

    def __init__(self, lines: Sequence[Line], offsets: Dict[Axis, List[Fraction]]):
        self.offsets = offsets
        self.offset_ranks = {}
        index = {}
        for a in Axis:
            values = sorted({line.fixed(a) for line in lines if line.axis != a} | set(offsets[a]))
            index[a] = {v: i for i, v in enumerate(values)}
            self.offset_ranks[a] = np.array([index[a][o] for o in offsets[a]], dtype=np.int64)
        self.lines = [(line.axis, {a: index[a][line.fixed(a)] for a in line.axis.others()})
                      for line in lines]

    def pattern_loads(self, pattern: Tuple[Axis, Axis, Axis]) -> np.ndarray:
        """Max cell load for every offset combination of a fixed axis pattern."""
        grids = []
        for j, a in enumerate(pattern):
            shape = [1, 1, 1]
            shape[j] = -1
            grids.append(self.offset_ranks[a].reshape(shape))
        full = tuple(len(self.offset_ranks[a]) for a in pattern)
        counts = np.zeros((len(SIGN_VECTORS),) + full, dtype=np.int32)

        # Along a line, plane j reads '+' once the parameter passes its offset, so a
        # mixed sign pattern on the crossing planes needs every '+' offset below every '-'.
        reachable = {}
        for axis in Axis:
            crossing = [j for j in range(3) if pattern[j] == axis]
            for s in SIGN_VECTORS:
                mask = np.ones((1, 1, 1), dtype=bool)
                for p in crossing:
                    for q in crossing:
                        if s[p] == "+" and s[q] == "-":
                            mask = mask & (grids[p] < grids[q])
                reachable[axis, s] = mask

        for axis, fixed in self.lines:
            sides = [None if pattern[j] == axis else np.sign(fixed[pattern[j]] - grids[j])
                     for j in range(3)]
            for code, s in enumerate(SIGN_VECTORS):
                hit = reachable[axis, s]
                for j, side in enumerate(sides):
                    if side is not None:
                        hit = hit & (side == (1 if s[j] == "+" else -1))
                counts[code] += hit
        loads = counts.max(axis=0)

        # permutations of one set of planes are redundant; keep offsets non-decreasing
        # within equal axes, which is also the lexicographically smallest ordering
        for j, k in itertools.combinations(range(3), 2):
            if pattern[j] == pattern[k]:
                loads = np.where(grids[j] <= grids[k], loads, np.iinfo(loads.dtype).max)
        return loads


def brute_force(lines: Iterable[Line], mode: str = ORTHOGONAL,
                offsets: Optional[Dict] = None) -> Solution:
    """Exact minimum of the max cell load over orthogonal or axis-parallel triples.

    ``offsets`` overrides the searched plane positions per axis (defaults to
    :func:`candidate_offsets`). Ties go to the lexicographically smallest
    (axis assignment, offset vector).
    """
    mode = _normalize_mode(mode)
    lines = list(lines)
    if offsets is None:
        offsets = {a: candidate_offsets(lines, a) for a in Axis}
    else:
        offsets = {Axis.parse(a): sorted({as_fraction(v) for v in vs}) for a, vs in offsets.items()}
    space = _RankSpace(lines, offsets)

    if mode == ORTHOGONAL:
        patterns = [(Axis.X, Axis.Y, Axis.Z)]
    else:
        patterns = list(itertools.combinations_with_replacement(Axis, 3))

    best = None
    for pattern in patterns:
        if any(not offsets[a] for a in pattern):
            continue
        loads = space.pattern_loads(pattern)
        flat = int(np.argmin(loads))
        value = int(loads.flat[flat])
        if best is None or value < best[0]:
            best = (value, pattern, np.unravel_index(flat, loads.shape))
    value, pattern, index = best
    triple = PlaneTriple(tuple(AxisPlane(a, offsets[a][i]) for a, i in zip(pattern, index)))
    achieved = load_report(lines, triple).max_load
    if achieved != value:
        raise RuntimeError(f"rank evaluator gave {value}, exact evaluator {achieved}")
    return Solution(triple, achieved)


# --- slab split (two parallel planes + one cross plane) ---------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_general_position(lines: LineSet):
    if not is_general_position(lines):
        raise ValueError("input lines are not in general position")


def solve_slab_split(lines: Iterable[Line]) -> Solution:
    """Cut the two largest classes into three slabs, the smallest class in half.

    Two planes perpendicular to the smallest class's axis split the other
    lines into thirds; a third plane halves the smallest class.
    """
    lines = _line_set(lines)
    _require_general_position(lines)
    n = len(lines)
    sizes = lines.sizes
    bound = min((5 * n - max(sizes)) // 12, 7 * n // 18)

    smallest = min(Axis, key=lambda a: (sizes[a], a))
    to_frame = SignedPermutation((*smallest.others(), smallest))
    frame = to_frame.lines(lines)

    flat = sorted((line.fixed(Axis.Z) for line in frame if line.axis != Axis.Z))
    k = len(flat)
    step = _ceil_div(k - 2, 3)
    first = step + 1
    second = first + step + 1
    z_beyond = candidate_offsets(frame, Axis.Z)[-1]
    z1 = flat[first - 1] if first <= k else z_beyond
    z2 = flat[second - 1] if second <= k else z_beyond

    x_of_z = sorted(line.fixed(Axis.X) for line in frame if line.axis == Axis.Z)
    x0 = x_of_z[(len(x_of_z) + 1) // 2 - 1] if x_of_z else candidate_offsets(frame, Axis.X)[-1]

    local = PlaneTriple((AxisPlane(Axis.Z, z1), AxisPlane(Axis.Z, z2), AxisPlane(Axis.X, x0)))
    triple = to_frame.inverse().triple(local)
    achieved = load_report(lines, triple).max_load
    if achieved > bound:
        raise GuaranteeViolation(f"slab split reached {achieved} > bound {bound}")
    return Solution(triple, achieved, bound)


# --- orthogonal partition ----------------------------------------------------


QUADRANTS = ("NE", "NW", "SE", "SW")
_REGIONS = {
    "N": ("NE", "NW"),
    "S": ("SE", "SW"),
    "E": ("NE", "SE"),
    "W": ("NW", "SW"),
    "T": QUADRANTS,
}


@dataclass(frozen=True)
class QuadrantTally:
    """Incidences of the xy-projection with the open quadrants of two cut lines.

    ``counts`` maps ``(quadrant, axis)`` to the number of lines of that class
    whose projection meets the quadrant. An x-line projects to a horizontal
    line and so meets two quadrants; a z-line projects to a point.
    ``weight`` is ``n + |L_x| + |L_y|``.
    """

    counts: dict
    weight: int

    def get(self, region: str, axis=None) -> int:
        quads = _REGIONS.get(region, (region,))
        axes = tuple(Axis) if axis is None else (Axis.parse(axis),)
        return sum(self.counts[q, a] for q in quads for a in axes)

    ne = property(lambda self: self.get("NE"))
    nw = property(lambda self: self.get("NW"))
    se = property(lambda self: self.get("SE"))
    sw = property(lambda self: self.get("SW"))
    north = property(lambda self: self.get("N"))
    south = property(lambda self: self.get("S"))
    east = property(lambda self: self.get("E"))
    west = property(lambda self: self.get("W"))
    total = property(lambda self: self.get("T"))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def quadrant_tally(lines: Iterable[Line], xcut, ycut) -> QuadrantTally:
    xcut, ycut = as_fraction(xcut), as_fraction(ycut)
    counts = {(q, a): 0 for q in QUADRANTS for a in Axis}
    sizes = [0, 0, 0]
    for line in lines:
        sizes[line.axis] += 1
        if line.axis == Axis.X:
            ns, ew = (_sign(line.fixed(Axis.Y) - ycut),), (1, -1)
        elif line.axis == Axis.Y:
            ns, ew = (1, -1), (_sign(line.fixed(Axis.X) - xcut),)
        else:
            ns = (_sign(line.fixed(Axis.Y) - ycut),)
            ew = (_sign(line.fixed(Axis.X) - xcut),)
        for v in ns:
            for h in ew:
                if v and h:
                    counts[("N" if v > 0 else "S") + ("E" if h > 0 else "W"), line.axis] += 1
    return QuadrantTally(counts, sum(sizes) + sizes[Axis.X] + sizes[Axis.Y])


def quadrant_split_third(points: Iterable[Sequence]) -> Tuple[Fraction, Fraction]:
    """Vertical and horizontal cut with at most ``floor(m/3)`` points per open quadrant.

    Cuts go through a point coordinate or beyond all points; the best pair is
    found exhaustively (lexicographically smallest among the optimal ones).
    """
    pts = [(as_fraction(x), as_fraction(y)) for x, y in points]
    m = len(pts)
    xs = sorted({x for x, _ in pts})
    ys = sorted({y for _, y in pts})
    xcuts = xs + [xs[-1] + 1 if xs else Fraction(0)]
    ycuts = ys + [ys[-1] + 1 if ys else Fraction(0)]
    if not pts:
        return xcuts[0], ycuts[0]
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    px = np.array([xi[x] for x, _ in pts])[:, None]
    py = np.array([yi[y] for _, y in pts])[:, None]
    a = np.arange(len(xcuts))[None, :]
    b = np.arange(len(ycuts))[None, :]
    left, right = (px < a).astype(np.int64), (px > a).astype(np.int64)
    below, above = (py < b).astype(np.int64), (py > b).astype(np.int64)
    worst = np.maximum.reduce([left.T @ below, left.T @ above, right.T @ below, right.T @ above])
    flat = int(np.argmin(worst))
    i, j = np.unravel_index(flat, worst.shape)
    if worst[i, j] > m // 3:
        raise GuaranteeViolation(f"no cut pair leaves at most {m // 3} of {m} points per quadrant")
    return xcuts[i], ycuts[j]


def _median_plane(values: List[Fraction], beyond: Fraction) -> Fraction:
    # plane through the ceil(k/2)-th value: floor(k/2) strictly above, fewer below
    values = sorted(values)
    return values[_ceil_div(len(values), 2) - 1] if values else beyond


_FLIP_X = SignedPermutation((0, 1, 2), (-1, 1, 1))
_FLIP_Y = SignedPermutation((0, 1, 2), (1, -1, 1))


def _south_weight(frame: List[Line], ycut: Fraction, ny: int) -> int:
    # ycut-only tally: y-lines 1 each, x-lines below twice, z-points below once
    s = ny
    for line in frame:
        if line.axis == Axis.X and line.fixed(Axis.Y) < ycut:
            s += 2
        elif line.axis == Axis.Z and line.fixed(Axis.Y) < ycut:
            s += 1
    return s


def _place_ycut(frame: List[Line], n: int, ny: int) -> Fraction:
    limit = (5 * n) // 3
    candidates = candidate_offsets(frame, Axis.Y)[:-1]
    chosen = None
    for y in candidates:
        if 2 * _south_weight(frame, y, ny) <= limit:
            chosen = y
    if chosen is None:
        raise GuaranteeViolation("no horizontal cut keeps the southern tally below the limit")
    return chosen


def _place_xcut(frame: List[Line], ycut: Fraction) -> Fraction:
    best = None
    for i, x in enumerate(candidate_offsets(frame, Axis.X)[:-1]):
        tally = quadrant_tally(frame, x, ycut)
        key = (max(tally.sw, tally.se), abs(tally.sw - tally.se), i)
        if best is None or key < best[0]:
            best = (key, x)
    return best[1]


def _window(values: List[Fraction], value: Fraction, radius: int = 2) -> List[Fraction]:
    i = values.index(value)
    return values[max(0, i - radius): i + radius + 1]


def solve_orthogonal_512(lines: Iterable[Line]) -> Solution:
    """One plane perpendicular to each axis, at most ``ceil(5n/12)`` lines per cell.

    Axes are relabelled so the z-class is the largest. If it holds at least
    half the lines, the z-points are cut into quadrants of at most a third
    each and a z-plane halves the rest. Otherwise a horizontal cut bounds the
    southern tally, a vertical cut balances the two southern quadrants, and
    the z-plane halves the lines crossing the north-east column.
    """
    lines = _line_set(lines)
    n = len(lines)
    bound = _ceil_div(5 * n, 12)
    if n == 0:
        return Solution(axis_triple(0, 0, 0), 0, bound)
    _require_general_position(lines)

    sizes = lines.sizes
    largest = max(Axis, key=lambda a: (sizes[a], a))
    to_frame = SignedPermutation((*largest.others(), largest))
    frame = to_frame.lines(lines)
    nx, ny, nz = sizes[largest.others()[0]], sizes[largest.others()[1]], sizes[largest]
    flat_z = [line.fixed(Axis.Z) for line in frame if line.axis != Axis.Z]
    z_beyond = candidate_offsets(frame, Axis.Z)[-1]

    if 2 * nz >= n:
        points = [(line.c1, line.c2) for line in frame if line.axis == Axis.Z]
        xcut, ycut = quadrant_split_third(points)
        local = axis_triple(xcut, ycut, _median_plane(flat_z, z_beyond))
        achieved = load_report(frame, local).max_load
        if achieved > bound:
            raise GuaranteeViolation(f"orthogonal split (large z-class) reached {achieved} > {bound}")
    else:
        ycut = _place_ycut(frame, n, ny)
        south_z = sum(1 for l in frame if l.axis == Axis.Z and l.fixed(Axis.Y) < ycut)
        north_z = sum(1 for l in frame if l.axis == Axis.Z and l.fixed(Axis.Y) > ycut)
        if south_z < north_z:
            to_frame = _FLIP_Y.compose(to_frame)
            frame = _FLIP_Y.lines(frame)
            ycut = _place_ycut(frame, n, ny)
        xcut = _place_xcut(frame, ycut)
        tally = quadrant_tally(frame, xcut, ycut)
        if tally.ne < tally.nw:
            to_frame = _FLIP_X.compose(to_frame)
            frame = _FLIP_X.lines(frame)
            xcut = -xcut
        column = [line.fixed(Axis.Z) for line in frame
                  if (line.axis == Axis.X and line.fixed(Axis.Y) > ycut)
                  or (line.axis == Axis.Y and line.fixed(Axis.X) > xcut)]
        zcut = _median_plane(column, z_beyond)
        local = axis_triple(xcut, ycut, zcut)
        achieved = load_report(frame, local).max_load
        if achieved > bound:
            local, achieved = _retry(frame, local, bound)

    triple = to_frame.inverse().triple(local)
    result = load_report(lines, triple).max_load
    if result != achieved:
        raise RuntimeError("frame transform changed the load")
    return Solution(triple, achieved, bound)


def _retry(frame: List[Line], recipe: PlaneTriple, bound: int) -> Tuple[PlaneTriple, int]:
    windows = [_window(candidate_offsets(frame, p.axis), p.offset) for p in recipe]
    best = None
    for offs in itertools.product(*windows):
        triple = axis_triple(*offs)
        load = load_report(frame, triple).max_load
        if best is None or load < best[1]:
            best = (triple, load)
    log.debug("recipe overshot; best in window reaches %d (bound %d)", best[1], bound)
    if best[1] > bound:
        raise GuaranteeViolation(f"orthogonal split reached {best[1]} > bound {bound}")
    return best
