"""Line-set generators: the three- and four-bundle families, random instances,
and the general-position perturbation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .geometry import Axis, Line, as_fraction


@dataclass(frozen=True)
class LineSet:
    lines: Tuple[Line, ...]

    def __post_init__(self):
        lines = tuple(self.lines)
        for line in lines:
            if not isinstance(line, Line):
                raise TypeError(f"not a Line: {line!r}")
        if len(set(lines)) != len(lines):
            raise ValueError("line set contains duplicate lines")
        object.__setattr__(self, "lines", lines)

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __getitem__(self, i):
        return self.lines[i]

    def of_axis(self, axis) -> Tuple[Line, ...]:
        axis = Axis.parse(axis)
        return tuple(line for line in self.lines if line.axis == axis)

    @property
    def sizes(self) -> Tuple[int, int, int]:
        """``(|L_x|, |L_y|, |L_z|)``."""
        sizes = [0, 0, 0]
        for line in self.lines:
            sizes[line.axis] += 1
        return tuple(sizes)


def _require_multiple(n, k, family):
    if not isinstance(n, int) or n < 1 or n % k:
        raise ValueError(f"{family} needs a positive n divisible by {k}, got {n!r}")


def default_epsilon(n: int) -> Fraction:
    return Fraction(1, 100 * n * n)


def gen_three_bundle(n: int, epsilon: Optional[Fraction] = None) -> LineSet:
    """Three bundles of n/3 lines each, perturbed by ``epsilon * i**2``.

    The perturbation moves y of the x-bundle, z of the y-bundle and y of the
    z-bundle; ``epsilon=0`` gives the unperturbed configuration.
    """
    _require_multiple(n, 3, "three-bundle configuration")
    eps = default_epsilon(n) if epsilon is None else as_fraction(epsilon)
    if eps < 0:
        raise ValueError("epsilon must be non-negative")
    third = n // 3
    lines = [Line(Axis.X, i + eps * i * i, i) for i in range(1, third + 1)]
    lines += [Line(Axis.Y, i, 2 * third + 1 - i + eps * i * i) for i in range(1, third + 1)]
    lines += [Line(Axis.Z, i, i + eps * i * i) for i in range(third + 1, 2 * third + 1)]
    return LineSet(lines)


def gen_four_bundle(n: int) -> LineSet:
    """Unbalanced configuration with |L_x| = |L_y| = n/4 and |L_z| = n/2."""
    _require_multiple(n, 8, "four-bundle configuration")
    q = n // 4
    lines = [Line(Axis.X, i, i + q) for i in range(q, 2 * q)]
    lines += [Line(Axis.Y, i + q, i) for i in range(q)]
    lines += [Line(Axis.Z, i, i) for i in [*range(q), *range(2 * q, 3 * q)]]
    return LineSet(lines)


def gen_random(nx: int, ny: int, nz: int, coord_range: int, seed: int) -> LineSet:
    """Random integer line set in general position, deterministic in ``seed``.

    Coordinates are drawn from ``[0, coord_range)`` without repetition per axis,
    which is exactly what general position asks for.
    """
    sizes = (nx, ny, nz)
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be non-negative")
    needed = max(sum(sizes) - s for s in sizes)
    if coord_range < 1 or coord_range < needed:
        raise ValueError(f"range {coord_range} too small for {needed} distinct coordinates per axis")
    rng = random.Random(seed)
    pools = {a: rng.sample(range(coord_range), sum(sizes) - sizes[a]) for a in Axis}
    lines = []
    for axis in Axis:
        u, v = axis.others()
        for _ in range(sizes[axis]):
            lines.append(Line(axis, pools[u].pop(), pools[v].pop()))
    result = LineSet(lines)
    assert is_general_position(result)
    return result


def _meet(a: Line, b: Line) -> bool:
    if a.axis == b.axis:
        return a == b
    shared = ({*a.axis.others()} & {*b.axis.others()}).pop()
    return a.fixed(shared) == b.fixed(shared)


def is_general_position(lines: Iterable[Line]) -> bool:
    lines = list(lines)
    for i, a in enumerate(lines):
        for b in lines[i + 1:]:
            if a.axis == b.axis:
                if a.c1 == b.c1 or a.c2 == b.c2:
                    return False
            elif _meet(a, b):
                return False
    return True


def perturb_general_position(lines: Iterable[Line]) -> LineSet:
    """Shift every integer line to a nearby parallel line so the set is in general position.

    The k-th transverse coordinate (k = 1..2m over all m lines) moves up by
    ``k / (5 (2m + 1))``. Offsets are distinct and below 1/5, so every line
    stays within distance 1/3 of the original and no two coordinates collide.
    """
    lines = list(lines)
    for line in lines:
        if line.c1.denominator != 1 or line.c2.denominator != 1:
            raise ValueError(f"perturbation needs integer coordinates, got {line}")
    step = Fraction(1, 5 * (2 * len(lines) + 1))
    out = [Line(line.axis, line.c1 + (2 * i + 1) * step, line.c2 + (2 * i + 2) * step)
           for i, line in enumerate(lines)]
    return LineSet(out)
