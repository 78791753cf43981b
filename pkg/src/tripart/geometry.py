"""Exact geometry for axis-parallel lines cut by up to three planes.

Everything here works over :class:`fractions.Fraction`; no floating point is
used anywhere. A cell of the arrangement of three planes is identified with
its sign vector, a string such as ``"+-+"`` whose j-th character tells on
which open side of the j-th plane the cell lies.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

SIGN_VECTORS: Tuple[str, ...] = tuple("".join(s) for s in itertools.product("+-", repeat=3))


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def _sign(value) -> int:
    return (value > 0) - (value < 0)


class Axis(enum.IntEnum):
    X = 0
    Y = 1
    Z = 2

    @property
    def tag(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, tag) -> "Axis":
        if isinstance(tag, Axis):
            return tag
        try:
            return cls[str(tag).upper()]
        except KeyError:
            raise ValueError(f"unknown axis tag {tag!r}") from None

    def others(self) -> Tuple["Axis", "Axis"]:
        return tuple(a for a in Axis if a != self)


@dataclass(frozen=True, order=True)
class Line:
    """The full line through ``(c1, c2)`` running along ``axis``.

    ``c1`` and ``c2`` are the fixed coordinates on the two other axes, in
    increasing axis order: an X-line stores ``(y, z)``, a Y-line ``(x, z)``
    and a Z-line ``(x, y)``.
    """

    axis: Axis
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis.parse(self.axis))
        object.__setattr__(self, "c1", as_fraction(self.c1))
        object.__setattr__(self, "c2", as_fraction(self.c2))

    @classmethod
    def through(cls, axis, point: Sequence) -> "Line":
        """Line along ``axis`` through a 3D point (its own-axis coordinate is ignored)."""
        axis = Axis.parse(axis)
        a, b = axis.others()
        return cls(axis, point[a], point[b])

    def fixed(self, axis) -> Fraction:
        """Fixed coordinate of the line on ``axis``; undefined along its own axis."""
        axis = Axis.parse(axis)
        a, b = self.axis.others()
        if axis == a:
            return self.c1
        if axis == b:
            return self.c2
        raise ValueError(f"a {self.axis.tag}-line has no fixed {axis.tag}-coordinate")

    def point(self) -> Tuple[Fraction, Fraction, Fraction]:
        p = [Fraction(0)] * 3
        a, b = self.axis.others()
        p[a], p[b] = self.c1, self.c2
        return tuple(p)

    def direction(self) -> Tuple[int, int, int]:
        d = [0, 0, 0]
        d[self.axis] = 1
        return tuple(d)


@dataclass(frozen=True)
class AxisPlane:
    """The plane ``{coordinate_axis = offset}``; its ``+`` side is ``coordinate > offset``."""

    axis: Axis
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis.parse(self.axis))
        object.__setattr__(self, "offset", as_fraction(self.offset))

    @property
    def normal(self) -> Tuple[Fraction, Fraction, Fraction]:
        n = [Fraction(0)] * 3
        n[self.axis] = Fraction(1)
        return tuple(n)

    @property
    def constant(self) -> Fraction:
        return -self.offset

    def as_general(self) -> "GeneralPlane":
        return GeneralPlane(self.normal, self.constant)


@dataclass(frozen=True)
class GeneralPlane:
    """The plane ``{normal . p + offset = 0}``; its ``+`` side is where the form is positive.

    The normal is scaled at construction so its first nonzero entry is 1.
    """

    normal: Tuple[Fraction, Fraction, Fraction]
    offset: Fraction

    def __post_init__(self):
        normal = tuple(as_fraction(v) for v in self.normal)
        if len(normal) != 3:
            raise ValueError("a plane normal needs exactly three entries")
        offset = as_fraction(self.offset)
        lead = next((v for v in normal if v != 0), None)
        if lead is None:
            raise ValueError("plane normal must be nonzero")
        object.__setattr__(self, "normal", tuple(v / lead for v in normal))
        object.__setattr__(self, "offset", offset / lead)

    @property
    def constant(self) -> Fraction:
        return self.offset

    def as_general(self) -> "GeneralPlane":
        return self


Plane = Union[AxisPlane, GeneralPlane]


def classify_plane(plane: Plane) -> str:
    """Return ``"axis-parallel"``, ``"semi-tilted"`` or ``"tilted"``."""
    zeros = sum(1 for v in plane.normal if v == 0)
    return {2: "axis-parallel", 1: "semi-tilted", 0: "tilted"}[zeros]


def is_orthogonal_triple(triple: "PlaneTriple") -> bool:
    """True when the triple has one axis-parallel plane perpendicular to each axis."""
    return all(isinstance(p, AxisPlane) for p in triple) and {p.axis for p in triple} == set(Axis)


@dataclass(frozen=True)
class PlaneTriple:
    planes: Tuple[Plane, Plane, Plane]

    def __post_init__(self):
        planes = tuple(self.planes)
        if len(planes) != 3:
            raise ValueError(f"a plane triple needs exactly three planes, got {len(planes)}")
        for p in planes:
            if not isinstance(p, (AxisPlane, GeneralPlane)):
                raise TypeError(f"not a plane: {p!r}")
        object.__setattr__(self, "planes", planes)

    def __iter__(self):
        return iter(self.planes)

    def __getitem__(self, i):
        return self.planes[i]

    def __len__(self):
        return 3


def axis_triple(x, y, z) -> PlaneTriple:
    """Mutually orthogonal triple ``{x = x0, y = y0, z = z0}``."""
    return PlaneTriple((AxisPlane(Axis.X, x), AxisPlane(Axis.Y, y), AxisPlane(Axis.Z, z)))


# --- line/plane incidence ------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    lam: Fraction


@dataclass(frozen=True)
class Side:
    sign: int


@dataclass(frozen=True)
class Contained:
    pass


CONTAINED = Contained()


def _affine(line: Line, plane: Plane) -> Tuple[Fraction, Fraction]:
    # f(lam) = base + slope * lam along the line
    normal = plane.normal
    p = line.point()
    base = sum(n * c for n, c in zip(normal, p)) + plane.constant
    return base, normal[line.axis]


def side_of(line: Line, plane: Plane) -> Union[Crossing, Side, Contained]:
    base, slope = _affine(line, plane)
    if slope != 0:
        return Crossing(-base / slope)
    if base != 0:
        return Side(_sign(base))
    return CONTAINED


@dataclass(frozen=True)
class LoadReport:
    """Per-cell incidence counts of a line set against a plane triple.

    ``counts`` always has all eight sign vectors as keys; sign vectors whose
    region is empty simply stay at 0. ``contained`` lists ``(line, plane)``
    index pairs for lines lying inside a plane; such lines count nowhere.
    """

    counts: dict
    max_load: int
    contained: Tuple[Tuple[int, int], ...] = field(default=())

    def total(self) -> int:
        return sum(self.counts.values())


def line_cells(line: Line, triple: PlaneTriple):
    """Sign vectors of the open cells met by ``line``, or ``None`` if it lies in a plane."""
    forms = [_affine(line, plane) for plane in triple]
    if any(base == 0 and slope == 0 for base, slope in forms):
        return None
    breaks = sorted({-base / slope for base, slope in forms if slope != 0})
    if breaks:
        samples = [breaks[0] - 1]
        samples += [(a + b) / 2 for a, b in zip(breaks, breaks[1:])]
        samples.append(breaks[-1] + 1)
    else:
        samples = [Fraction(0)]
    cells = set()
    for lam in samples:
        cells.add("".join("+" if base + slope * lam > 0 else "-" for base, slope in forms))
    return cells


def load_report(lines: Iterable[Line], triple: PlaneTriple) -> LoadReport:
    counts = dict.fromkeys(SIGN_VECTORS, 0)
    contained = []
    for i, line in enumerate(lines):
        cells = line_cells(line, triple)
        if cells is None:
            contained.extend((i, j) for j, plane in enumerate(triple)
                             if isinstance(side_of(line, plane), Contained))
            continue
        for s in cells:
            counts[s] += 1
    return LoadReport(counts, max(counts.values()), tuple(contained))


def fragment_total(lines: Iterable[Line], triple: PlaneTriple) -> int:
    """Number of open fragments the planes cut the non-contained lines into.

    Crossings at the same parameter (coincident planes, or planes meeting on
    the line) split the line only once.
    """
    total = 0
    for line in lines:
        incidences = [side_of(line, plane) for plane in triple]
        if any(isinstance(s, Contained) for s in incidences):
            continue
        total += 1 + len({s.lam for s in incidences if isinstance(s, Crossing)})
    return total


def plane_through_parallel_lines(a: Line, b: Line) -> GeneralPlane:
    """The unique plane containing two distinct parallel lines."""
    if a.axis != b.axis:
        raise ValueError("lines are not parallel")
    if a == b:
        raise ValueError("lines coincide; the plane is not unique")
    u, v = a.axis.others()
    alpha = b.c2 - a.c2
    beta = a.c1 - b.c1
    normal = [Fraction(0)] * 3
    normal[u], normal[v] = alpha, beta
    return GeneralPlane(tuple(normal), -(alpha * a.c1 + beta * a.c2))


# --- symmetries of the coordinate frame -------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """Coordinate map ``q[k] = signs[k] * p[perm[k]]``.

    There are 48 of these; they are the symmetries of the axis frame.
    """

    perm: Tuple[int, int, int] = (0, 1, 2)
    signs: Tuple[int, int, int] = (1, 1, 1)

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2] or any(s not in (1, -1) for s in self.signs):
            raise ValueError("not a signed axis permutation")
        object.__setattr__(self, "perm", tuple(int(a) for a in self.perm))
        object.__setattr__(self, "signs", tuple(self.signs))

    @classmethod
    def all(cls):
        for perm in itertools.permutations(range(3)):
            for signs in itertools.product((1, -1), repeat=3):
                yield cls(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0, 0, 0]
        signs = [1, 1, 1]
        for k, src in enumerate(self.perm):
            perm[src] = k
            signs[src] = self.signs[k]
        return SignedPermutation(tuple(perm), tuple(signs))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """The map applying ``other`` first, then ``self``."""
        perm = tuple(other.perm[self.perm[k]] for k in range(3))
        signs = tuple(self.signs[k] * other.signs[self.perm[k]] for k in range(3))
        return SignedPermutation(perm, signs)

    def new_axis(self, old) -> Axis:
        return Axis(self.perm.index(int(old)))

    def point(self, p: Sequence) -> Tuple:
        return tuple(self.signs[k] * p[self.perm[k]] for k in range(3))

    def line(self, line: Line) -> Line:
        return Line.through(self.new_axis(line.axis), self.point(line.point()))

    def lines(self, lines: Iterable[Line]):
        return [self.line(line) for line in lines]

    def plane(self, plane: Plane) -> Plane:
        if isinstance(plane, AxisPlane):
            k = self.new_axis(plane.axis)
            return AxisPlane(k, self.signs[k] * plane.offset)
        normal = tuple(self.signs[k] * plane.normal[self.perm[k]] for k in range(3))
        return GeneralPlane(normal, plane.offset)

    def triple(self, triple: PlaneTriple) -> PlaneTriple:
        return PlaneTriple(tuple(self.plane(p) for p in triple))
