"""Tight-value verification for the bundle families and the benchmark runner."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .constructions import LineSet, gen_four_bundle, gen_random, gen_three_bundle
from .geometry import Axis, PlaneTriple, load_report, plane_through_parallel_lines
from .solvers import (
    AXIS_PARALLEL,
    ORTHOGONAL,
    Solution,
    brute_force,
    solve_orthogonal_512,
    solve_slab_split,
)

THREE_BUNDLE = "three_bundle"
FOUR_BUNDLE = "four_bundle"

OPTIMUM_LIMIT = 60

CSV_COLUMNS = ("instance", "n", "nx", "ny", "nz", "seed", "algorithm",
               "achieved", "bound", "optimum", "wall_ms")


def _family(name: str) -> str:
    name = name.replace("-", "_")
    if name not in (THREE_BUNDLE, FOUR_BUNDLE):
        raise ValueError(f"unknown family {name!r}")
    return name


@dataclass
class TheoremReport:
    family: str
    n: int
    computed: Dict[str, int]
    expected: Dict[str, int]
    witnesses: Dict[str, PlaneTriple] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.computed == self.expected


def expected_values(family: str, n: int) -> Dict[str, int]:
    family = _family(family)
    if family == FOUR_BUNDLE:
        return {"g_perp": 3 * n // 8, "g_par": 3 * n // 8 - 1}
    if n == 3:
        return {"g_perp": 0, "g_par": 0}
    if n == 6:
        return {"g_perp": 1, "g_par": 1, "tilted_witness": 0}
    return {"g_perp": n // 3 - 1, "g_par": n // 3 - 1}


def bundle_spanning_triple(lines: LineSet) -> PlaneTriple:
    """One plane through each two-line bundle (only meaningful for n = 6)."""
    planes = []
    for axis in Axis:
        bundle = lines.of_axis(axis)
        if len(bundle) != 2:
            raise ValueError("bundle-spanning planes need exactly two lines per axis")
        planes.append(plane_through_parallel_lines(*bundle))
    return PlaneTriple(tuple(planes))


def verify_bundle_theorems(family: str, n: int) -> TheoremReport:
    family = _family(family)
    lines = gen_three_bundle(n) if family == THREE_BUNDLE else gen_four_bundle(n)
    perp = brute_force(lines, ORTHOGONAL)
    par = brute_force(lines, AXIS_PARALLEL)
    computed = {"g_perp": perp.achieved, "g_par": par.achieved}
    witnesses = {"g_perp": perp.triple, "g_par": par.triple}
    if family == THREE_BUNDLE and n == 6:
        tilted = bundle_spanning_triple(lines)
        computed["tilted_witness"] = load_report(lines, tilted).max_load
        witnesses["tilted_witness"] = tilted
    return TheoremReport(family, n, computed, expected_values(family, n), witnesses)


@dataclass(frozen=True)
class BenchmarkRow:
    instance: str
    n: int
    nx: int
    ny: int
    nz: int
    seed: int
    algorithm: str
    achieved: int
    bound: int
    optimum: Optional[int]
    wall_ms: float

    def as_csv(self) -> List[str]:
        return [self.instance, str(self.n), str(self.nx), str(self.ny), str(self.nz),
                str(self.seed), self.algorithm, str(self.achieved), str(self.bound),
                "" if self.optimum is None else str(self.optimum), f"{self.wall_ms:.3f}"]


def random_sizes(n: int, rng: random.Random):
    a, b = sorted(rng.randint(0, n) for _ in range(2))
    return a, b - a, n - b


def run_benchmark(sizes: Sequence[int], trials: int, seed: int,
                  with_optimum: bool = False) -> List[BenchmarkRow]:
    """Run both constructive solvers on random general-position instances.

    With ``with_optimum`` each row also carries the brute-force optimum of the
    matching plane class (orthogonal for ``ortho512``, axis-parallel for
    ``slab718``).
    """
    sizes = list(sizes)
    if any(n < 1 for n in sizes) or trials < 0:
        raise ValueError("sizes must be positive and trials non-negative")
    if with_optimum and any(n > OPTIMUM_LIMIT for n in sizes):
        raise ValueError(f"brute-force optimum is limited to n <= {OPTIMUM_LIMIT}")
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        for t in range(trials):
            nx, ny, nz = random_sizes(n, rng)
            instance_seed = rng.randrange(2 ** 63)
            lines = gen_random(nx, ny, nz, 4 * n + 10, instance_seed)
            for name, solver, mode in (("slab718", solve_slab_split, AXIS_PARALLEL),
                                       ("ortho512", solve_orthogonal_512, ORTHOGONAL)):
                start = time.perf_counter()
                sol: Solution = solver(lines)
                wall = (time.perf_counter() - start) * 1000
                optimum = brute_force(lines, mode).achieved if with_optimum else None
                rows.append(BenchmarkRow(f"n{n}-t{t}", n, nx, ny, nz, instance_seed, name,
                                         sol.achieved, sol.bound, optimum, wall))
    return rows


def write_csv(rows: Sequence[BenchmarkRow], path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.as_csv())
