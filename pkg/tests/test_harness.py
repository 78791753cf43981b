import csv

import pytest

from tripart.geometry import load_report
from tripart.constructions import gen_three_bundle
from tripart.harness import CSV_COLUMNS, run_benchmark, verify_bundle_theorems, write_csv


class TestVerify:
    def test_three_bundle_9(self):
        report = verify_bundle_theorems("three_bundle", 9)
        assert report.computed == {"g_perp": 2, "g_par": 2}
        assert report.passed

    def test_four_bundle_8(self):
        report = verify_bundle_theorems("four-bundle", 8)
        assert report.computed == {"g_perp": 3, "g_par": 2}
        assert report.passed

    def test_three_bundle_6_tilted_witness(self):
        report = verify_bundle_theorems("three_bundle", 6)
        assert report.computed == {"g_perp": 1, "g_par": 1, "tilted_witness": 0}
        assert report.passed
        L = gen_three_bundle(6)
        assert load_report(L, report.witnesses["tilted_witness"]).max_load == 0

    def test_witnesses_achieve_values(self):
        report = verify_bundle_theorems("three_bundle", 12)
        L = gen_three_bundle(12)
        for key in ("g_perp", "g_par"):
            assert load_report(L, report.witnesses[key]).max_load == report.computed[key]

    def test_bad_n_propagates(self):
        with pytest.raises(ValueError):
            verify_bundle_theorems("four_bundle", 12)
        with pytest.raises(ValueError):
            verify_bundle_theorems("five_bundle", 8)


class TestBenchmark:
    def test_single_instance(self):
        rows = run_benchmark([9], 1, seed=1)
        assert len(rows) >= 2
        assert {r.algorithm for r in rows} == {"slab718", "ortho512"}
        assert all(r.achieved <= r.bound for r in rows)

    def test_deterministic(self):
        strip = lambda rows: [r.as_csv()[:-1] for r in rows]
        first = run_benchmark([12, 24], 2, seed=3)
        assert len({r.instance for r in first}) == 4 and len(first) >= 8
        assert strip(first) == strip(run_benchmark([12, 24], 2, seed=3))

    def test_with_optimum(self):
        for row in run_benchmark([10, 14], 2, seed=4, with_optimum=True):
            assert row.optimum <= row.achieved <= row.bound

    def test_optimum_guard(self):
        with pytest.raises(ValueError):
            run_benchmark([61], 1, seed=0, with_optimum=True)

    def test_csv(self, tmp_path):
        path = tmp_path / "bench.csv"
        write_csv(run_benchmark([9], 1, seed=1), path)
        with open(path) as f:
            rows = list(csv.reader(f))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert rows[0] == "instance,n,nx,ny,nz,seed,algorithm,achieved,bound,optimum,wall_ms".split(",")
        assert len(rows) == 3 and rows[1][9] == ""
