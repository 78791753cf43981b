from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripart.constructions import LineSet, gen_three_bundle
from tripart.geometry import (
    CONTAINED,
    SIGN_VECTORS,
    Axis,
    AxisPlane,
    Crossing,
    GeneralPlane,
    Line,
    PlaneTriple,
    Side,
    SignedPermutation,
    axis_triple,
    classify_plane,
    fragment_total,
    load_report,
    plane_through_parallel_lines,
    side_of,
)

from conftest import axis_planes, line_sets, lines, triples


def test_side_of_crossing():
    assert side_of(Line(Axis.X, 1, 1), AxisPlane(Axis.X, 4)) == Crossing(Fraction(4))


def test_side_of_contained():
    assert side_of(Line(Axis.Z, 4, 4), AxisPlane(Axis.X, 4)) == CONTAINED


def test_side_of_constant_side():
    assert side_of(Line(Axis.X, 1, 1), AxisPlane(Axis.Y, 3)) == Side(-1)


def test_side_of_tilted():
    plane = GeneralPlane((1, 1, 1), -3)
    hit = side_of(Line(Axis.Z, 1, 1), plane)
    assert hit == Crossing(Fraction(1))


def test_general_plane_canonical_form():
    plane = GeneralPlane((0, -2, 4), 6)
    assert plane.normal == (0, 1, -2)
    assert plane.offset == -3
    with pytest.raises(ValueError):
        GeneralPlane((0, 0, 0), 1)


def test_classify_plane():
    assert classify_plane(AxisPlane(Axis.Y, 2)) == "axis-parallel"
    assert classify_plane(GeneralPlane((0, 1, -1), 0)) == "semi-tilted"
    assert classify_plane(GeneralPlane((1, 2, 3), 0)) == "tilted"


def test_floats_rejected():
    with pytest.raises(TypeError):
        Line(Axis.X, 0.5, 1)


def test_triple_needs_three_planes():
    with pytest.raises(ValueError):
        PlaneTriple((AxisPlane(Axis.X, 0), AxisPlane(Axis.Y, 0)))


class TestLoadReport:
    def test_six_cell_witness_three_bundle(self):
        report = load_report(gen_three_bundle(9, 0), axis_triple(4, 3, 4))
        assert report.max_load == 2
        assert sorted(report.counts.values()) == [0, 0, 2, 2, 2, 2, 2, 2]
        assert len(report.contained) == 3

    def test_empty_lines(self):
        report = load_report([], axis_triple(0, 0, 0))
        assert report.max_load == 0
        assert set(report.counts) == set(SIGN_VECTORS)
        assert not any(report.counts.values())

    def test_bundle_spanning_planes_leave_nothing(self):
        L = gen_three_bundle(6)
        triple = PlaneTriple(tuple(plane_through_parallel_lines(*L.of_axis(a)) for a in Axis))
        report = load_report(L, triple)
        assert report.max_load == 0
        assert len(report.contained) == 6

    def test_line_in_two_planes_listed_twice(self):
        report = load_report([Line(Axis.Z, 1, 2)], axis_triple(1, 2, 0))
        assert report.contained == ((0, 0), (0, 1))
        assert report.max_load == 0

    def test_coincident_planes(self):
        triple = PlaneTriple((AxisPlane(Axis.X, 1),) * 3)
        report = load_report([Line(Axis.X, 0, 0)], triple)
        assert report.counts["+++"] == report.counts["---"] == 1
        assert report.total() == 2


class TestFragmentTotal:
    def test_single_crossing(self):
        assert fragment_total([Line(Axis.X, 1, 1)], axis_triple(0, 5, 5)) == 2

    def test_three_bundle_witness(self):
        # enumerated by hand over all 27 line/plane pairs: 3 contained,
        # the other 6 cross exactly the plane perpendicular to them
        assert fragment_total(gen_three_bundle(9, 0), axis_triple(4, 3, 4)) == 12

    def test_coincident_planes_split_once(self):
        L = [Line(Axis.X, 0, 0), Line(Axis.X, 1, 3)]
        triple = PlaneTriple((AxisPlane(Axis.X, 2),) * 3)
        assert fragment_total(L, triple) == 4


class TestPlaneThroughParallelLines:
    def test_diagonal(self):
        plane = plane_through_parallel_lines(Line(Axis.X, 1, 1), Line(Axis.X, 2, 2))
        assert plane == GeneralPlane((0, 1, -1), 0)

    def test_perturbed(self):
        eps = Fraction(1, 100)
        plane = plane_through_parallel_lines(Line(Axis.X, 1 + eps, 1), Line(Axis.X, 2 + 4 * eps, 2))
        assert plane == GeneralPlane((0, 1, -(1 + 3 * eps)), 2 * eps)

    def test_z_lines(self):
        plane = plane_through_parallel_lines(Line(Axis.Z, 4, 4), Line(Axis.Z, 5, 5))
        assert plane == GeneralPlane((1, -1, 0), 0)

    def test_rejects_equal_or_skew(self):
        with pytest.raises(ValueError):
            plane_through_parallel_lines(Line(Axis.Z, 4, 4), Line(Axis.Z, 4, 4))
        with pytest.raises(ValueError):
            plane_through_parallel_lines(Line(Axis.Z, 4, 4), Line(Axis.X, 4, 4))

    @given(a=lines(), b=lines())
    def test_contains_both(self, a, b):
        if a.axis != b.axis or a == b:
            return
        plane = plane_through_parallel_lines(a, b)
        assert side_of(a, plane) == side_of(b, plane) == CONTAINED
        assert plane.normal[a.axis] == 0


class TestSignedPermutation:
    def test_group_size(self):
        assert len(set(SignedPermutation.all())) == 48

    @given(st.sampled_from(list(SignedPermutation.all())), lines())
    def test_inverse(self, sigma, line):
        assert sigma.inverse().line(sigma.line(line)) == line

    @given(st.sampled_from(list(SignedPermutation.all())),
           st.sampled_from(list(SignedPermutation.all())), lines())
    def test_compose(self, f, g, line):
        assert f.compose(g).line(line) == f.line(g.line(line))


# --- invariants ----------------------------------------------------------------


@settings(max_examples=300)
@given(L=line_sets(), triple=triples())
def test_conservation(L, triple):
    assert load_report(L, triple).total() == fragment_total(L, triple)


@settings(max_examples=200)
@given(L=line_sets(), triple=triples())
def test_containment_nullity(L, triple):
    report = load_report(L, triple)
    contained = {i for i, _ in report.contained}
    for i in contained:
        single = load_report([L[i]], triple)
        assert single.total() == 0
    rest = load_report([line for i, line in enumerate(L) if i not in contained], triple)
    assert rest.counts == report.counts


@settings(max_examples=200)
@given(L=line_sets(), triple=triples(), sigma=st.sampled_from(list(SignedPermutation.all())))
def test_symmetry(L, triple, sigma):
    before = load_report(L, triple)
    after = load_report(sigma.lines(L), sigma.triple(triple))
    assert after.max_load == before.max_load
    assert Counter(after.counts.values()) == Counter(before.counts.values())


@settings(max_examples=100)
@given(L=line_sets(), triple=triples(axis_planes()),
       sigma=st.sampled_from(list(SignedPermutation.all())))
def test_symmetry_maps_sign_vectors(L, triple, sigma):
    before = load_report(L, triple)
    after = load_report(sigma.lines(L), sigma.triple(triple))
    flips = [sigma.signs[sigma.new_axis(p.axis)] for p in triple]
    for s, count in before.counts.items():
        image = "".join(c if f == 1 else {"+": "-", "-": "+"}[c] for c, f in zip(s, flips))
        assert after.counts[image] == count


@settings(max_examples=200)
@given(L=line_sets(), extra=lines(), triple=triples())
def test_monotonicity(L, extra, triple):
    if extra in L:
        return
    before = load_report(L, triple).counts
    after = load_report([*L, extra], triple).counts
    assert all(after[s] >= before[s] for s in SIGN_VECTORS)


@settings(max_examples=200)
@given(L=line_sets(), triple=triples(axis_planes()))
def test_axis_and_general_encoding_agree(L, triple):
    general = PlaneTriple(tuple(p.as_general() for p in triple))
    assert load_report(L, triple) == load_report(L, general)
    for line in L:
        for p in triple:
            assert side_of(line, p) == side_of(line, p.as_general())
