"""Landmark graphs, system classes, forbidden configurations, footprints.

The frozen systems below were found by enumerating 2-basic systems and
keeping the first whose scan reports each configuration; their verdicts
were cross-checked against the distance verifier before pinning.
"""

import pytest

from hammingdim import (
    FootprintShape,
    LandmarkSet,
    NotApplicable,
    SystemKind,
    Verdict,
    basic_part,
    build_landmark_graph,
    classify,
    extend_triple_looped,
    fixture,
    footprint,
    forbidden_scan,
    hamming_graph,
    is_resolving,
    is_resolving_by_distance,
    metric_basis,
    predict_resolving,
)
from hammingdim.landmark import COLOR_NAMES, CycleReport, TWO_BASIC_SHAPES

G3 = hamming_graph(3, 3, 3)

# 2-basic at n=3; scan finds 4-cycles on three colors (first frozen below)
C4_SYSTEM = ((1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 3, 3), (3, 2, 3), (3, 3, 1))

# 2-basic at n=3 whose landmark graph is K_{3,3} built around a hexagon
# colored a b c a b c; scan finds three such 6-cycles
C6_SYSTEM = ((1, 3, 2), (1, 1, 3), (3, 1, 1), (2, 3, 1), (2, 2, 3), (3, 2, 2))

# properly colored K4 on four landmarks; every 4-cycle alternates two
# colors, every triangle is rainbow
K4_SET = ((1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1))


def test_color_names():
    assert COLOR_NAMES == {1: "blue", 2: "green", 3: "pink"}


def test_build_fixture_profile():
    G = build_landmark_graph(fixture("n3"))
    by_color = {i: sorted(len(e.members) for e in G.edges_of_color(i)) for i in (1, 2, 3)}
    assert by_color == {1: [3, 3], 2: [2, 2, 2], 3: [2, 2, 2]}


def test_build_empty():
    G = build_landmark_graph(LandmarkSet(G3, []))
    assert G.vertices == ()
    assert G.hyperedges == ()


def test_build_mobius_derived():
    W = metric_basis(4)
    G = build_landmark_graph(W)
    assert len(G.vertices) == 8
    for i in (1, 2, 3):
        edges = G.edges_of_color(i)
        assert len(edges) == 4
        assert all(len(e.members) == 2 for e in edges)
        # same-colored blocks partition the landmarks
        seen = [v for e in edges for v in e.members]
        assert sorted(seen) == sorted(G.vertices)


def test_classify():
    W = metric_basis(4)
    assert classify(W).kind is SystemKind.TWO_BASIC
    ext = extend_triple_looped(W)
    cls = classify(ext)
    assert cls.kind is SystemKind.TRIPLE_LOOPED
    assert cls.loop_vertex == (5, 5, 5)
    assert classify(fixture("n3")).kind is SystemKind.OTHER
    assert classify(LandmarkSet(G3, K4_SET)).kind is SystemKind.OTHER
    # n6 has one loop per color but on three distinct landmarks
    assert classify(fixture("n6")).kind is SystemKind.OTHER


def test_extend_and_basic_part_round_trip():
    W = metric_basis(4)
    ext = extend_triple_looped(W)
    assert ext.graph.dims == (5, 5, 5)
    assert set(ext.members) == set(W.members) | {(5, 5, 5)}
    back = basic_part(ext)
    assert back.graph.dims == (4, 4, 4)
    assert set(back.members) == set(W.members)
    with pytest.raises(NotApplicable):
        basic_part(W)  # not triple-looped
    with pytest.raises(NotApplicable):
        extend_triple_looped(fixture("n3"))  # not 2-basic


def test_scan_mobius_clean():
    rep = forbidden_scan(build_landmark_graph(metric_basis(4)))
    assert rep.applicable
    assert rep.c4 == () and rep.c6 == () and rep.rainbow_triangles == ()
    assert rep.clean(include_triangles=True)


def test_scan_c4_instance():
    rep = forbidden_scan(build_landmark_graph(LandmarkSet(G3, C4_SYSTEM)))
    assert rep.applicable
    assert rep.c4
    first = rep.c4[0]
    assert first.landmarks == ((1, 1, 1), (1, 2, 2), (3, 2, 3), (3, 3, 1))
    assert first.colors == (1, 2, 1, 3)
    # opposite edges share a color and three colors appear
    for c in rep.c4:
        assert len(set(c.colors)) == 3
        assert c.colors[0] == c.colors[2] or c.colors[1] == c.colors[3]
        assert c.revalidates()


def test_scan_c6_instance():
    rep = forbidden_scan(build_landmark_graph(LandmarkSet(G3, C6_SYSTEM)))
    assert len(rep.c6) == 3
    first = rep.c6[0]
    assert first.landmarks == (
        (1, 1, 3), (1, 3, 2), (2, 3, 1), (3, 1, 1), (3, 2, 2), (2, 2, 3),
    )
    assert first.colors == (1, 2, 3, 1, 2, 3)
    for c in rep.c6:
        assert c.colors[:3] == c.colors[3:]
        assert len(set(c.colors)) == 3
        assert c.revalidates()


def test_scan_rainbow_triangle():
    W = LandmarkSet(G3, [(1, 1, 2), (1, 2, 1), (2, 1, 1)])
    rep = forbidden_scan(build_landmark_graph(W))
    assert not rep.applicable  # the three off-triangle blocks are loops
    assert len(rep.rainbow_triangles) == 1
    t = rep.rainbow_triangles[0]
    assert set(t.landmarks) == set(W.members)
    assert sorted(t.colors) == [1, 2, 3]
    assert t.revalidates()


def test_scan_k4_regression():
    # every 4-cycle of the properly colored K4 alternates two colors, so
    # no three-colored 4-cycle exists; all four triangles are rainbow
    rep = forbidden_scan(build_landmark_graph(LandmarkSet(G3, K4_SET)))
    assert rep.applicable
    assert rep.c4 == ()
    assert rep.c6 == ()
    assert len(rep.rainbow_triangles) == 4
    assert is_resolving(LandmarkSet(G3, K4_SET)).verdict is Verdict.UNRESOLVED


def test_cycle_report_revalidates_rejects_corruption():
    good = CycleReport(((1, 1, 2), (1, 2, 1), (2, 1, 1)), (1, 3, 2))
    assert good.revalidates()
    assert not CycleReport(((1, 1, 2), (1, 2, 1), (2, 1, 1)), (2, 3, 2)).revalidates()
    assert not CycleReport(((1, 1, 2), (1, 1, 2), (2, 1, 1)), (1, 3, 2)).revalidates()
    assert not CycleReport(((1, 1, 2), (1, 2, 1)), (1, 3, 2)).revalidates()


def test_predict_certificates():
    cert = predict_resolving(metric_basis(4))
    assert cert.verdict is Verdict.RESOLVING
    assert cert.witness is None
    assert "scan" in cert.attestation

    bad = predict_resolving(LandmarkSet(G3, C4_SYSTEM))
    assert bad.verdict is Verdict.UNRESOLVED
    assert bad.witness is None
    assert "4-cycle" in bad.attestation
    assert is_resolving_by_distance(LandmarkSet(G3, C4_SYSTEM)).verdict is Verdict.UNRESOLVED

    bad6 = predict_resolving(LandmarkSet(G3, C6_SYSTEM))
    assert bad6.verdict is Verdict.UNRESOLVED
    assert is_resolving_by_distance(LandmarkSet(G3, C6_SYSTEM)).verdict is Verdict.UNRESOLVED


def test_predict_not_applicable():
    with pytest.raises(NotApplicable):
        predict_resolving(fixture("n3"))  # OTHER class
    with pytest.raises(NotApplicable):
        predict_resolving(LandmarkSet(hamming_graph(3, 4, 5), [(1, 1, 1)]))
    comp = hamming_graph(3, 3, 3, k={1, 2})
    with pytest.raises(NotApplicable):
        predict_resolving(LandmarkSet(comp, list(C4_SYSTEM)))


def test_footprint_covered_equals_code():
    for W in [fixture("n3"), metric_basis(4), metric_basis(5)]:
        for v in W.graph.vertices():
            if v in W:
                continue
            assert footprint(W, v).covered == W.code(v)


def test_footprint_shapes_two_basic():
    W = metric_basis(4)
    shapes = {footprint(W, v).shape for v in W.graph.vertices() if v not in W}
    assert shapes == {FootprintShape.P4, FootprintShape.P3_P2, FootprintShape.THREE_P2}
    assert shapes <= TWO_BASIC_SHAPES
    for w in W.members:
        assert footprint(W, w).shape is FootprintShape.K13


def test_footprint_loop_shapes():
    W5 = metric_basis(5)
    assert footprint(W5, (5, 5, 5)).shape is FootprintShape.L3
    shapes = {footprint(W5, v).shape.value for v in W5.graph.vertices() if v not in W5}
    assert shapes == {"P3+P2", "P4", "P3+L1", "3P2", "2P2+L1", "L2+P2"}


def test_footprint_empty_and_other():
    W0 = LandmarkSet(G3, [])
    fp = footprint(W0, (1, 1, 1))
    assert fp.shape is FootprintShape.NONE
    assert fp.covered == frozenset()
    # three loops on distinct landmarks fall outside the taxonomy
    assert footprint(fixture("n6"), (1, 1, 6)).shape is FootprintShape.OTHER
