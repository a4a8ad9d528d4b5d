from __future__ import annotations

import pytest

from sunsys.core import HoleGraph, hole_graph_edges, vertex_id
from sunsys.planner import decompose_hole
from sunsys.verify import Decomposition, _target_edges, _target_keys, target_for, verify_partition


@pytest.fixture(scope="module")
def hole_9_7():
    return decompose_hole(9, 7)


def test_valid_hole_decomposition(hole_9_7):
    d = hole_9_7
    assert len(d.blocks) == 14
    report = verify_partition(d, HoleGraph.full(7, 9))
    assert report.ok
    assert report.block_count == 14 and report.expected_edge_count == 84


def test_deleted_block_reports_missing(hole_9_7):
    d = Decomposition(16, 9, hole_9_7.blocks[1:], "hole")
    report = verify_partition(d, d.target())
    assert not report.ok
    assert len(report.missing_edges) == 6
    assert not report.duplicated_edges and not report.foreign_edges


def test_duplicated_block_reports_duplicates(hole_9_7):
    d = Decomposition(16, 9, hole_9_7.blocks + hole_9_7.blocks[:1], "hole")
    report = verify_partition(d, d.target())
    assert not report.ok
    assert len(report.duplicated_edges) == 6
    assert not report.missing_edges


def test_hole_edge_is_foreign(hole_9_7):
    # swap a pendant onto another hole vertex: creates a hole-hole edge
    blocks = [list(b) for b in hole_9_7.blocks]
    for b in blocks:
        if b[0] >= 7 and b[3] < 7:
            b[3] = 15 if b[0] != 15 else 14
            break
    d = Decomposition(16, 9, blocks, "hole")
    report = verify_partition(d, d.target())
    assert not report.ok and report.foreign_edges


def test_decomposition_validation():
    with pytest.raises(ValueError):
        Decomposition(5, 0, [(0, 1, 2, 3, 4, 5)])
    with pytest.raises(ValueError):
        Decomposition(9, 2, [], "complete")
    with pytest.raises(ValueError):
        Decomposition(9, 0, [], "weird")


def test_target_for():
    assert target_for(9, 0) == HoleGraph.full(9, 0)
    assert target_for(16, 9) == HoleGraph.full(7, 9)
    assert target_for(1, 0) == 1
    assert target_for(0, 0) == 0


def test_summary_mentions_counts(hole_9_7):
    s = verify_partition(hole_9_7, hole_9_7.target()).summary()
    assert s.startswith("OK") and "14 blocks" in s


@pytest.mark.parametrize("g", [HoleGraph(9, 0, {1, 3}), HoleGraph(10, 3, {2, 5}), HoleGraph.full(12, 7)])
def test_target_edges_match_symbolic_edges(g):
    symbolic = {tuple(sorted((vertex_id(x, g.u), vertex_id(y, g.u)))) for x, y in hole_graph_edges(g)}
    assert _target_edges(g) == symbolic
    assert len(symbolic) == g.edge_count()


def test_repeated_vertex_is_foreign_not_duplicated():
    d = Decomposition(9, 0, [(0, 1, 2, 0, 4, 5)])
    report = verify_partition(d, 9)
    assert not report.ok
    assert (0, 0) in report.foreign_edges
    assert report.duplicated_edges == []


@pytest.mark.parametrize("target", [1, 2, 9, HoleGraph(8, 0, {4}), HoleGraph(10, 3, {2, 5}), HoleGraph.full(13, 6)])
def test_target_keys_match_target_edges(target):
    N = 23
    lo, hi = _target_keys(target, N)
    edges = _target_edges(target)
    assert lo == {x * N + y for x, y in edges}
    assert hi == {y * N + x for x, y in edges}
