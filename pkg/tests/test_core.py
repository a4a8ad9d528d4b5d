from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from sunsys.core import (
    HoleGraph,
    Sun,
    canonical_difference,
    cycles_of_difference,
    cyc,
    difference_set,
    hole_graph_edges,
    inf,
    make_edge,
    make_sun,
    orbit,
    reduce_difference,
    sun_edges,
    translate,
)
from sunsys.errors import DegenerateSun, InvalidEdge, NotTwoFactor
from sunsys.verify import Decomposition, verify_partition


def E(u, x, y):
    def v(p):
        return p if not isinstance(p, int) else cyc(p, u)

    return make_edge(v(x), v(y))


def test_canonical_difference_examples():
    assert canonical_difference(0, 4, 8) == 4
    assert canonical_difference(1, 6, 7) == 2
    assert canonical_difference(0, 10, 19) == 9
    with pytest.raises(InvalidEdge):
        canonical_difference(3, 3, 7)
    with pytest.raises(InvalidEdge):
        canonical_difference(2, 9, 7)


@given(st.integers(2, 60), st.integers(-200, 200), st.integers(-200, 200))
def test_canonical_difference_symmetric_and_in_range(u, i, j):
    if (i - j) % u == 0:
        return
    d = canonical_difference(i, j, u)
    assert d == canonical_difference(j, i, u)
    assert 1 <= d <= u // 2


def test_vertices_reduce_and_order():
    assert cyc(13, 11) == cyc(2, 11)
    assert cyc(5, 7) < inf(1) < inf(2)
    with pytest.raises(ValueError):
        inf(0)
    with pytest.raises(InvalidEdge):
        make_edge(cyc(1, 5), cyc(6, 5))
    assert make_edge(inf(1), cyc(0, 5)) == (cyc(0, 5), inf(1))


def test_sun_edges_plain():
    s = make_sun(6, 0, 1, 2, 3, 4, 5)
    want = {E(6, 0, 1), E(6, 1, 2), E(6, 0, 2), E(6, 0, 3), E(6, 1, 4), E(6, 2, 5)}
    assert sun_edges(s) == want


def test_sun_edges_with_infinity_points():
    s = make_sun(8, inf(1), 2, 0, 3, 4, inf(2))
    want = {
        E(8, inf(1), 2), E(8, 2, 0), E(8, inf(1), 0),
        E(8, inf(1), 3), E(8, 2, 4), E(8, 0, inf(2)),
    }
    assert sun_edges(s) == want


def test_sun_edges_rejects_repeats():
    with pytest.raises(DegenerateSun):
        sun_edges(make_sun(6, 0, 1, 2, 3, 1, 5))


def test_sun_repr():
    assert repr(make_sun(11, 1, 3, 0, inf(1), 8, 4)) == "(1,3,0;inf1,8,4)"


def test_translate():
    s = make_sun(11, 1, 3, 0, inf(1), 8, 4)
    assert translate(s, 1, 11) == make_sun(11, 2, 4, 1, inf(1), 9, 5)
    assert translate(s, 0, 11) == s
    assert translate(s, 11, 11) == s


def test_orbit_covers_three_differences_and_stars():
    base = make_sun(9, 1, 3, 0, inf(1), inf(2), inf(3))
    suns = orbit(base, 9)
    assert len(suns) == 9
    g = HoleGraph(9, 3, {1, 2, 3})
    ints = Decomposition(12, 0, [tuple(v.index if not v.is_infinity else 8 + v.index for v in s) for s in suns])
    assert verify_partition(ints, g).ok


def test_orbit_of_leave_block_covers_d13():
    s, u = 1, 13
    base = make_sun(u, 5 * s + 1, 5 * s, 0, 3 * s, s, u - 2)
    edges = [e for t in orbit(base, u) for e in sun_edges(t)]
    assert len(edges) == len(set(edges)) == 78
    assert set(edges) == hole_graph_edges(HoleGraph.full(13, 0))


def test_orbit_rejects_degenerate_base():
    with pytest.raises(DegenerateSun):
        orbit(make_sun(9, 0, 1, 2, 0, 4, 5), 9)


def test_cycles_of_difference():
    assert cycles_of_difference(9, 3) == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    cyc12 = cycles_of_difference(12, 2)
    assert len(cyc12) == 2 and all(len(c) == 6 for c in cyc12)
    assert len(cycles_of_difference(7, 3)) == 1
    with pytest.raises(NotTwoFactor):
        cycles_of_difference(8, 4)
    with pytest.raises(ValueError):
        cycles_of_difference(8, 5)


@given(st.integers(3, 80).flatmap(lambda u: st.tuples(st.just(u), st.integers(1, u // 2))))
def test_cycles_cover_difference_class_once(ud):
    u, d = ud
    if 2 * d == u:
        return
    cycles = cycles_of_difference(u, d)
    edges = [make_edge(cyc(c[i], u), cyc(c[(i + 1) % len(c)], u)) for c in cycles for i in range(len(c))]
    assert len(edges) == len(set(edges)) == u
    assert all(canonical_difference(x.index, y.index, u) == d for x, y in edges)


def test_hole_graph_edge_counts():
    assert len(hole_graph_edges(HoleGraph(8, 2, {2}))) == 24
    assert len(hole_graph_edges(HoleGraph(8, 0, {4}))) == 4
    g = HoleGraph(9, 12, {1, 2, 3, 4})
    assert len(hole_graph_edges(g)) == g.edge_count() == 144 == comb(21, 2) - comb(12, 2)
    with pytest.raises(ValueError):
        HoleGraph(8, 0, {5})


@given(st.integers(1, 40), st.integers(0, 20))
def test_full_hole_graph_is_complete_minus_complete(u, t):
    g = HoleGraph.full(u, t)
    assert len(hole_graph_edges(g)) == g.edge_count() == comb(u + t, 2) - comb(t, 2)


def test_difference_set_and_reduction():
    assert difference_set(9) == {1, 2, 3, 4}
    assert reduce_difference(10, 19) == 9
    assert reduce_difference(-3, 11) == 3
    assert isinstance(make_sun(5, 0, 1, 2, 3, 4, inf(1)), Sun)
