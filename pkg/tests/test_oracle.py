from __future__ import annotations

import itertools

import pytest

from sunsys.core import HoleGraph, difference_set
from sunsys.errors import UnsupportedBase
from sunsys.oracle import (
    BASE_ORDERS,
    FROZEN_BASES,
    INFEASIBLE,
    TIMEOUT,
    base_system,
    _match_pendants,
    brute_force_decompose,
)
from sunsys.verify import Decomposition, _target_edges, target_for, verify_partition


def test_k9_found():
    r = brute_force_decompose(9)
    assert r.found and len(r.blocks) == 6
    assert verify_partition(Decomposition(9, 0, r.blocks), 9).ok


def test_k12_minus_k9_infeasible():
    r = brute_force_decompose(target_for(12, 9), time_limit=10)
    assert r.status == INFEASIBLE


def test_k4_infeasible_and_trivial_targets():
    assert brute_force_decompose(4).status == INFEASIBLE
    assert brute_force_decompose(1).found and brute_force_decompose(1).blocks == ()
    assert brute_force_decompose(7).status == INFEASIBLE  # 21 edges


def test_partial_difference_target():
    g = HoleGraph(9, 3, {1, 2, 3})
    r = brute_force_decompose(g, time_limit=30)
    assert r.found
    d = Decomposition(12, 0, r.blocks)
    assert verify_partition(d, g).ok


def test_timeout_is_reported():
    r = brute_force_decompose(target_for(16, 9), time_limit=0.01)
    assert r.status in (TIMEOUT, "found")


def _naive_decomposable(target) -> bool:
    """Reference search: enumerate every sun in the target, cover the least edge."""
    edges = _target_edges(target)
    if len(edges) % 6:
        return False
    verts = sorted({v for e in edges for v in e})

    def key(x, y):
        return (x, y) if x < y else (y, x)

    rows = []
    for a, b, c in itertools.combinations(verts, 3):
        for d, e, f in itertools.permutations(verts, 3):
            s = {key(a, b), key(b, c), key(a, c), key(a, d), key(b, e), key(c, f)}
            if len(s) == 6 and s <= edges:
                rows.append(frozenset(s))
    by_edge = {e: [r for r in rows if e in r] for e in edges}

    def go(left):
        if not left:
            return True
        return any(go(left - r) for r in by_edge[min(left)] if r <= left)

    return go(frozenset(edges))


def _small_targets():
    out = [1, 4, 6, 7, 9]
    for u in range(3, 10):
        ds = sorted(difference_set(u))
        for t in range(6):
            for k in range(len(ds) + 1):
                for D in itertools.combinations(ds, k):
                    g = HoleGraph(u, t, set(D))
                    size = len(_target_edges(g))
                    if size and size % 6 == 0 and size <= 24:
                        out.append(g)
    return out


def test_agrees_with_naive_reference_on_small_targets():
    targets = _small_targets()
    assert len(targets) > 40
    outcomes = set()
    for g in targets:
        expected = _naive_decomposable(g)
        r = brute_force_decompose(g, time_limit=30)
        assert r.status != TIMEOUT
        assert r.found == expected, g
        outcomes.add(expected)
        if r.found:
            m = g if isinstance(g, int) else g.u + g.t
            assert verify_partition(Decomposition(m, 0, r.blocks), g).ok
    assert outcomes == {True, False}


def test_match_pendants_keeps_leaves_distinct():
    tris = [(0, 1, 2)]
    assert _match_pendants(tris, [(0, 3), (1, 3), (2, 3)]) is None
    assert _match_pendants(tris, [(0, 3), (1, 4), (2, 5)]) == ((0, 1, 2, 3, 4, 5),)


@pytest.mark.parametrize("n", BASE_ORDERS)
def test_frozen_base_systems_reproduce(n):
    r = brute_force_decompose(n, time_limit=60)
    assert r.found
    assert r.blocks == FROZEN_BASES[n]
    d = base_system(n)
    assert len(d.blocks) == n * (n - 1) // 12
    assert verify_partition(d, d.target()).ok


def test_unsupported_base():
    with pytest.raises(UnsupportedBase):
        base_system(21)
