"""Exact-cover search for 3-sun decompositions and the frozen base systems.

Every edge of the target must be covered exactly once, either as a side of
some block's triangle or as a pendant.  Rather than enumerating whole suns
as rows (hundreds of thousands of them for K_16 minus K_9), the search
decides one edge at a time: it becomes a triangle side (pick the third
vertex) or a pendant oriented away from the triangle vertex that owns it.
A vertex must end up owning exactly one pendant per triangle through it.
Once every edge has a role, pendants are matched to triangles so that each
triangle's three leaves are distinct; the block list follows.

Branching takes the uncovered edge with the fewest surviving roles (ties by
edge order) and tries roles in a fixed order, so results are reproducible.
Interchangeable vertices (hole points; all cyclic points when every
difference is present; all points of a complete graph) that nothing touches
yet are introduced in index order only.  Counting bounds (``_vertex_ok`` and
``global_ok``) cut nodes that provably cannot be completed, so an
``infeasible`` answer means the search space was exhausted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from .core import HoleGraph, difference_set
from .errors import UnsupportedBase
from .verify import Decomposition, _target_edges

FOUND = "found"
INFEASIBLE = "infeasible"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchResult:
    status: str
    blocks: Optional[tuple] = None
    nodes: int = 0
    seconds: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Timeout(Exception):
    pass


def _vertex_classes(target) -> tuple:
    """Vertex count, interchangeable vertex classes, and the hole ids."""
    if isinstance(target, int):
        return target, [list(range(target))], frozenset()
    u, t = target.u, target.t
    classes = [list(range(u, u + t))]
    if frozenset(target.D) == difference_set(u):
        classes.append(list(range(u)))
    return u + t, classes, frozenset(range(u, u + t))


def _vertex_ok(r: int, need: int) -> bool:
    """Can a vertex with r uncovered edges still balance its pendants?

    ``need`` is (triangles through v) - (pendants owned by v).  Future
    triangles dt and owned pendants do must satisfy do = need + dt >= 0 and
    2dt + do <= r.
    """
    return need <= r if need >= 0 else -2 * need <= r


def _match_pendants(tris: list, outs: list) -> Optional[tuple]:
    """Assign each owned pendant to one triangle of its owner, leaves distinct."""
    owned = {}
    for a, b in outs:
        owned.setdefault(a, []).append(b)
    # most constrained owners first
    slots = sorted(((v, i) for i, t in enumerate(tris) for v in t), key=lambda s: (len(owned.get(s[0], ())), s[1], s[0]))
    used = {v: [False] * len(bs) for v, bs in owned.items()}
    leaf = {}

    def go(k):
        if k == len(slots):
            return True
        v, i = slots[k]
        for j, b in enumerate(owned[v]):
            if used[v][j] or any(leaf.get((i, w)) == b for w in tris[i]):
                continue
            used[v][j] = True
            leaf[(i, v)] = b
            if go(k + 1):
                return True
            used[v][j] = False
            del leaf[(i, v)]
        return False

    if not go(0):
        return None
    return tuple(t + tuple(leaf[(i, v)] for v in t) for i, t in enumerate(tris))


def brute_force_decompose(target: Union[HoleGraph, int], time_limit: Optional[float] = None) -> SearchResult:
    """Search for a partition of the target's edges into 3-suns.

    ``target`` is a hole graph (vertex ids as in ``vertex_id``) or the order
    of a complete graph.  Returns status ``found`` with the blocks (triangle
    sorted, pendants aligned), ``infeasible`` after exhausting the search,
    or ``timeout``.
    """
    start = time.monotonic()
    edges = _target_edges(target)
    order, classes, hole = _vertex_classes(target)
    if not edges:
        return SearchResult(FOUND, (), 0, 0.0)
    if len(edges) % 6:
        return SearchResult(INFEASIBLE, None, 0, time.monotonic() - start)

    R = len(edges) // 6
    nb = [set() for _ in range(order)]
    for x, y in edges:
        nb[x].add(y)
        nb[y].add(x)
    deg = [len(s) for s in nb]
    need = [0] * order
    touched = [False] * order
    class_of = {v: ci for ci, cl in enumerate(classes) for v in cl}
    off_hole = [v for v in range(order) if v not in hole]
    hole_ids = sorted(hole)
    uncovered = set(edges)
    tris, outs = [], []
    # triangles, pendants, uncovered edges off the hole, nodes visited
    st = {"T": 0, "P": 0, "inner": sum(1 for x, y in edges if x not in hole and y not in hole), "nodes": 0}
    deadline = None if time_limit is None else start + time_limit

    def cover(x, y):
        nb[x].discard(y)
        nb[y].discard(x)
        deg[x] -= 1
        deg[y] -= 1
        uncovered.discard((x, y) if x < y else (y, x))
        if x not in hole and y not in hole:
            st["inner"] -= 1

    def uncover(x, y):
        nb[x].add(y)
        nb[y].add(x)
        deg[x] += 1
        deg[y] += 1
        uncovered.add((x, y) if x < y else (y, x))
        if x not in hole and y not in hole:
            st["inner"] += 1

    def global_ok():
        # Each future triangle holds at most one hole point and then still
        # has a side off the hole (three sides otherwise).
        dT = R - st["T"]
        via_hole = min(dT, sum(max(0, (deg[h] - need[h]) // 3) for h in hole_ids))
        slots = sum(max(0, (deg[v] - need[v]) // 3) for v in off_hole)
        return slots >= 3 * dT - via_hole and st["inner"] >= 3 * dT - 2 * via_hole

    def tri_ok(z, x, y):
        return (
            _vertex_ok(deg[x] - 2, need[x] + 1)
            and _vertex_ok(deg[y] - 2, need[y] + 1)
            and _vertex_ok(deg[z] - 2, need[z] + 1)
        )

    def pend_ok(a, b):
        return _vertex_ok(deg[a] - 1, need[a] - 1) and _vertex_ok(deg[b] - 1, need[b])

    def count_roles(x, y):
        c = 0
        if st["T"] < R:
            c += sum(1 for z in nb[x] & nb[y] if tri_ok(z, x, y))
        if st["P"] < 3 * R:
            c += pend_ok(x, y) + pend_ok(y, x)
        return c

    def first_free(ci, exclude):
        for v in classes[ci]:
            if not touched[v] and v not in exclude:
                return v
        return None

    def roles(x, y):
        out = []
        if st["T"] < R:
            for z in sorted(nb[x] & nb[y]):
                if not tri_ok(z, x, y):
                    continue
                ci = class_of.get(z)
                if ci is not None and not touched[z] and z != first_free(ci, (x, y)):
                    continue
                out.append((z,))
        if st["P"] < 3 * R:
            for a, b in ((x, y), (y, x)):
                if pend_ok(a, b):
                    out.append((a, b))
        return out

    def search():
        if not uncovered:
            return _match_pendants(tris, outs)
        st["nodes"] += 1
        if deadline is not None and st["nodes"] % 512 == 0 and time.monotonic() > deadline:
            raise _Timeout
        if not global_ok():
            return None
        best = None
        for e in sorted(uncovered):
            c = count_roles(*e)
            if best is None or c < best[0]:
                best = (c, e)
                if c == 0:
                    return None
        x, y = best[1]
        for role in roles(x, y):
            if len(role) == 1:
                (z,) = role
                tri = tuple(sorted((x, y, z)))
                cover(x, y)
                cover(x, z)
                cover(y, z)
                saved = [touched[v] for v in tri]
                for v in tri:
                    need[v] += 1
                    touched[v] = True
                tris.append(tri)
                st["T"] += 1
                found = search()
                if found is not None:
                    return found
                st["T"] -= 1
                tris.pop()
                for v, s in zip(tri, saved):
                    need[v] -= 1
                    touched[v] = s
                uncover(y, z)
                uncover(x, z)
                uncover(x, y)
            else:
                a, b = role
                cover(a, b)
                saved = (touched[a], touched[b])
                touched[a] = touched[b] = True
                need[a] -= 1
                outs.append((a, b))
                st["P"] += 1
                found = search()
                if found is not None:
                    return found
                st["P"] -= 1
                outs.pop()
                need[a] += 1
                touched[a], touched[b] = saved
                uncover(a, b)
        return None

    try:
        blocks = search()
    except _Timeout:
        return SearchResult(TIMEOUT, None, st["nodes"], time.monotonic() - start)
    elapsed = time.monotonic() - start
    if blocks is None:
        return SearchResult(INFEASIBLE, None, st["nodes"], elapsed)
    return SearchResult(FOUND, blocks, st["nodes"], elapsed)


BASE_ORDERS = (9, 12, 13)

# Output of brute_force_decompose(n) for n in BASE_ORDERS, frozen verbatim.
FROZEN_BASES = {
    9: (
        (0, 1, 2, 5, 4, 3),
        (0, 3, 4, 6, 7, 5),
        (1, 3, 5, 6, 8, 2),
        (2, 7, 8, 4, 0, 1),
        (4, 6, 7, 8, 3, 1),
        (5, 6, 8, 7, 2, 0),
    ),
    12: (
        (0, 1, 2, 7, 8, 4),
        (0, 3, 4, 8, 7, 9),
        (0, 5, 6, 9, 10, 11),
        (1, 3, 5, 7, 9, 8),
        (1, 4, 6, 9, 11, 10),
        (2, 3, 6, 5, 8, 7),
        (2, 10, 11, 7, 0, 1),
        (4, 8, 10, 5, 6, 1),
        (7, 9, 10, 4, 2, 3),
        (5, 7, 11, 9, 8, 0),
        (8, 9, 11, 2, 6, 3),
    ),
    13: (
        (0, 1, 2, 9, 10, 11),
        (0, 3, 4, 10, 9, 5),
        (0, 5, 6, 11, 8, 9),
        (0, 7, 8, 12, 10, 9),
        (1, 3, 5, 11, 10, 9),
        (1, 4, 7, 9, 8, 11),
        (1, 6, 8, 12, 11, 10),
        (2, 3, 8, 9, 12, 11),
        (3, 6, 7, 11, 10, 12),
        (2, 4, 6, 10, 11, 12),
        (2, 5, 7, 12, 10, 9),
        (4, 9, 12, 10, 11, 5),
        (10, 11, 12, 9, 5, 8),
    ),
}


def base_system(n: int) -> Decomposition:
    if n not in FROZEN_BASES:
        raise UnsupportedBase(f"no frozen base system of order {n}; have {BASE_ORDERS}")
    return Decomposition(n, 0, FROZEN_BASES[n], "complete")
