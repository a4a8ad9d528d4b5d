"""Exact edge-partition checking for block lists."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import repeat
from typing import Union

from .core import CYCLIC, HoleGraph, Vertex, inf, sun_to_ints


@dataclass(frozen=True)
class Decomposition:
    """Integer block list on vertices 0..m-1.

    For ``kind == "hole"`` the last ``n`` ids form the hole and the target
    graph is K_m minus K_n; for ``kind == "complete"`` it is K_m and ``n``
    is 0.
    """

    m: int
    n: int
    blocks: tuple
    kind: str = "complete"

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.kind not in ("complete", "hole"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "complete" and self.n != 0:
            raise ValueError("complete decompositions carry no hole")
        for b in self.blocks:
            if len(b) != 6 or not all(0 <= x < self.m for x in b):
                raise ValueError(f"block {b} is not a sun on 0..{self.m - 1}")

    @property
    def u(self) -> int:
        return self.m - self.n

    @property
    def hole(self) -> frozenset:
        return frozenset(range(self.m - self.n, self.m))

    def target(self) -> Union[HoleGraph, int]:
        return target_for(self.m, self.n)


def target_for(m: int, n: int) -> Union[HoleGraph, int]:
    """K_m minus K_n as a hole graph, or the plain order when that is degenerate."""
    u = m - n
    if u < 1 or (u == 1 and n == 0):
        return m
    if n == 0:
        return HoleGraph.full(m, 0) if m >= 2 else m
    return HoleGraph.full(u, n)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    missing_edges: list = field(default_factory=list)
    duplicated_edges: list = field(default_factory=list)
    foreign_edges: list = field(default_factory=list)
    block_count: int = 0
    expected_edge_count: int = 0

    def summary(self) -> str:
        status = "OK" if self.ok else "FAILED"
        return (
            f"{status}: {self.block_count} blocks, {self.expected_edge_count} target edges, "
            f"{len(self.missing_edges)} missing, {len(self.duplicated_edges)} duplicated, "
            f"{len(self.foreign_edges)} foreign"
        )


def _target_edges(target) -> set:
    if isinstance(target, int):
        return {(i, j) for i in range(target) for j in range(i + 1, target)}
    # same ids as vertex_id: cyclic i -> i, inf_k -> u + k - 1
    u = target.u
    edges = set()
    for d in target.D:
        edges.update(zip(range(u - d), range(d, u)))  # i -> i + d
        edges.update(zip(range(d), range(u - d, u)))  # wrapped past u
    for h in range(u, u + target.t):
        edges.update(zip(range(u), repeat(h)))
    return edges


def _target_keys(target, N: int) -> tuple:
    """Target edges as keys x*N+y: (x < y keys, x > y keys).

    Built from arithmetic ranges; agrees with ``_target_edges``.
    """
    if isinstance(target, int):
        n = target
        lo = {x * N + y for x in range(n) for y in range(x + 1, n)}
        return lo, {(k % N) * N + k // N for k in lo}
    u, step = target.u, N + 1
    lo, hi = set(), set()
    for d in target.D:
        lo.update(range(d, d + (u - d) * step, step))  # (i, i + d)
        lo.update(range(u - d, u - d + d * step, step))  # (j, j + u - d)
        hi.update(range(d * N, d * N + (u - d) * step, step))
        hi.update(range((u - d) * N, (u - d) * N + d * step, step))
    for h in range(u, u + target.t):
        lo.update(range(h, h + u * N, N))
        hi.update(range(h * N, h * N + u))
    return lo, hi


def _int_blocks(obj, target) -> list:
    if not hasattr(obj, "graph"):
        return [tuple(b) for b in obj.blocks]
    u = target if isinstance(target, int) else target.u
    t = 0 if isinstance(target, int) else target.t
    ids = {Vertex(CYCLIC, i): i for i in range(u)}
    ids.update((inf(k), u + k - 1) for k in range(1, t + 1))
    out = []
    for s in obj.blocks:
        try:
            out.append(tuple(map(ids.__getitem__, s)))
        except KeyError:  # a vertex outside the target; keep it so it shows as foreign
            out.append(sun_to_ints(s, u))
    return out


def block_pairs(b) -> list:
    a, b_, c, d, e, f = b
    return [(a, b_), (b_, c), (c, a), (a, d), (b_, e), (c, f)]


def verify_partition(obj, target) -> VerificationReport:
    """Compare the multiset of block edges against the target's edge set.

    ``obj`` is a ``Decomposition`` or anything with ``graph`` and ``blocks``
    (a lemma output); ``target`` is a ``HoleGraph`` or a complete-graph order.
    """
    blocks = _int_blocks(obj, target)
    order = target if isinstance(target, int) else target.u + target.t
    N = max([order] + [max(b) + 1 for b in blocks])
    lo, hi = _target_keys(target, N)
    # Each covered edge {x, y} is counted once as x*N+y and once as y*N+x,
    # which avoids ordering every pair.  A loop (x, x) is never a target edge.
    keys = []
    add = keys.extend
    for a, b, c, d, e, f in blocks:
        a_, b_, c_ = a * N, b * N, c * N
        add((a_ + b, b_ + a, b_ + c, c_ + b, c_ + a, a_ + c, a_ + d, d * N + a, b_ + e, e * N + b, c_ + f, f * N + c))
    counts = Counter(keys)
    foreign = sorted(divmod(k, N) for k in counts.keys() - lo - hi if k // N <= k % N)
    duplicated = []
    if len(counts) < len(keys):
        duplicated = sorted(divmod(k, N) for k, c in counts.items() if c > 1 and k // N < k % N for _ in range(c - 1))
    missing = sorted(divmod(k, N) for k in lo - counts.keys())
    ok = not missing and not duplicated and not foreign and 6 * len(blocks) == len(lo)
    return VerificationReport(ok, missing, duplicated, foreign, len(blocks), len(lo))
