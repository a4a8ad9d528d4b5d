"""Vertex, edge and 3-sun arithmetic over Z_u extended by infinity points.

A vertex is either a cyclic point ``i`` of Z_u or an infinity point
``inf(k)``.  Both sorts share one ``Vertex`` tuple type whose natural
ordering (cyclic before infinity, then by index) is the canonical order
used for edges and certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Union

from .errors import DegenerateSun, InvalidEdge, NotTwoFactor

CYCLIC = 0
INFINITY = 1


class Vertex(NamedTuple):
    sort: int
    index: int

    @property
    def is_infinity(self) -> bool:
        return self.sort == INFINITY

    def __repr__(self) -> str:
        return f"inf{self.index}" if self.sort == INFINITY else str(self.index)


def cyc(i: int, u: int) -> Vertex:
    return Vertex(CYCLIC, i % u)


def inf(k: int) -> Vertex:
    if k < 1:
        raise ValueError(f"infinity labels start at 1, got {k}")
    return Vertex(INFINITY, k)


Coord = Union[int, Vertex]
Edge = tuple  # (Vertex, Vertex) with edge[0] < edge[1]


def make_edge(x: Vertex, y: Vertex) -> Edge:
    if x == y:
        raise InvalidEdge(f"loop at {x!r}")
    return (x, y) if x < y else (y, x)


class Sun(NamedTuple):
    """The 3-sun (a,b,c;d,e,f): triangle abc, pendants ad, be, cf."""

    a: Vertex
    b: Vertex
    c: Vertex
    d: Vertex
    e: Vertex
    f: Vertex

    def __repr__(self) -> str:
        a, b, c, d, e, f = (repr(v) for v in self)
        return f"({a},{b},{c};{d},{e},{f})"


# A base block is just a sun read modulo u.
BaseBlock = Sun


def make_sun(u: int, *coords: Coord) -> Sun:
    """Build a sun from plain ints (reduced mod u) and infinity vertices."""
    if len(coords) != 6:
        raise ValueError("a 3-sun has exactly six vertices")
    return Sun(*[c if isinstance(c, Vertex) else Vertex(CYCLIC, c % u) for c in coords])


def canonical_difference(i: int, j: int, u: int) -> int:
    """|i - j|_u = min(|i-j|, u-|i-j|) for distinct points of Z_u."""
    delta = (i - j) % u
    if delta == 0:
        raise InvalidEdge(f"{i} and {j} coincide in Z_{u}")
    return min(delta, u - delta)


def reduce_difference(d: int, u: int) -> int:
    """Map a printed difference (possibly beyond u/2) into D_u."""
    return canonical_difference(d, 0, u)


def check_sun(s: Sun) -> None:
    """Six distinct vertices; the six edges are then distinct as well."""
    if len(set(s)) != 6:
        raise DegenerateSun(f"repeated vertex in {s!r}")


def sun_edges(s: Sun) -> frozenset:
    check_sun(s)
    a, b, c, d, e, f = s
    return frozenset(make_edge(x, y) for x, y in ((a, b), (b, c), (c, a), (a, d), (b, e), (c, f)))


def translate(s: Sun, i: int, u: int) -> Sun:
    return Sun(*(v if v.sort == INFINITY else Vertex(CYCLIC, (v.index + i) % u) for v in s))


def orbit(base: BaseBlock, u: int) -> list[Sun]:
    check_sun(base)
    pts = [Vertex(CYCLIC, i) for i in range(u)] * 2
    idx = [None if v.sort == INFINITY else v.index for v in base]
    return [Sun(*[v if k is None else pts[k + i] for v, k in zip(base, idx)]) for i in range(u)]


def cycles_of_difference(u: int, d: int) -> list[list[int]]:
    """Split the difference-d 2-factor of Z_u into gcd(u, d) cycles.

    Cycle j starts at j and steps by +d.
    """
    if not 1 <= d <= u // 2:
        raise ValueError(f"difference {d} outside D_{u}")
    if 2 * d == u:
        raise NotTwoFactor(f"difference {d} = u/2 gives a 1-factor")
    g = gcd(u, d)
    length = u // g
    return [[(j + step * d) % u for step in range(length)] for j in range(g)]


def difference_set(u: int) -> frozenset:
    """D_u = [1, floor(u/2)]."""
    return frozenset(range(1, u // 2 + 1))


@dataclass(frozen=True)
class HoleGraph:
    """The graph <Z_u U {inf_1..inf_t}, D>."""

    u: int
    t: int
    D: frozenset

    def __post_init__(self):
        object.__setattr__(self, "D", frozenset(self.D))
        if self.u < 1 or self.t < 0:
            raise ValueError(f"bad hole graph sizes u={self.u}, t={self.t}")
        bad = [d for d in self.D if not 1 <= d <= self.u // 2]
        if bad:
            raise ValueError(f"differences {sorted(bad)} outside D_{self.u}")

    @classmethod
    def full(cls, u: int, t: int) -> HoleGraph:
        """K_{u+t} minus K_t: all differences of Z_u."""
        return cls(u, t, difference_set(u))

    def edge_count(self) -> int:
        half = self.u // 2 if self.u % 2 == 0 and self.u // 2 in self.D else 0
        full = len(self.D) - (1 if half else 0)
        return self.u * full + half + self.t * self.u

    def order(self) -> int:
        return self.u + self.t


def hole_graph_edges(g: HoleGraph) -> set:
    u = g.u
    edges = set()
    for d in g.D:
        for i in range(u):
            edges.add(make_edge(Vertex(CYCLIC, i), Vertex(CYCLIC, (i + d) % u)))
    for k in range(1, g.t + 1):
        for i in range(u):
            edges.add(make_edge(Vertex(CYCLIC, i), Vertex(INFINITY, k)))
    return edges


def vertex_id(v: Vertex, u: int) -> int:
    """Integer id of a vertex: i for cyclic points, u + k - 1 for inf_k."""
    return u + v.index - 1 if v.sort == INFINITY else v.index


def sun_to_ints(s: Sun, u: int) -> tuple:
    return tuple(vertex_id(v, u) for v in s)


def suns_to_ints(blocks: Iterable[Sun], u: int) -> list[tuple]:
    return [sun_to_ints(s, u) for s in blocks]


def relabel_infinities(s: Sun, offset: int) -> Sun:
    """Shift every infinity label by offset (inf_k -> inf_{k+offset})."""
    return Sun(*(Vertex(INFINITY, v.index + offset) if v.sort == INFINITY else v for v in s))
