"""Block generators for the constructive decomposition lemmas.

Every constructor returns a ``LemmaOutput`` whose blocks partition the edge
set of its ``graph``.  Infinity points are ``inf(1) .. inf(t)``; the planner
relabels them when it stitches outputs together.  Cyclic coordinates may be
written unreduced and are taken modulo ``u`` on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .core import (
    HoleGraph,
    Sun,
    check_sun,
    cyc,
    cycles_of_difference,
    inf,
    make_sun,
    orbit,
    reduce_difference,
)
from .errors import DegenerateSun, PreconditionViolated

I1, I2, I3, I4, I5, I6, I7, I8 = (inf(k) for k in range(1, 9))


@dataclass(frozen=True)
class LemmaOutput:
    graph: HoleGraph
    blocks: tuple

    def __len__(self) -> int:
        return len(self.blocks)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionViolated(message)


def _output(u: int, t: int, D, blocks, checked: bool = False) -> LemmaOutput:
    # orbit() checks its base, and translates of a valid sun stay valid
    blocks = tuple(blocks)
    if not checked:
        for b in blocks:
            check_sun(b)
    return LemmaOutput(HoleGraph(u, t, frozenset(D)), blocks)


def two_inf_diff2(u: int) -> LemmaOutput:
    """<Z_u U {inf1, inf2}, {2}> for u = 0 mod 4, u >= 8."""
    _require(u % 4 == 0 and u >= 8, f"need u = 0 (mod 4), u >= 8; got {u}")
    blocks = []
    for i in range(u // 4):
        j = 4 * i
        blocks.append(make_sun(u, I1, 2 + j, j, 3 + j, 4 + j, I2))
        blocks.append(make_sun(u, I2, 3 + j, 1 + j, 2 + j, 5 + j, I1))
    return _output(u, 2, {2}, blocks)


def four_inf_diff2_mod12(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf4}, {2}> for u = 0 mod 12."""
    _require(u % 12 == 0 and u >= 12, f"need u = 0 (mod 12); got {u}")
    blocks = []
    for i in range(u // 12):
        j = 12 * i
        blocks += [
            make_sun(u, I1, j, 2 + j, 7 + j, I3, I4),
            make_sun(u, I1, 4 + j, 6 + j, 9 + j, I3, I4),
            make_sun(u, I1, 8 + j, 10 + j, 11 + j, I3, I4),
            make_sun(u, I2, 2 + j, 4 + j, 1 + j, I3, I4),
            make_sun(u, I2, 6 + j, 8 + j, 7 + j, I3, I4),
            make_sun(u, I2, 10 + j, 12 + j, 11 + j, I3, I4),
            make_sun(u, I3, 1 + j, 3 + j, 9 + j, I1, I2),
            make_sun(u, I3, 5 + j, 7 + j, 11 + j, I1, 9 + j),
            make_sun(u, I4, 3 + j, 5 + j, 1 + j, I1, I2),
            make_sun(u, I4, 9 + j, 11 + j, 7 + j, I2, 13 + j),
        ]
    return _output(u, 4, {2}, blocks)


def four_inf_diff24(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf4}, {2, 4}> for u >= 7, u != 8, u != 2 (mod 4).

    For u = 7 the difference 4 wraps to 3.
    """
    _require(u >= 7 and u != 8, f"need u >= 7, u != 8; got {u}")
    k, r = divmod(u, 4)
    _require(r in (0, 1, 3), f"u = 2 (mod 4) is not covered; got {u}")
    blocks = []
    for i in range(k - 2):
        j = 4 * i
        blocks += [
            make_sun(u, I1, 4 + j, 6 + j, 5 + j, 8 + j, I4),
            make_sun(u, I2, 5 + j, 7 + j, 6 + j, 9 + j, I1),
            make_sun(u, I3, 6 + j, 8 + j, 7 + j, 10 + j, I2),
            make_sun(u, I4, 7 + j, 9 + j, 8 + j, 11 + j, I3),
        ]
    K = 4 * k
    if r == 0:
        blocks += [
            make_sun(u, I1, 0, 2, 1, 4, I4),
            make_sun(u, I2, 1, 3, 2, 5, I1),
            make_sun(u, I3, 2, 4, 3, 6, I2),
            make_sun(u, I4, 3, 5, 4, 7, I3),
            make_sun(u, I1, K - 4, K - 2, K - 3, 0, I4),
            make_sun(u, I2, K - 3, K - 1, K - 2, 1, I1),
            make_sun(u, I3, K - 2, 0, K - 1, 2, I2),
            make_sun(u, I4, K - 1, 1, 0, 3, I3),
        ]
    elif r == 1:
        blocks += [
            make_sun(u, I1, 0, 2, 1, 4, I2),
            make_sun(u, I2, 1, 3, 0, 5, I1),
            make_sun(u, I3, 2, 4, 3, 6, I2),
            make_sun(u, I4, 3, 5, 4, 7, I3),
            make_sun(u, I1, K - 4, K - 2, K - 3, K, I2),
            make_sun(u, I2, K - 3, K - 1, K, 0, I1),
            make_sun(u, I3, K - 2, K, K - 1, 1, I1),
            make_sun(u, I4, K - 1, 0, K - 2, 2, I3),
            make_sun(u, I4, K, 1, 2, 3, I3),
        ]
    else:
        blocks += [
            make_sun(u, I1, 0, 2, 1, 4, I4),
            make_sun(u, I2, 1, 3, 2, 5, I1),
            make_sun(u, I3, 2, 4, 3, 6, I2),
            make_sun(u, I4, 3, 5, 4, 7, I3),
            make_sun(u, I1, K - 4, K - 2, K - 3, K, I4),
            make_sun(u, I2, K - 3, K - 1, K - 2, K + 1, I1),
            make_sun(u, I3, K - 2, K, K - 1, K + 2, I2),
            make_sun(u, I4, K - 1, K + 1, K, 0, I3),
            make_sun(u, I1, K, K + 2, K + 1, 1, I4),
            make_sun(u, I2, K + 1, 0, K + 2, 2, I4),
            make_sun(u, I3, K + 2, 1, 0, 3, I4),
        ]
    # k = 1 (u = 7): the closing families coincide with the opening ones.
    unique = list(dict.fromkeys(blocks))
    return _output(u, 4, {reduce_difference(2, u), reduce_difference(4, u)}, unique)


def eight_inf_diff_1_u3(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf8}, {1, u/3}> for u = 0 mod 3, u >= 12."""
    _require(u % 3 == 0 and u >= 12, f"need u = 0 (mod 3), u >= 12; got {u}")
    a = u // 3
    b = 2 * a
    blocks = []
    if u % 6 == 0:
        h = u // 6
        for i in range(h):
            blocks.append(make_sun(u, I1, 2 * i, a + 2 * i, b + 2 * i, I5, I6))
        for i in range(h):
            blocks.append(make_sun(u, I1, 1 + 2 * i, a + 1 + 2 * i, b + 1 + 2 * i, I6, I5))
        for i in range(h - 1):
            blocks.append(make_sun(u, I2, b + 2 * i, a + 2 * i, 2 + 2 * i, 2 * i, I5))
        for i in range(h - 1):
            blocks.append(make_sun(u, I2, b + 1 + 2 * i, a + 1 + 2 * i, 3 + 2 * i, 1 + 2 * i, I6))
        blocks.append(make_sun(u, I2, u - 2, b - 2, 0, a - 2, I5))
        blocks.append(make_sun(u, I2, u - 1, b - 1, 1, a - 1, I6))
        for i in range(h):
            blocks.append(make_sun(u, I3, 2 * i, 1 + 2 * i, b + 2 * i, I7, I8))
        for i in range(h):
            blocks.append(make_sun(u, I3, a + 2 * i, a + 1 + 2 * i, b + 1 + 2 * i, I7, I8))
        for i in range(h):
            blocks.append(make_sun(u, I4, 1 + 2 * i, 2 + 2 * i, b + 2 + 2 * i, I7, I8))
        for i in range(h):
            blocks.append(make_sun(u, I4, a + 1 + 2 * i, a + 2 + 2 * i, b + 1 + 2 * i, I7, I8))
        for i in range(h):
            blocks.append(make_sun(u, I5, b + 2 * i, b + 1 + 2 * i, 1 + 2 * i, I7, I8))
        for i in range(h - 1):
            blocks.append(make_sun(u, I6, b + 3 + 2 * i, b + 4 + 2 * i, 2 + 2 * i, I7, I8))
        blocks.append(make_sun(u, I6, b + 1, b + 2, b, I7, I8))
    else:
        for i in range((u - 3) // 6 + 1):
            blocks.append(make_sun(u, I1, 2 * i, a + 2 * i, b + 2 * i, I5, I6))
        for i in range((u - 9) // 6 + 1):
            blocks.append(make_sun(u, I1, 1 + 2 * i, a + 1 + 2 * i, b + 1 + 2 * i, I6, I5))
        for i in range((u - 9) // 6 + 1):
            blocks.append(make_sun(u, I2, b + 2 * i, a + 2 * i, 2 + 2 * i, 2 * i, I5))
        blocks.append(make_sun(u, I2, u - 1, b - 1, 0, a - 1, I5))
        for i in range((u - 15) // 6 + 1):
            blocks.append(make_sun(u, I2, b + 1 + 2 * i, a + 1 + 2 * i, 3 + 2 * i, 1 + 2 * i, I6))
        blocks.append(make_sun(u, I2, u - 2, b - 2, 1, a - 2, I6))
        for i in range(2, (u - 3) // 6 + 1):
            blocks.append(make_sun(u, I3, 2 * i, 1 + 2 * i, b + 2 * i, I7, I8))
        blocks.append(make_sun(u, I3, 0, 1, b, I6, I8))
        blocks.append(make_sun(u, I3, 2, 3, b + 2, I6, I8))
        for i in range((u - 9) // 6 + 1):
            blocks.append(make_sun(u, I3, a + 1 + 2 * i, a + 2 + 2 * i, b + 1 + 2 * i, I7, I8))
        for i in range((u - 9) // 6 + 1):
            blocks.append(make_sun(u, I4, 1 + 2 * i, 2 + 2 * i, b + 2 + 2 * i, I7, I8))
        for i in range((u - 3) // 6 + 1):
            blocks.append(make_sun(u, I4, a + 2 * i, a + 1 + 2 * i, b + 1 + 2 * i, I7, I8))
        for i in range((u - 9) // 6 + 1):
            blocks.append(make_sun(u, I5, b + 2 * i, b + 1 + 2 * i, 1 + 2 * i, I7, I8))
        for i in range((u - 15) // 6 + 1):
            blocks.append(make_sun(u, I6, b + 1 + 2 * i, b + 2 + 2 * i, 4 + 2 * i, I7, I8))
        blocks.append(make_sun(u, I6, u - 2, u - 1, b, I7, I8))
        blocks.append(make_sun(u, I7, u - 1, 0, 2, I5, I8))
    return _output(u, 8, {1, a}, blocks)


def _half_graph(u: int, t: int, extra=()) -> set:
    return {1, u // 2, *extra}


def three_inf_1_half(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf3}, {1, u/2}> for u = 0 mod 4, u >= 8."""
    _require(u % 4 == 0 and u >= 8, f"need u = 0 (mod 4), u >= 8; got {u}")
    h = u // 2
    blocks = []
    for i in range(u // 4 - 1):
        blocks.append(make_sun(u, I1, 2 * i, 1 + 2 * i, h + 2 + 2 * i, h + 2 * i, I3))
    blocks.append(make_sun(u, I1, h - 2, h - 1, h, u - 2, I3))
    for i in range(u // 4):
        blocks.append(make_sun(u, I2, 1 + 2 * i, h + 1 + 2 * i, 2 * i, 2 + 2 * i, I1))
    for i in range(u // 4):
        blocks.append(make_sun(u, I3, h + 1 + 2 * i, h + 2 * i, 2 * i, h + 2 + 2 * i, I2))
    return _output(u, 3, _half_graph(u, 3), blocks)


def four_inf_1_half(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf4}, {1, u/2}> for u = 0 mod 12."""
    _require(u % 12 == 0 and u >= 12, f"need u = 0 (mod 12); got {u}")
    h = u // 2
    blocks = []
    for i in range(u // 12):
        j = 6 * i
        blocks += [
            make_sun(u, I1, j, h + j, 4 + j, I3, I2),
            make_sun(u, I1, 1 + j, h + 1 + j, 5 + j, I4, I2),
            make_sun(u, I1, 2 + j, h + 2 + j, h + 3 + j, I4, I3),
            make_sun(u, I2, 1 + j, j, h + 3 + j, I3, I4),
            make_sun(u, I2, 2 + j, 3 + j, h + 4 + j, 1 + j, I4),
            make_sun(u, I2, 5 + j, 4 + j, h + 5 + j, 6 + j, 3 + j),
            make_sun(u, I3, 3 + j, h + 3 + j, 2 + j, I1, h + 2 + j),
            make_sun(u, I3, 4 + j, h + 4 + j, h + j, I4, I1),
            make_sun(u, I3, 5 + j, h + 5 + j, h + 1 + j, I4, I1),
            make_sun(u, I4, h + 1 + j, h + 2 + j, h + 3 + j, h + j, I2),
            make_sun(u, I4, h + 4 + j, h + 5 + j, h + j, h + 3 + j, h + 6 + j),
        ]
    return _output(u, 4, _half_graph(u, 4), blocks)


def six_inf_1_half(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf6}, {1, u/2}> for u = 0 mod 4, u >= 8."""
    _require(u % 4 == 0 and u >= 8, f"need u = 0 (mod 4), u >= 8; got {u}")
    h = u // 2
    q = u // 4
    blocks = []
    for i in range(q - 1):
        blocks.append(make_sun(u, I1, 2 * i, 1 + 2 * i, h + 2 + 2 * i, h + 2 * i, I3))
    blocks.append(make_sun(u, I1, h - 2, h - 1, h, u - 2, I3))
    for i in range(q):
        blocks.append(make_sun(u, I2, 1 + 2 * i, h + 1 + 2 * i, 2 * i, I6, I1))
    for i in range(q):
        blocks.append(make_sun(u, I3, h + 1 + 2 * i, h + 2 * i, 2 * i, I6, I2))
    for i in range(q):
        blocks.append(make_sun(u, I4, 1 + 2 * i, 2 + 2 * i, h + 2 + 2 * i, I5, I6))
    for i in range(q):
        blocks.append(make_sun(u, I5, h + 1 + 2 * i, h + 2 + 2 * i, 2 + 2 * i, I4, I6))
    return _output(u, 6, _half_graph(u, 6), blocks)


def seven_inf_1_half(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf7}, {1, u/2}> for u = 0 mod 12."""
    _require(u % 12 == 0 and u >= 12, f"need u = 0 (mod 12); got {u}")
    h = u // 2
    blocks = []
    for i in range(u // 12):
        j = 6 * i
        blocks += [
            make_sun(u, I1, j, h + j, 4 + j, I7, I2),
            make_sun(u, I1, 1 + j, h + 1 + j, h + 3 + j, I7, I4),
            make_sun(u, I1, 2 + j, h + 2 + j, h + 5 + j, I5, I2),
            make_sun(u, I2, 3 + j, h + 3 + j, j, I1, I4),
            make_sun(u, I2, 4 + j, h + 4 + j, 2 + j, I7, I1),
            make_sun(u, I2, 5 + j, h + 5 + j, h + 1 + j, I1, I7),
            make_sun(u, I3, j, 1 + j, h + j, I5, I6),
            make_sun(u, I3, 2 + j, 3 + j, h + 2 + j, I7, I6),
            make_sun(u, I3, 4 + j, 5 + j, h + 5 + j, I5, I6),
            make_sun(u, I4, 1 + j, 2 + j, h + 6 + j, I2, I6),
            make_sun(u, I4, 3 + j, 4 + j, h + 4 + j, I7, I6),
            make_sun(u, I4, 5 + j, 6 + j, h + 5 + j, I7, I6),
            make_sun(u, I5, h + j, h + 1 + j, 1 + j, I7, I3),
            make_sun(u, I5, h + 2 + j, h + 3 + j, 3 + j, I7, I3),
            make_sun(u, I5, h + 4 + j, h + 5 + j, 5 + j, I7, h + 6 + j),
            make_sun(u, I6, h + 1 + j, h + 2 + j, h + 5 + j, I7, I4),
            make_sun(u, I6, h + 3 + j, h + 4 + j, h + 6 + j, I7, I3),
        ]
    return _output(u, 7, _half_graph(u, 7), blocks)


def three_inf_12_half(u: int) -> LemmaOutput:
    """<Z_u U {inf1..inf3}, {1, 2, u/2}> for u = 0 mod 12."""
    _require(u % 12 == 0 and u >= 12, f"need u = 0 (mod 12); got {u}")
    h = u // 2
    blocks = []
    for i in range(u // 12):
        j = 6 * i
        blocks += [
            make_sun(u, I1, j, 1 + j, h + 1 + j, h + j, 3 + j),
            make_sun(u, I1, 2 + j, 3 + j, h + 5 + j, h + 2 + j, 5 + j),
            make_sun(u, I1, 4 + j, 5 + j, h + 2 + j, h + 4 + j, 7 + j),
            make_sun(u, I1, h + 3 + j, h + 4 + j, h + j, h + 2 + j, I2),
            make_sun(u, I2, 1 + j, h + 1 + j, h + 3 + j, 2 + j, h + 2 + j),
            make_sun(u, I2, 3 + j, 4 + j, 2 + j, h + 3 + j, 6 + j),
            make_sun(u, I2, 5 + j, h + 5 + j, h + 2 + j, 6 + j, h + 6 + j),
            make_sun(u, I3, 2 + j, j, 1 + j, 4 + j, I2),
            make_sun(u, I3, h + 2 + j, h + j, 4 + j, h + 4 + j, I2),
            make_sun(u, I3, h + 1 + j, h + 3 + j, 3 + j, h + j, h + 5 + j),
            make_sun(u, I3, h + 5 + j, h + 4 + j, 5 + j, h + 7 + j, h + 6 + j),
        ]
    return _output(u, 3, _half_graph(u, 3, (2,)), blocks)


def one_inf_single_diff(u: int, d: int) -> LemmaOutput:
    """<Z_u U {inf}, {d}> when u/gcd(u, d) = 0 mod 3, d not u/2 or u/3."""
    _require(u % 3 == 0, f"need u = 0 (mod 3); got {u}")
    d = reduce_difference(d, u)
    _require(2 * d != u and 3 * d != u, f"difference {d} is u/2 or u/3 for u={u}")
    p = u // gcd(u, d)
    _require(p % 3 == 0, f"cycle length {p} is not a multiple of 3")
    cycles = cycles_of_difference(u, d)
    q = p // 3
    blocks = []
    if q > 2:
        for x in cycles:
            for i in range(q):
                blocks.append(
                    make_sun(
                        u, I1, x[(1 + 3 * i) % p], x[(2 + 3 * i) % p], x[(6 + 3 * i) % p],
                        x[(3 * i) % p], x[(3 + 3 * i) % p],
                    )
                )
    else:
        _require(len(cycles) >= 2, "the six-cycle linking needs at least two cycles")
        c = len(cycles)
        for j, x in enumerate(cycles):
            nxt = cycles[(j + 1) % c]
            blocks.append(make_sun(u, I1, x[1], x[2], nxt[0], x[0], x[3]))
            blocks.append(make_sun(u, I1, x[4], x[5], nxt[3], x[3], x[0]))
    return _output(u, 1, {d}, blocks)


def _reduced_distinct(u: int, ds) -> list:
    ds = [reduce_difference(d, u) for d in ds]
    _require(len(set(ds)) == len(ds), f"differences {ds} are not distinct in Z_{u}")
    _require(all(2 * d != u for d in ds), f"u/2 = {u // 2} not allowed among {ds}")
    return ds


def _triangle_first(u: int, d1: int, d2: int, d3: int) -> int:
    """Coordinate of the first triangle vertex: d1 (difference form) or -d1 (sum form)."""
    if d3 == d2 - d1:
        return d1
    if d1 + d2 + d3 == u:
        return -d1
    raise PreconditionViolated(f"need d3 = d2 - d1 or d1 + d2 + d3 = u; got {(d1, d2, d3)} in Z_{u}")


def one_inf_five_diffs(u: int, d1: int, d2: int, d3: int, d4: int, d5: int) -> LemmaOutput:
    """<Z_u U {inf}, {d1..d5}> by a single orbit."""
    d1, d2, d3, d4, d5 = _reduced_distinct(u, (d1, d2, d3, d4, d5))
    first = _triangle_first(u, d1, d2, d3)
    pendant = -d4 if (d2 + d5 - d4) % u == 0 else d4
    base = make_sun(u, first, d2, 0, I1, d2 + d5, pendant)
    return _output(u, 1, {d1, d2, d3, d4, d5}, orbit(base, u), checked=True)


def two_inf_four_diffs(u: int, d1: int, d2: int, d3: int, d4: int) -> LemmaOutput:
    """<Z_u U {inf1, inf2}, {d1..d4}> by a single orbit."""
    d1, d2, d3, d4 = _reduced_distinct(u, (d1, d2, d3, d4))
    first = _triangle_first(u, d1, d2, d3)
    base = make_sun(u, first, d2, 0, I1, I2, d4)
    return _output(u, 2, {d1, d2, d3, d4}, orbit(base, u), checked=True)


def three_inf_three_diffs(u: int, d1: int, d2: int, d3: int) -> LemmaOutput:
    """<Z_u U {inf1, inf2, inf3}, {d1, d2, d3}> by a single orbit."""
    d1, d2, d3 = _reduced_distinct(u, (d1, d2, d3))
    first = _triangle_first(u, d1, d2, d3)
    base = make_sun(u, first, d2, 0, I1, I2, I3)
    return _output(u, 3, {d1, d2, d3}, orbit(base, u), checked=True)


def _cycle_blocks_5inf(x: list) -> list:
    # x: one cycle of the difference, as vertices
    l = len(x)
    q, r = divmod(l, 3)

    def X(k):  # 1-based cycle index, modulo l
        return x[(k - 1) % l]

    out = []
    for i in range(q - 1):
        out += [
            (I1, X(1 + 3 * i), X(2 + 3 * i), X(3 + 3 * i), I4, I5),
            (I2, X(2 + 3 * i), X(3 + 3 * i), X(4 + 3 * i), I4, I5),
            (I3, X(3 + 3 * i), X(4 + 3 * i), X(5 + 3 * i), I4, I5),
        ]
    n = 3 * q
    if r == 0:
        out += [
            (I1, X(n - 2), X(n - 1), X(n), I4, I5),
            (I2, X(n - 1), X(n), X(1), I4, I5),
            (I3, X(n), X(1), X(2), I4, I5),
        ]
    elif r == 1:
        out += [
            (I1, X(n - 2), X(n - 1), X(n + 1), I4, I5),
            (I2, X(n - 1), X(n), X(1), I4, I1),
            (I3, X(n), X(n + 1), X(2), I4, I2),
            (I5, X(n + 1), X(1), X(n), I4, I3),
        ]
    else:
        out += [
            (I1, X(n - 2), X(n - 1), X(n + 2), I4, I5),
            (I2, X(n - 1), X(n), X(1), I4, I5),
            (I3, X(n), X(n + 1), X(2), I1, I2),
            (I4, X(n + 1), X(n + 2), X(n), I1, I3),
            (I5, X(n + 2), X(1), X(n + 1), I2, I3),
        ]
    return out


def five_inf_single_diff(u: int, d: int) -> LemmaOutput:
    """<Z_u U {inf1..inf5}, {d}> for any d other than u/2."""
    d = reduce_difference(d, u)
    _require(2 * d != u, f"difference {d} is u/2")
    pts = [cyc(i, u) for i in range(u)]
    blocks = []
    for x in cycles_of_difference(u, d):
        blocks += map(Sun._make, _cycle_blocks_5inf([pts[i] for i in x]))
    return _output(u, 5, {d}, blocks)


def _leave_bases(u: int, s: int, alpha: int) -> list:
    bases = [make_sun(u, 5 * s + 1 + j, 5 * s - j, 0, 3 * s, s, u - 2 - 2 * j) for j in range(s)]
    if alpha == 4:
        bases[0] = make_sun(u, 6 * s + 1, 4 * s, 0, s, 9 * s, 6 * s + 2)
    elif alpha == 8:
        bases[0] = make_sun(u, 6 * s + 1, 4 * s, 0, s, 9 * s, 6 * s + 4)
        bases[1] = make_sun(u, 5 * s + 2, 5 * s - 1, 0, 3 * s, s, 6 * s + 2)
    return bases


def leave_set(u: int, s: int, alpha: int, skip_first: bool = False) -> frozenset:
    """The (reduced) difference leave covered by ``leave_decomposition``."""
    if alpha == 0:
        L = set(range(1, 6 * s + 1))
        if skip_first and s > 0:
            L -= {1, 2, 2 * s + 1, 4 * s, 5 * s, 5 * s + 1}
    elif alpha == 4:
        L = set(range(3, 6 * s + 3))
    else:
        L = set(range(3, 6 * s + 5)) - {4, 6 * s + 3}
    return frozenset(reduce_difference(d, u) for d in L)


def leave_decomposition(u: int, s: int, alpha: int, skip_first: bool = False) -> LemmaOutput:
    """<Z_u, L> for the three difference-leave patterns.

    alpha = 0: L = [1, 6s];  alpha = 4: L = [3, 6s+2];
    alpha = 8: L = [3, 6s+4] minus {4, 6s+3}.
    ``skip_first`` drops the first orbit of the alpha = 0 family.
    u = 12s + 7 is accepted for alpha = 8, where 6s+4 wraps onto 6s+3.
    """
    _require(alpha in (0, 4, 8), f"alpha must be 0, 4 or 8; got {alpha}")
    _require(s >= 0, f"s must be non-negative; got {s}")
    _require(not skip_first or alpha == 0, "skip_first only applies to alpha = 0")
    wrap = alpha == 8 and u == 12 * s + 7
    _require(u > 12 * s + alpha or wrap, f"need u > 12s + alpha; got u={u}, s={s}, alpha={alpha}")
    if alpha == 8 and s == 1:
        return leave_alpha8_s1(u)
    if s == 0:
        return _output(u, 0, (), ())
    bases = _leave_bases(u, s, alpha)
    if skip_first:
        bases = bases[1:]
    blocks = [b for base in bases for b in orbit(base, u)]
    return _output(u, 0, leave_set(u, s, alpha, skip_first), blocks, checked=True)


# Base block for L = {3,5,6,7,8,10}, frozen from find_alpha8_s1_base().
ALPHA8_S1_BASE = (0, 3, 8, -10, -4, 2)
ALPHA8_S1_LEAVE = frozenset({3, 5, 6, 7, 8, 10})


def find_alpha8_s1_base(span: int = 20) -> tuple:
    """Search base suns on integer points whose six differences are exactly
    {3,5,6,7,8,10}.  Returns the lexicographically first one with a = 0.
    """
    for b in range(1, span):
        for c in range(1, span):
            if len({0, b, c}) < 3:
                continue
            for d, e, f in permutations(range(-span, span), 3):
                pts = (0, b, c, d, e, f)
                if len(set(pts)) != 6:
                    continue
                diffs = sorted(abs(x - y) for x, y in ((0, b), (b, c), (c, 0), (0, d), (b, e), (c, f)))
                if diffs == sorted(ALPHA8_S1_LEAVE):
                    return pts
    raise LookupError("no base block found")


def leave_alpha8_s1(u: int) -> LemmaOutput:
    """<Z_u, {3,5,6,7,8,10}>: the alpha = 8 leave for s = 1.

    Also accepts u = 19, where 10 wraps onto 9.
    """
    _require(u > 20 or u == 19, f"need u > 20 (or u = 19); got {u}")
    base = make_sun(u, *ALPHA8_S1_BASE)
    L = frozenset(reduce_difference(d, u) for d in ALPHA8_S1_LEAVE)
    return _output(u, 0, L, orbit(base, u), checked=True)


def order_triple(u: int, ds, extra: int = 0) -> tuple:
    """First ordering of ``ds`` (after reduction) accepted by the orbit lemmas.

    The first three entries satisfy d3 = d2 - d1 or d1 + d2 + d3 = u; the
    remaining ``extra`` entries follow.  Orderings are tried lexicographically.
    """
    ds = sorted(reduce_difference(d, u) for d in ds)
    ctor = {0: three_inf_three_diffs, 1: two_inf_four_diffs, 2: one_inf_five_diffs}[extra]
    for perm in permutations(ds):
        d1, d2, d3 = perm[:3]
        if d3 != d2 - d1 and d1 + d2 + d3 != u:
            continue
        try:
            ctor(u, *perm)
        except (PreconditionViolated, DegenerateSun):
            continue
        return perm
    raise PreconditionViolated(f"no admissible ordering of {ds} in Z_{u}")


LEMMAS = {
    "two_inf_diff2": two_inf_diff2,
    "four_inf_diff2_mod12": four_inf_diff2_mod12,
    "four_inf_diff24": four_inf_diff24,
    "eight_inf_diff_1_u3": eight_inf_diff_1_u3,
    "three_inf_1_half": three_inf_1_half,
    "four_inf_1_half": four_inf_1_half,
    "six_inf_1_half": six_inf_1_half,
    "seven_inf_1_half": seven_inf_1_half,
    "three_inf_12_half": three_inf_12_half,
    "one_inf_single_diff": one_inf_single_diff,
    "one_inf_five_diffs": one_inf_five_diffs,
    "two_inf_four_diffs": two_inf_four_diffs,
    "three_inf_three_diffs": three_inf_three_diffs,
    "five_inf_single_diff": five_inf_single_diff,
    "leave_decomposition": leave_decomposition,
    "leave_alpha8_s1": leave_alpha8_s1,
}

# Number of infinity points each constructor consumes.
INFINITY_COUNT = {
    "two_inf_diff2": 2,
    "four_inf_diff2_mod12": 4,
    "four_inf_diff24": 4,
    "eight_inf_diff_1_u3": 8,
    "three_inf_1_half": 3,
    "four_inf_1_half": 4,
    "six_inf_1_half": 6,
    "seven_inf_1_half": 7,
    "three_inf_12_half": 3,
    "one_inf_single_diff": 1,
    "one_inf_five_diffs": 1,
    "two_inf_four_diffs": 2,
    "three_inf_three_diffs": 3,
    "five_inf_single_diff": 5,
    "leave_decomposition": 0,
    "leave_alpha8_s1": 0,
}
