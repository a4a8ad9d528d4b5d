"""Embedding bounds, the case dispatch for K_{n+u} minus K_n, and recursive
construction of complete 3-sun systems.

The hole graph is split into pieces <Z_u U H_i, D_i> handled by the lemma
constructors, one five-point piece per remaining difference, and a purely
cyclic difference leave.  ``build_plan`` only decides the split;
``decompose_hole`` runs it and verifies the result.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from . import lemmas
from .core import difference_set, reduce_difference, relabel_infinities, sun_to_ints
from .errors import (
    BoundViolated,
    NoCaseMatch,
    NonExistent,
    NotAdmissible,
    PreconditionViolated,
)
from .lemmas import leave_set, order_triple
from .verify import Decomposition, verify_partition

ADMISSIBLE_RESIDUES = (0, 1, 4, 9)

# n = 60k + 5r + c: allowed r per c, and u_min = 24k + 2r + offset.
R_VALUES = {0: (0, 5, 8, 9), 1: (0, 3, 4, 7), 2: (2, 7, 10, 11), 3: (2, 5, 6, 9), 4: (0, 1, 4, 9)}
U_MIN_OFFSET = {0: 1, 1: 2, 2: 2, 3: 3, 4: 3}
# m_min = 84k + 7r + this.
M_MIN_OFFSET = {0: 1, 1: 3, 2: 4, 3: 6, 4: 7}

HOLE_RESIDUES = {
    0: frozenset({0, 1, 4, 9}),
    1: frozenset({0, 3, 8, 11}),
    4: frozenset({0, 5, 8, 9}),
    9: frozenset({0, 3, 4, 7}),
}


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    exists: bool
    trivial: bool


def is_admissible_order(n: int) -> Admissibility:
    """Congruence test n = 0, 1, 4, 9 (mod 12) with existence qualifiers."""
    ok = n >= 0 and n % 12 in ADMISSIBLE_RESIDUES
    return Admissibility(admissible=ok, exists=ok and n != 4, trivial=ok and n in (0, 1))


def _check_admissible(n: int) -> None:
    if not is_admissible_order(n).admissible:
        raise NotAdmissible(f"{n} is not 0, 1, 4 or 9 mod 12")


def hole_residues(n: int) -> frozenset:
    """Residues of u mod 12 for which n + u is admissible."""
    _check_admissible(n)
    return HOLE_RESIDUES[n % 12]


def split_order(n: int) -> tuple:
    """(k, r, c) with n = 60k + 5r + c and r in the class list for c."""
    _check_admissible(n)
    c = n % 5
    k, rest = divmod(n - c, 60)
    r = rest // 5
    if r not in R_VALUES[c]:
        raise NotAdmissible(f"{n} has no decomposition 60k + 5r + c")
    return k, r, c


def min_hole_size(n: int) -> int:
    k, r, c = split_order(n)
    return 24 * k + 2 * r + U_MIN_OFFSET[c]


def min_embedding_order(n: int) -> int:
    """Smallest m > n into which every 3SS(n) embeds (n >= 9)."""
    if n < 9:
        raise NotAdmissible(f"embedding bound defined for n >= 9, got {n}")
    k, r, c = split_order(n)
    return 84 * k + 7 * r + M_MIN_OFFSET[c]


@dataclass(frozen=True)
class CountingCertificate:
    n: int
    u: int
    lhs: int
    feasible: bool


def counting_feasible(n: int, u: int) -> CountingCertificate:
    """Evaluate 6c_2 + 12c_3 + ... + 30c_6 = u(5u - 2n - 5)/2, which must be >= 0."""
    lhs = u * (5 * u - 2 * n - 5) // 2  # u(5u - 5) and 2nu are both even
    return CountingCertificate(n, u, lhs, lhs >= 0)


@dataclass(frozen=True)
class EmbeddingParams:
    n: int
    u: int
    k: int
    r: int
    c: int
    h: int
    s: int
    l: int

    @property
    def u_min(self) -> int:
        return self.u - self.h


@dataclass(frozen=True)
class PlanTask:
    lemma: str
    diffs: tuple  # as printed
    first_label: int  # infinity labels first_label .. first_label + count - 1
    count: int
    args: tuple = ()  # positional arguments after u
    alpha: Optional[int] = None
    s: Optional[int] = None
    skip_first: bool = False

    @property
    def labels(self) -> range:
        return range(self.first_label, self.first_label + self.count)

    def reduced_diffs(self, u: int) -> frozenset:
        if self.lemma in ("leave_decomposition", "leave_alpha8_s1"):
            return leave_set(u, self.s, self.alpha, self.skip_first) if self.s else frozenset()
        return frozenset(reduce_difference(d, u) for d in self.diffs)

    def run(self, u: int) -> lemmas.LemmaOutput:
        return lemmas.LEMMAS[self.lemma](u, *self.args)


@dataclass(frozen=True)
class Plan:
    params: EmbeddingParams
    tasks: tuple
    case: str = ""

    def expected_edge_count(self) -> int:
        u = self.params.u
        total = 0
        for t in self.tasks:
            D = t.reduced_diffs(u)
            half = 1 if (u % 2 == 0 and u // 2 in D) else 0
            total += u * (len(D) - half) + half * (u // 2) + t.count * u
        return total


def _span(lo: int, hi: int) -> list:
    return list(range(lo, hi + 1))


# Case tables.  Each entry: (case label, allowed r values, builder).  A
# builder maps (k, r, s, u) to (pieces, rest, leave) where pieces is a list of
# (lemma, printed differences), rest the differences given five infinity
# points each, and leave (alpha, skip_first) or None.
def _prop_n0():
    return {
        0: ("P0.1", (0, 5, 8, 9), lambda k, r, s, u: (
            [], _span(6 * s + 1, 12 * k + r + 6 * s), (0, False))),
        8: ("P0.2", (0, 9), lambda k, r, s, u: (
            [("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5)),
             ("one_inf_single_diff", (1,)),
             ("one_inf_single_diff", (6 * s + 4,))],
            _span(6 * s + 6, 12 * k + r + 6 * s + 4), (4, False))),
        4: ("P0.3", (5, 8), lambda k, r, s, u: (
            [("four_inf_diff24", (2, 4)),
             ("one_inf_single_diff", (1,))],
            [d for d in _span(6 * s + 3, 12 * k + r + 6 * s + 2) if d != 6 * s + 4], (8, False))),
        3: ("P0.4", (0, 8), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("two_inf_diff2", (2,))],
            _span(6 * s + 3, 12 * k + r + 6 * s + 1), (4, False))),
        11: ("P0.5", (0,), lambda k, r, s, u: (
            [("three_inf_12_half", (1, 2, u // 2)),
             ("two_inf_four_diffs", (4, 6 * s + 3, 6 * s + 5, 6 * s + 7))],
            [d for d in _span(6 * s + 6, 12 * k + 6 * s + 5) if d != 6 * s + 7], (8, False))),
        1: ("P0.6", (5,), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("four_inf_diff2_mod12", (2,))],
            _span(6 * s + 3, 12 * k + 6 * s + 5), (4, False))),
        9: ("P0.7", (5, 9), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("two_inf_four_diffs", (2, 6 * s + 3, 6 * s + 4, 6 * s + 5))],
            _span(6 * s + 6, 12 * k + r + 6 * s + 4), (4, False))),
        7: ("P0.8", (8,), lambda k, r, s, u: (
            [("three_inf_12_half", (1, 2, u // 2)),
             ("one_inf_single_diff", (4,)),
             ("one_inf_single_diff", (6 * s + 5,))],
            [d for d in _span(6 * s + 3, 12 * k + 6 * s + 11) if d not in (6 * s + 4, 6 * s + 5)],
            (8, False))),
        5: ("P0.9", (9,), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("one_inf_single_diff", (2,)),
             ("one_inf_single_diff", (4,))],
            [d for d in _span(6 * s + 3, 12 * k + 6 * s + 11) if d != 6 * s + 4], (8, False))),
    }


def _prop_n1():
    return {
        1: ("P1.1", (0, 3), lambda k, r, s, u: (
            [("one_inf_single_diff", (6 * s + 2,))],
            [d for d in _span(6 * s + 1, 12 * k + r + 6 * s + 1) if d != 6 * s + 2], (0, False))),
        9: ("P1.2", (0, 3, 4, 7), lambda k, r, s, u: (
            [("three_inf_three_diffs", (1, 6 * s + 3, 6 * s + 4)),
             ("three_inf_three_diffs", (2, 6 * s + 5, 6 * s + 7))],
            [d for d in _span(6 * s + 6, 12 * k + r + 6 * s + 5) if d != 6 * s + 7], (4, False))),
        5: ("P1.3", (4, 7), lambda k, r, s, u: (
            [("four_inf_diff24", (2, 4)),
             ("one_inf_single_diff", (1,)),
             ("one_inf_single_diff", (6 * s + 8,))],
            [d for d in _span(6 * s + 3, 12 * k + r + 6 * s + 3) if d not in (6 * s + 4, 6 * s + 8)],
            (8, False))),
        6: ("P1.4", (0, 4), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5))],
            [d for d in _span(6 * s + 4, 12 * k + r + 6 * s + 3) if d != 6 * s + 5], (4, False))),
        10: ("P1.5", (0,), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("four_inf_diff2_mod12", (2,)),
             ("one_inf_five_diffs", (4, 6 * s + 3, 6 * s + 5, 6 * s + 6, 6 * s + 7))],
            _span(6 * s + 8, 12 * k + 6 * s + 5), (8, False))),
        0: ("P1.6", (3, 7), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2))],
            [2] + _span(6 * s + 3, 12 * k + r + 6 * s), (4, False))),
        4: ("P1.7", (3,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2)),
             ("one_inf_single_diff", (2,)),
             ("one_inf_single_diff", (6 * s + 5,))],
            [d for d in _span(6 * s + 3, 12 * k + 6 * s + 5) if d != 6 * s + 5], (4, False))),
        2: ("P1.8", (4,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2)),
             ("two_inf_diff2", (2,))],
            _span(6 * s + 3, 12 * k + 6 * s + 5), (4, False))),
        8: ("P1.9", (7,), lambda k, r, s, u: (
            [("three_inf_12_half", (1, 2, u // 2)),
             ("three_inf_three_diffs", (4, 6 * s + 3, 6 * s + 7))],
            [d for d in _span(6 * s + 5, 12 * k + 6 * s + 11) if d != 6 * s + 7], (8, False))),
    }


def _prop_n2():
    return {
        3: ("P2.1", (2, 11), lambda k, r, s, u: (
            [("one_inf_single_diff", (6 * s + 2,)),
             ("one_inf_single_diff", (6 * s + 4,))],
            [d for d in _span(6 * s + 1, 12 * k + r + 6 * s + 2) if d not in (6 * s + 2, 6 * s + 4)],
            (0, False))),
        7: ("P2.2", (2, 7, 10, 11), lambda k, r, s, u: (
            [("two_inf_four_diffs", (1, 2, 6 * s + 3, 6 * s + 4))],
            _span(6 * s + 5, 12 * k + r + 6 * s + 4), (4, False))),
        11: ("P2.3", (7, 10), lambda k, r, s, u: (
            [("three_inf_three_diffs", (1, 6 * s + 3, 6 * s + 4)),
             ("three_inf_three_diffs", (2, 6 * s + 5, 6 * s + 7)),
             ("one_inf_single_diff", (6 * s + 8,))],
            [d for d in _span(6 * s + 6, 12 * k + r + 6 * s + 6) if d not in (6 * s + 7, 6 * s + 8)],
            (4, False))),
        6: ("P2.4", (2,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5))],
            [d for d in _span(6 * s + 4, 12 * k + 6 * s + 5) if d != 6 * s + 5], (4, False))),
        10: ("P2.5", (2, 10), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("one_inf_five_diffs", (2, 6 * s + 3, 6 * s + 4, 6 * s + 5, 6 * s + 6))],
            _span(6 * s + 7, 12 * k + r + 6 * s + 5), (4, False))),
        4: ("P2.6", (7, 11), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("four_inf_diff24", (2, 4))],
            [d for d in _span(6 * s + 3, 12 * k + r + 6 * s + 2) if d != 6 * s + 4], (8, False))),
        8: ("P2.7", (7,), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5)),
             ("one_inf_single_diff", (6 * s + 7,))],
            [d for d in _span(6 * s + 4, 12 * k + 6 * s + 11) if d not in (6 * s + 5, 6 * s + 7)],
            (4, False))),
        2: ("P2.8", (10,), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("one_inf_single_diff", (2,))],
            _span(6 * s + 3, 12 * k + 6 * s + 11), (4, False))),
        0: ("P2.9", (11,), lambda k, r, s, u: (
            [("seven_inf_1_half", (1, u // 2))],
            [2] + _span(6 * s + 3, 12 * k + 6 * s + 11), (4, False))),
    }


def _prop_n3_l0(k, r, s, u):
    if s == 0:
        return (
            [("eight_inf_diff_1_u3", (1, u // 3))],
            [d for d in _span(2, 12 * k + r + 1) if d != u // 3],
            None,
        )
    return (
        [("three_inf_three_diffs", (1, 5 * s, 5 * s + 1)),
         ("three_inf_three_diffs", (2, 6 * s + 1, 6 * s + 3)),
         ("one_inf_single_diff", (6 * s + 2,)),
         ("one_inf_single_diff", (6 * s + 4,))],
        [2 * s + 1, 4 * s] + _span(6 * s + 5, 12 * k + r + 6 * s + 1),
        (0, True),
    )


def _prop_n3():
    return {
        4: ("P3.1", (2, 5, 6, 9), lambda k, r, s, u: (
            [("three_inf_three_diffs", (1, 6 * s + 3, 6 * s + 4))],
            [2] + _span(6 * s + 5, 12 * k + r + 6 * s + 3), (4, False))),
        8: ("P3.2", (2, 5), lambda k, r, s, u: (
            [("two_inf_four_diffs", (1, 6 * s + 3, 6 * s + 4, 6 * s + 5)),
             ("one_inf_single_diff", (2,))],
            _span(6 * s + 6, 12 * k + r + 6 * s + 5), (4, False))),
        0: ("P3.3", (6, 9), _prop_n3_l0),
        1: ("P3.4", (2, 6), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2))],
            [2] + _span(6 * s + 3, 12 * k + r + 6 * s + 1), (4, False))),
        5: ("P3.5", (2,), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("four_inf_diff2_mod12", (2,)),
             ("three_inf_three_diffs", (4, 6 * s + 3, 6 * s + 7))],
            [d for d in _span(6 * s + 5, 12 * k + 6 * s + 5) if d != 6 * s + 7], (8, False))),
        7: ("P3.6", (5, 9), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("two_inf_four_diffs", (2, 6 * s + 3, 6 * s + 4, 6 * s + 5))],
            _span(6 * s + 6, 12 * k + r + 6 * s + 4), (4, False))),
        11: ("P3.7", (5,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2)),
             ("two_inf_four_diffs", (2, 6 * s + 3, 6 * s + 5, 6 * s + 6)),
             ("one_inf_single_diff", (4,)),
             ("one_inf_single_diff", (6 * s + 7,))],
            _span(6 * s + 8, 12 * k + 6 * s + 11), (8, False))),
        9: ("P3.8", (6,), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5)),
             ("one_inf_single_diff", (4,)),
             ("one_inf_single_diff", (6 * s + 7,))],
            [d for d in _span(6 * s + 6, 12 * k + 6 * s + 11) if d != 6 * s + 7], (8, False))),
        3: ("P3.9", (9,), lambda k, r, s, u: (
            [("three_inf_12_half", (1, 2, u // 2))],
            _span(6 * s + 3, 12 * k + 6 * s + 11), (4, False))),
    }


def _prop_n4():
    return {
        2: ("P4.1", (0, 1, 4, 9), lambda k, r, s, u: (
            [("four_inf_diff24", (2, 4))],
            [1, 6 * s + 3] + _span(6 * s + 5, 12 * k + r + 6 * s + 2), (8, False))),
        6: ("P4.2", (0, 9), lambda k, r, s, u: (
            [("three_inf_three_diffs", (1, 6 * s + 3, 6 * s + 4)),
             ("one_inf_single_diff", (2,))],
            _span(6 * s + 5, 12 * k + r + 6 * s + 4), (4, False))),
        10: ("P4.3", (1, 4), lambda k, r, s, u: (
            [("two_inf_four_diffs", (1, 6 * s + 3, 6 * s + 5, 6 * s + 6)),
             ("one_inf_single_diff", (2,)),
             ("one_inf_single_diff", (6 * s + 4,))],
            _span(6 * s + 7, 12 * k + r + 6 * s + 6), (4, False))),
        5: ("P4.4", (0, 4), lambda k, r, s, u: (
            [("six_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5))],
            [d for d in _span(6 * s + 4, 12 * k + r + 6 * s + 3) if d != 6 * s + 5], (4, False))),
        9: ("P4.5", (0,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2)),
             ("three_inf_three_diffs", (2, 6 * s + 3, 6 * s + 5)),
             ("one_inf_single_diff", (4,)),
             ("one_inf_single_diff", (6 * s + 7,))],
            [d for d in _span(6 * s + 6, 12 * k + 6 * s + 5) if d != 6 * s + 7], (8, False))),
        7: ("P4.6", (1,), lambda k, r, s, u: (
            [("seven_inf_1_half", (1, u // 2)),
             ("two_inf_four_diffs", (2, 4, 6 * s + 3, 6 * s + 5))],
            _span(6 * s + 6, 12 * k + 6 * s + 5), (8, False))),
        11: ("P4.7", (1, 9), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("one_inf_five_diffs", (2, 4, 6 * s + 3, 6 * s + 5, 6 * s + 6))],
            _span(6 * s + 7, 12 * k + r + 6 * s + 6), (8, False))),
        1: ("P4.8", (4,), lambda k, r, s, u: (
            [("four_inf_1_half", (1, u // 2))],
            [2] + _span(6 * s + 3, 12 * k + 6 * s + 5), (4, False))),
        3: ("P4.9", (9,), lambda k, r, s, u: (
            [("three_inf_1_half", (1, u // 2)),
             ("one_inf_single_diff", (2,))],
            _span(6 * s + 3, 12 * k + 6 * s + 11), (4, False))),
    }


CASE_TABLE = {0: _prop_n0(), 1: _prop_n1(), 2: _prop_n2(), 3: _prop_n3(), 4: _prop_n4()}

# Small hole sizes handled by dedicated splits: (n, l) -> builder(s, u).
SPECIAL_CASES = {
    (21, 5): ("A.21", lambda s, u: (
        [("four_inf_diff24", (2, 4)),
         ("one_inf_single_diff", (1,)),
         ("one_inf_single_diff", (6 * s + 7,))],
        [6 * s + 3, 6 * s + 5, 6 * s + 6], (8, False))),
    (13, 5): ("A.13", lambda s, u: (
        [("six_inf_1_half", (1, 6 * s + 6)),
         ("four_inf_diff2_mod12", (2,)),
         ("three_inf_three_diffs", (4, 6 * s + 3, 6 * s + 5))],
        [], (8, False))),
    (9, 2): ("A.9", lambda s, u: (
        [("four_inf_diff24", (2, 4)),
         ("five_inf_single_diff", (1,))],
        [], (8, False))),
}

_ORDERED = {"three_inf_three_diffs": 0, "two_inf_four_diffs": 1, "one_inf_five_diffs": 2}
_FIXED_ARGS = {"one_inf_single_diff", "five_inf_single_diff"}


def embedding_params(n: int, u: int) -> EmbeddingParams:
    if n < 9:
        raise NotAdmissible(f"hole size {n} is handled as a degenerate case (need n >= 9)")
    k, r, c = split_order(n)
    if not is_admissible_order(n + u).admissible:
        raise NotAdmissible(f"n + u = {n + u} is not admissible")
    u_min = 24 * k + 2 * r + U_MIN_OFFSET[c]
    if u < u_min:
        raise BoundViolated(f"u = {u} is below the minimum hole complement {u_min}", n + u_min)
    h = u - u_min
    return EmbeddingParams(n, u, k, r, c, h, h // 12, h % 12)


def _task(lemma: str, diffs: tuple, label: int, u: int) -> PlanTask:
    count = lemmas.INFINITY_COUNT[lemma]
    if lemma in _ORDERED:
        args = order_triple(u, diffs, _ORDERED[lemma])
    elif lemma in _FIXED_ARGS:
        args = (reduce_difference(diffs[0], u),)
    else:
        args = ()
    return PlanTask(lemma, tuple(diffs), label, count, args)


def _leave_task(u: int, s: int, alpha: int, skip_first: bool) -> PlanTask:
    L = sorted(leave_set(u, s, alpha, skip_first)) if s else []
    return PlanTask("leave_decomposition", tuple(L), 1, 0, (s, alpha, skip_first), alpha, s, skip_first)


def _candidates(p: EmbeddingParams) -> list:
    """(case, thunk) for every split whose keys fit; special splits first."""
    out = []
    special = SPECIAL_CASES.get((p.n, p.l)) if p.k == 0 else None
    if special is not None:
        case, builder = special
        out.append((case, lambda b=builder: b(p.s, p.u)))
    entry = CASE_TABLE[p.c].get(p.l)
    if entry is not None and p.r in entry[1]:
        case, _, builder = entry
        out.append((case, lambda b=builder: b(p.k, p.r, p.s, p.u)))
    return out


def _assemble(p: EmbeddingParams, case: str, split) -> Plan:
    pieces, rest, leave = split
    u = p.u
    tasks = []
    label = 1
    try:
        for lemma, diffs in pieces:
            t = _task(lemma, diffs, label, u)
            tasks.append(t)
            label += t.count
        for d in rest:
            t = _task("five_inf_single_diff", (d,), label, u)
            tasks.append(t)
            label += t.count
    except PreconditionViolated as exc:
        raise NoCaseMatch(f"case {case} for n={p.n}, u={u} requests an invalid piece: {exc}") from exc
    if leave is not None:
        tasks.append(_leave_task(u, p.s, *leave))
    plan = Plan(p, tuple(tasks), case)
    _check_plan(plan)
    return plan


def matching_cases(n: int, u: int) -> list:
    """Labels of every split that yields a valid plan for (n, u)."""
    p = embedding_params(n, u)
    out = []
    for case, split in _candidates(p):
        try:
            _assemble(p, case, split())
        except NoCaseMatch:
            continue
        out.append(case)
    return out


def build_plan(n: int, u: int) -> Plan:
    p = embedding_params(n, u)
    candidates = _candidates(p)
    if not candidates:
        raise NoCaseMatch(f"no case for n={n}, u={u} (c={p.c}, r={p.r}, l={p.l})")
    case, split = candidates[0]
    return _assemble(p, case, split())


def _check_plan(plan: Plan) -> None:
    p = plan.params
    labels = [k for t in plan.tasks for k in t.labels]
    if labels != list(range(1, p.n + 1)):
        raise NoCaseMatch(f"case {plan.case}: infinity labels do not partition 1..{p.n}")
    seen = []
    for t in plan.tasks:
        seen.extend(t.reduced_diffs(p.u))
    if sorted(seen) != sorted(difference_set(p.u)):
        raise NoCaseMatch(f"case {plan.case}: differences do not partition D_{p.u}")


def run_plan(plan: Plan) -> list:
    """Execute every task and return integer blocks on 0..n+u-1."""
    u = plan.params.u
    blocks = []
    for t in plan.tasks:
        out = t.run(u)
        for s in out.blocks:
            blocks.append(sun_to_ints(relabel_infinities(s, t.first_label - 1), u))
    return blocks


def decompose_hole(n: int, u: int) -> Decomposition:
    """Decompose K_{n+u} minus K_n; the hole is vertices u .. n+u-1."""
    if n in (0, 1):
        full = construct_3ss(n + u)
        return Decomposition(n + u, n, full.blocks, "hole" if n else "complete")
    if n == 4:
        raise NonExistent("no 3SS(4) exists, so there is nothing to embed")
    plan = build_plan(n, u)
    d = Decomposition(n + u, n, run_plan(plan), "hole")
    report = verify_partition(d, d.target())
    if not report.ok:
        raise AssertionError(f"case {plan.case} for n={n}, u={u} failed: {report.summary()}")
    return d


def embed(base: Decomposition, m: int) -> Decomposition:
    """Embed a 3SS(n) into a 3SS(m); base vertex i becomes m - n + i."""
    n = base.m
    if base.kind != "complete":
        raise ValueError("the base must be a decomposition of a complete graph")
    _check_admissible(m)
    if m == n:
        return base
    if m < n:
        raise BoundViolated(f"m = {m} is smaller than the base order {n}", n)
    if n >= 9:
        bound = min_embedding_order(n)
        if m < bound:
            raise BoundViolated(f"embedding 3SS({n}) needs m >= {bound} (got {m})", bound)
    u = m - n
    hole = decompose_hole(n, u)
    shifted = [tuple(x + u for x in b) for b in base.blocks]
    d = Decomposition(m, 0, shifted + list(hole.blocks), "complete")
    report = verify_partition(d, d.target())
    if not report.ok:
        raise AssertionError(f"embedding of 3SS({n}) into {m} failed: {report.summary()}")
    return d


_cache: dict = {}
_cache_lock = threading.Lock()


def embedding_source(m: int) -> int:
    """Largest constructible n >= 9 with m >= min_embedding_order(n)."""
    best = None
    for n in range(9, m):
        if is_admissible_order(n).admissible and min_embedding_order(n) <= m:
            best = n
    if best is None:
        raise NonExistent(f"no smaller system embeds into order {m}")
    return best


def construct_3ss(m: int) -> Decomposition:
    """A verified 3SS(m), built by repeated embedding from frozen base systems."""
    from .oracle import BASE_ORDERS, base_system

    _check_admissible(m)
    if m == 4:
        raise NonExistent("a 3-sun has six vertices, so K_4 has no 3-sun system")
    with _cache_lock:
        if m in _cache:
            return _cache[m]
    if m in (0, 1):
        d = Decomposition(m, 0, (), "complete")
    elif m in BASE_ORDERS:
        d = base_system(m)
    else:
        d = embed(construct_3ss(embedding_source(m)), m)
    with _cache_lock:
        _cache.setdefault(m, d)
        return _cache[m]
