from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from sunsys import lemmas as L
from sunsys.core import cycles_of_difference, inf, make_sun
from sunsys.errors import PreconditionViolated
from sunsys.verify import verify_partition


def check(out, blocks=None, D=None, t=None):
    report = verify_partition(out, out.graph)
    assert report.ok, report.summary()
    assert 6 * len(out.blocks) == out.graph.edge_count()
    if blocks is not None:
        assert len(out.blocks) == blocks
    if D is not None:
        assert out.graph.D == frozenset(D)
    if t is not None:
        assert out.graph.t == t
    return out


@pytest.mark.parametrize(
    "name, args, blocks, D, t",
    [
        ("two_inf_diff2", (8,), 4, {2}, 2),
        ("two_inf_diff2", (12,), 6, {2}, 2),
        ("four_inf_diff2_mod12", (12,), 10, {2}, 4),
        ("four_inf_diff2_mod12", (24,), 20, {2}, 4),
        ("four_inf_diff24", (7,), 7, {2, 3}, 4),
        ("four_inf_diff24", (12,), 12, {2, 4}, 4),
        ("eight_inf_diff_1_u3", (12,), 20, {1, 4}, 8),
        ("eight_inf_diff_1_u3", (15,), 25, {1, 5}, 8),
        ("three_inf_1_half", (8,), 6, {1, 4}, 3),
        ("seven_inf_1_half", (12,), 17, {1, 6}, 7),
        ("one_inf_single_diff", (9, 2), 3, {2}, 1),
        ("one_inf_single_diff", (12, 2), 4, {2}, 1),
        ("one_inf_five_diffs", (11, 1, 3, 2, 4, 5), 11, {1, 2, 3, 4, 5}, 1),
        ("one_inf_five_diffs", (13, 1, 3, 2, 4, 5), 13, {1, 2, 3, 4, 5}, 1),
        ("two_inf_four_diffs", (9, 1, 3, 2, 4), 9, {1, 2, 3, 4}, 2),
        ("two_inf_four_diffs", (12, 1, 4, 3, 5), 12, {1, 3, 4, 5}, 2),
        ("three_inf_three_diffs", (9, 1, 3, 2), 9, {1, 2, 3}, 3),
        ("three_inf_three_diffs", (11, 3, 4, 1), 11, {1, 3, 4}, 3),
        ("five_inf_single_diff", (11, 1), 11, {1}, 5),
        ("five_inf_single_diff", (9, 3), 9, {3}, 5),
        ("leave_decomposition", (13, 1, 0), 13, range(1, 7), 0),
        ("leave_decomposition", (17, 1, 4), 17, range(3, 9), 0),
        ("leave_decomposition", (33, 2, 8), 66, set(range(3, 17)) - {4, 15}, 0),
        ("leave_alpha8_s1", (21,), 21, {3, 5, 6, 7, 8, 10}, 0),
        ("leave_alpha8_s1", (23,), 23, {3, 5, 6, 7, 8, 10}, 0),
    ],
)
def test_constructor_examples(name, args, blocks, D, t):
    check(L.LEMMAS[name](*args), blocks, D, t)


@pytest.mark.parametrize(
    "name, args",
    [
        ("two_inf_diff2", (6,)),
        ("four_inf_diff2_mod12", (16,)),
        ("four_inf_diff24", (8,)),
        ("eight_inf_diff_1_u3", (9,)),
        ("three_inf_12_half", (10,)),
        ("one_inf_single_diff", (9, 3)),
        ("two_inf_four_diffs", (9, 1, 3, 4, 2)),
        ("five_inf_single_diff", (8, 4)),
        ("leave_alpha8_s1", (20,)),
        # five distinct differences do not exist in Z_9
        ("one_inf_five_diffs", (9, 1, 3, 5, 2, 4)),
        # 4 is the half difference of Z_8; an orbit would cover it twice
        ("three_inf_three_diffs", (8, 1, 3, 4)),
        # u must exceed 12s + alpha = 32
        ("leave_decomposition", (25, 2, 8)),
        ("leave_decomposition", (40, 1, 3)),
    ],
)
def test_constructor_preconditions(name, args):
    with pytest.raises(PreconditionViolated):
        L.LEMMAS[name](*args)


def test_first_blocks_follow_printed_bases():
    assert L.two_inf_diff2(8).blocks[0] == make_sun(8, inf(1), 2, 0, 3, 4, inf(2))
    assert L.one_inf_five_diffs(11, 1, 3, 2, 4, 5).blocks[0] == make_sun(11, 1, 3, 0, inf(1), 8, 4)


def test_leave_sets():
    assert L.leave_set(13, 1, 0) == frozenset(range(1, 7))
    assert L.leave_set(25, 2, 0, skip_first=True) == {3, 4, 6, 7, 9, 12}
    assert L.leave_set(21, 1, 8) == L.ALPHA8_S1_LEAVE
    # in Z_19 the difference 10 wraps to 9
    assert L.leave_set(19, 1, 8) == {3, 5, 6, 7, 8, 9}
    check(L.leave_alpha8_s1(19), blocks=19, D={3, 5, 6, 7, 8, 9})


def test_leave_skip_first_drops_one_orbit():
    full = check(L.leave_decomposition(37, 3, 0))
    skipped = check(L.leave_decomposition(37, 3, 0, skip_first=True))
    assert len(full.blocks) - len(skipped.blocks) == 37


def test_empty_leave():
    out = L.leave_decomposition(13, 0, 0)
    assert out.blocks == () and out.graph.D == frozenset()


def test_alpha8_s1_base_has_leave_differences():
    base = L.find_alpha8_s1_base()
    assert base == L.ALPHA8_S1_BASE


def test_q2_linking_uses_every_cycle():
    out = check(L.one_inf_single_diff(24, 4))
    assert len(cycles_of_difference(24, 4)) == 4
    assert len(out.blocks) == 8


def test_order_triple_is_lexicographically_first():
    assert L.order_triple(11, (1, 3, 4), 0) == (1, 4, 3)
    with pytest.raises(PreconditionViolated):
        L.order_triple(20, (1, 2, 7), 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 120).flatmap(lambda u: st.tuples(st.just(u), st.integers(1, u // 2))))
def test_five_inf_single_diff_property(ud):
    u, d = ud
    if 2 * d == u:
        with pytest.raises(PreconditionViolated):
            L.five_inf_single_diff(u, d)
        return
    check(L.five_inf_single_diff(u, d), blocks=u, t=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40).flatmap(lambda k: st.tuples(st.just(3 * k), st.integers(1, 3 * k // 2))))
def test_one_inf_single_diff_property(ud):
    u, d = ud
    from math import gcd

    p = u // gcd(u, d)
    valid = 2 * d != u and 3 * d != u and p % 3 == 0 and not (p == 6 and u == 6)
    if not valid:
        with pytest.raises(PreconditionViolated):
            L.one_inf_single_diff(u, d)
        return
    check(L.one_inf_single_diff(u, d), blocks=u // 3, t=1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.sampled_from((0, 4, 8)), st.integers(1, 40))
def test_leave_decomposition_property(s, alpha, extra):
    u = 12 * s + alpha + extra
    out = check(L.leave_decomposition(u, s, alpha))
    assert out.graph.D == L.leave_set(u, s, alpha)
