import math
from fractions import Fraction

import pytest
from hypothesis import given

from rainbow_tournaments import (
    build,
    census,
    claim1_bound,
    color_distinct,
    color_uniform,
    example4,
    lemma1_bound,
    lemma2_upper,
    lemma3_lower,
    lemma4_upper,
    remark1,
    reverse,
    rotational_tournament,
    thm1_bound,
    thm1plus_threshold,
    thm2_threshold,
    verify,
)
from rainbow_tournaments import Tournament
from rainbow_tournaments.errors import VertexOutOfRange
import oracles
from strategies import as_lists, colored_tournaments

E4 = example4().instance


def mono_cycle():
    return build(3, [(0, 1, 0), (1, 2, 0), (2, 0, 0)])


def rainbow_cycle():
    return build(3, [(0, 1, 0), (1, 2, 1), (2, 0, 2)])


# substituted values -----------------------------------------------------------

def test_claim1_values():
    assert claim1_bound(11, 1) == Fraction(99, 8)
    assert claim1_bound(11, 0) == 15


def test_lemma3_values():
    assert lemma3_lower(11, 0) == 55
    # even order uses the other branch: n(n^2 - 1 - 3i^2)/24
    assert lemma3_lower(10, 1) == Fraction(10 * 96, 24)


def test_lemma4_value():
    assert lemma4_upper(11, 1) == 55


def test_thresholds():
    assert thm2_threshold(11, 0) == (1, "odd")
    assert thm2_threshold(12, 1) == (Fraction(140, 132), "even")
    assert thm1plus_threshold(15, 0) == (Fraction(15, 4), "otherwise")
    assert thm1plus_threshold(11, 2) == (Fraction(5, 3), "irregular")


def test_thm1plus_branch_boundary():
    # 3i < n + 3 is strict: n = 9, i = 4 is 12 < 12, false
    assert thm1plus_threshold(9, 4)[1] == "otherwise"
    assert thm1plus_threshold(9, 3)[1] == "irregular"
    assert thm1plus_threshold(9, 0)[1] == "otherwise"


def test_thresholds_are_exact():
    for n in range(3, 30):
        for i in range(0, 4):
            assert isinstance(thm1plus_threshold(n, i)[0], Fraction)
            assert isinstance(thm2_threshold(n, i)[0], Fraction)


@pytest.mark.parametrize("v", range(11))
def test_example4_per_vertex(v):
    assert lemma1_bound(E4, v) == 15
    assert lemma2_upper(E4, v) == 15
    assert thm1_bound(E4, v) == 0


def test_mono_cycle_theorem1_bound():
    assert thm1_bound(mono_cycle(), 0) == -2


def test_vertex_checked():
    with pytest.raises(VertexOutOfRange):
        lemma1_bound(E4, 11)
    with pytest.raises(VertexOutOfRange):
        lemma2_upper(E4, -1)


def test_regular_closed_forms_agree_with_enumeration():
    for n in range(3, 40, 2):
        assert lemma3_lower(n, 0) == n * (n * n - 1) // 24 == len(oracles.triangles(rotational_tournament(n).adj.tolist()))


# verification reports ---------------------------------------------------------

def test_example4_report():
    rep = verify(E4)
    assert rep.ok and not rep.reversed
    assert rep.row("lemma1").actual == rep.row("lemma1").guarantee == 15
    assert rep.row("lemma3").actual == rep.row("lemma3").guarantee == 55
    assert rep.row("lemma4").actual == rep.row("lemma4").guarantee == 55
    assert rep.row("lemma2").notes[0].endswith(": 15")
    assert rep.row("theorem3").hypothesis is False
    assert rep.row("theorem3").satisfied is None
    assert rep.row("theorem1").notes == ["vacuous bound"]
    for name in ("lemma1", "claim1", "lemma2", "lemma3", "lemma4"):
        assert rep.row(name).satisfied is True


def test_example4_t_sum_is_exactly_fifteen():
    cen = census(E4)
    assert [a + b + c for a, b, c in zip(cen.t1, cen.t2, cen.t3)] == [15] * 11
    assert list(cen.nonrainbow_through) == [15] * 11


def test_rainbow_cycle_report_records_both_sides():
    row = verify(rainbow_cycle()).row("theorem3")
    assert row.bound == Fraction(1, 3)
    assert row.hypothesis is False and row.holds is True


def test_remark_report():
    res = remark1(4, 0)
    rep = verify(res.instance)
    row = rep.row("theorem1")
    assert row.satisfied
    v = res.designated_vertex
    assert thm1_bound(res.instance, v) == census(res.instance).rainbow_through[v] == 7


def test_report_reverses_when_in_exceeds_out():
    # vertex 0 receives two arcs of one color, its out-arcs are distinct
    ct = build(3, [(1, 0, 5), (2, 0, 5), (1, 2, 6)])
    rep = verify(ct)
    assert rep.reversed
    assert rep.max_in <= rep.max_out


def test_small_orders_are_degenerate():
    for n in (1, 2):
        rep = verify(color_uniform(Tournament.transitive(n)))
        assert [r.statement for r in rep.rows] == ["regular_strong"]


def test_non_strong_instances_skip_conclusions():
    rep = verify(color_distinct(Tournament.transitive(5)))
    assert not rep.strongly_connected
    assert rep.row("lemma1").satisfied is None
    assert rep.ok


def test_as_dict_fields():
    row = verify(E4).as_dict()["rows"][0]
    for key in ("statement", "hypothesis", "bound_num", "bound_den", "guarantee", "actual", "satisfied", "notes"):
        assert key in row


def test_guarantee_rounds_the_right_way():
    rep = verify(color_distinct(rotational_tournament(11)))
    claim = rep.row("claim1")
    assert claim.guarantee == math.ceil(claim.bound)
    lem4 = rep.row("lemma4")
    assert lem4.guarantee == math.floor(lem4.bound)


# soundness on random instances ------------------------------------------------

@given(colored_tournaments(min_n=3, max_n=8))
def test_verify_never_fails(ct):
    assert verify(ct).ok


@given(colored_tournaments(min_n=3, max_n=8))
def test_lemmas_match_direct_computation(ct):
    adj, col = as_lists(ct)
    rep = verify(ct)
    total, rainbow, _, nr_v = oracles.rainbow_census(adj, col)
    assert rep.row("lemma3").actual == total
    assert rep.row("lemma4").actual == total - rainbow
    if rep.reversed:
        return
    dmin, dmout = oracles.mono_max(adj, col)
    n = ct.n
    for v in range(n):
        assert nr_v[v] <= dmin * (n - 1) + dmout * sum(adj[v])


@given(colored_tournaments(min_n=3, max_n=8))
def test_reversal_gives_same_verdicts(ct):
    a, b = verify(ct), verify(reverse(ct))
    assert [r.satisfied for r in a.rows] == [r.satisfied for r in b.rows]
