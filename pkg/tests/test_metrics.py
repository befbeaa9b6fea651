import numpy as np
import pytest
from hypothesis import given

from rainbow_tournaments import (
    Tournament,
    almost_regular_tournament,
    build,
    color_distinct,
    degree_profile,
    is_strongly_connected,
    max_mono_in,
    mono_degrees,
    reverse,
    rotational_tournament,
    strong_components,
)
from rainbow_tournaments.errors import VertexOutOfRange
from rainbow_tournaments.metrics import ALMOST_REGULAR, OTHER, REGULAR
import oracles
from strategies import as_lists, colored_tournaments, tournaments


def test_cyclic_triangle_profile():
    prof = degree_profile(build(3, [(0, 1, 0), (1, 2, 0), (2, 0, 0)]))
    assert prof.out_degree == (1, 1, 1)
    assert prof.irregularity == 0
    assert prof.regularity == REGULAR


def test_transitive_profile():
    prof = degree_profile(Tournament.transitive(4))
    assert prof.irregularity == 3
    assert prof.min_degree == (0, 1, 1, 0)
    assert prof.regularity == OTHER


def test_almost_regular_profile():
    prof = degree_profile(almost_regular_tournament(10))
    assert prof.irregularity == 1
    assert prof.regularity == ALMOST_REGULAR
    assert sorted(set(prof.out_degree)) == [4, 5]


def test_empty_and_single_vertex():
    assert degree_profile(Tournament(np.zeros((0, 0), dtype=bool))).irregularity == 0
    assert degree_profile(Tournament.transitive(1)).irregularity == 0
    assert strong_components(Tournament(np.zeros((0, 0), dtype=bool))) == 0
    assert is_strongly_connected(Tournament.transitive(1))


@given(tournaments())
def test_irregularity_matches_definition(t):
    adj = t.adj.tolist()
    n = len(adj)
    expected = max((abs(sum(adj[v]) - sum(adj[u][v] for u in range(n))) for v in range(n)), default=0)
    assert degree_profile(t).irregularity == expected


@given(tournaments())
def test_irregularity_parity(t):
    # d+ - d- = 2d+ - (n-1), so it has the parity of n - 1
    prof = degree_profile(t)
    if t.n:
        assert prof.irregularity % 2 == (t.n - 1) % 2


@given(colored_tournaments())
def test_mono_degrees_match_oracle(ct):
    adj, col = as_lists(ct)
    mono = mono_degrees(ct)
    assert (mono.max_in, mono.max_out) == oracles.mono_max(adj, col)
    assert max_mono_in(ct) == mono.max_in


@given(colored_tournaments(min_n=2))
def test_mono_counts_sum_to_degrees(ct):
    mono = mono_degrees(ct)
    for v in range(ct.n):
        assert sum(mono.in_counts[v].values()) == int(ct.tournament.in_degrees()[v])
        assert sum(mono.out_counts[v].values()) == int(ct.tournament.out_degrees()[v])


@given(colored_tournaments())
def test_reversal_swaps_mono_maxima(ct):
    a, b = mono_degrees(ct), mono_degrees(reverse(ct))
    assert (a.max_in, a.max_out) == (b.max_out, b.max_in)


def test_mono_subset():
    # vertex 0: in-arcs from 2, 3 both color 7
    ct = build(4, [(0, 1, 1), (2, 0, 7), (3, 0, 7), (1, 2, 2), (1, 3, 3), (2, 3, 4)])
    assert mono_degrees(ct).max_in == 2
    assert mono_degrees(ct, subset=[1, 2, 3]).max_in == 1
    assert mono_degrees(ct, subset=[1]).max_out == 1
    with pytest.raises(VertexOutOfRange):
        mono_degrees(ct, subset=[4])


def test_distinct_colors_have_mono_one():
    mono = mono_degrees(color_distinct(rotational_tournament(9)))
    assert (mono.max_in, mono.max_out) == (1, 1)


def test_mono_as_dict_shape():
    d = mono_degrees(color_distinct(rotational_tournament(3))).as_dict()
    assert set(d) == {"max_in", "max_out", "subset", "per_vertex"}
    assert d["per_vertex"][0]["in"] == {"2": 1}


@given(tournaments())
def test_strong_connectivity_matches_bfs(t):
    adj = t.adj.tolist()
    assert is_strongly_connected(t) == oracles.strongly_connected(adj)


@given(tournaments(min_n=1))
def test_strong_connectivity_matches_scores(t):
    assert is_strongly_connected(t) == oracles.strongly_connected_by_scores(t.adj.tolist())


def test_transitive_components():
    assert strong_components(Tournament.transitive(6)) == 6


@pytest.mark.parametrize("n", [3, 5, 11, 33, 99])
def test_rotational_is_strong(n):
    assert is_strongly_connected(rotational_tournament(n))
