import numpy as np
import pytest
from hypothesis import given, strategies as st

from rainbow_tournaments import (
    CAP_MIN_RAINBOW,
    MAX_MONO,
    MIN_MONO,
    ColoredTournament,
    SearchConfig,
    Tournament,
    anneal,
    anneal_restarts,
    blowup,
    census,
    conjecture_probe,
    example4,
    exhaustive_search,
    mono_degrees,
    rotational_tournament,
)
from rainbow_tournaments.errors import EvenOrder, SearchSpaceTooLarge, TournamentError
from rainbow_tournaments.search import objective_key, partition_count, stirling2
import oracles


def brute_optimum(t, objective, max_colors, cap=None):
    """Best key over every coloring with colors 0..max_colors-1."""
    adj = t.adj.tolist()
    arcs = oracles.arcs_of(adj)
    n = t.n
    best = None
    for combo in oracles.all_colorings(len(arcs), max_colors):
        col = [[-1] * n for _ in range(n)]
        for (u, v), c in zip(arcs, combo):
            col[u][v] = c
        _, rainbow, _, _ = oracles.rainbow_census(adj, col)
        key = objective_key(objective, rainbow, oracles.mono_max(adj, col)[0], cap)
        best = key if best is None else min(best, key)
    return best


def test_stirling_and_partitions():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [partition_count(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert partition_count(5, 2) == 1 + 15


def test_objective_keys():
    assert objective_key(MAX_MONO, 2, 3) == (2, -3)
    assert objective_key(MIN_MONO, 0, 3) == (0, 3)
    assert objective_key(CAP_MIN_RAINBOW, 4, 3, cap=1) == (2, 4)
    with pytest.raises(TournamentError):
        objective_key(CAP_MIN_RAINBOW, 0, 0)
    with pytest.raises(TournamentError):
        objective_key("nope", 0, 0)


def test_exhaustive_cycle():
    out = exhaustive_search(rotational_tournament(3))
    assert out.rainbow == 0 and out.mono_in == 1
    assert len(out.coloring.palette()) <= 2
    assert out.exhaustive


def test_exhaustive_transitive():
    out = exhaustive_search(Tournament.transitive(4))
    assert out.key == (0, -3)


@pytest.mark.parametrize("objective", [MAX_MONO, MIN_MONO])
@pytest.mark.parametrize("base", [rotational_tournament(3), Tournament.transitive(4), rotational_tournament(5)],
                         ids=["C3", "TT4", "T5"])
def test_exhaustive_matches_brute_force(base, objective):
    # same palette cap on both sides; the cap keeps brute force affordable
    palette = 4 if len(base.arcs()) <= 6 else 3
    exact = exhaustive_search(base, max_colors=palette, objective=objective)
    assert exact.key == brute_optimum(base, objective, palette)


def test_exhaustive_with_cap_matches_brute_force():
    base = rotational_tournament(5)
    exact = exhaustive_search(base, max_colors=3, objective=CAP_MIN_RAINBOW, mono_cap=1)
    assert exact.key == brute_optimum(base, CAP_MIN_RAINBOW, 3, cap=1)


def test_rotational_five_optima():
    base = rotational_tournament(5)
    assert exhaustive_search(base, objective=MAX_MONO).key == (0, -2)
    assert exhaustive_search(base, objective=MIN_MONO).key == (0, 1)


def test_space_cap():
    with pytest.raises(SearchSpaceTooLarge):
        exhaustive_search(rotational_tournament(7), evaluation_cap=1000)


def test_outcome_recomputed_from_scratch():
    out = exhaustive_search(rotational_tournament(5), objective=MIN_MONO)
    cen = census(out.coloring)
    assert (cen.rainbow, mono_degrees(out.coloring).max_in) == (out.rainbow, out.mono_in)


# annealing ----------------------------------------------------------------------

def test_budget_zero_returns_initial():
    start = example4().instance
    out = anneal(SearchConfig(start.tournament, MAX_MONO, budget=0, seed=1, initial=start))
    assert out.coloring == start
    assert out.evaluations == 1


def test_anneal_is_deterministic():
    cfg = SearchConfig(rotational_tournament(7), MAX_MONO, budget=2000, seed=11)
    a, b = anneal(cfg), anneal(cfg)
    assert a.coloring == b.coloring and a.key == b.key


def test_anneal_rejects_foreign_start():
    tt = Tournament.transitive(11)
    foreign = ColoredTournament(tt, np.where(tt.adj, 0, -1))
    with pytest.raises(TournamentError):
        anneal(SearchConfig(rotational_tournament(11), initial=foreign))


@pytest.mark.parametrize("objective", [MAX_MONO, MIN_MONO])
def test_anneal_reaches_exhaustive_optimum_on_t5(objective):
    base = rotational_tournament(5)
    exact = exhaustive_search(base, objective=objective)
    best = anneal_restarts(SearchConfig(base, objective, budget=5000), seeds=range(4))
    assert best.key == exact.key


@given(st.integers(0, 10_000))
def test_warm_start_never_worse(seed):
    start = example4().instance
    before = objective_key(MAX_MONO, census(start).rainbow, mono_degrees(start).max_in)
    out = anneal(SearchConfig(start.tournament, MAX_MONO, budget=200, seed=seed, initial=start))
    assert out.key <= before


@given(st.integers(0, 10_000), st.sampled_from([MAX_MONO, MIN_MONO, CAP_MIN_RAINBOW]))
def test_incremental_state_stays_consistent(seed, objective):
    # anneal recomputes the key from scratch and raises if its running totals drifted
    cfg = SearchConfig(rotational_tournament(7), objective, budget=300, seed=seed, mono_cap=2, max_colors=5)
    out = anneal(cfg)
    assert out.key == objective_key(objective, census(out.coloring).rainbow,
                                    mono_degrees(out.coloring).max_in, cap=2)


def test_max_colors_respected():
    out = anneal(SearchConfig(rotational_tournament(7), MIN_MONO, budget=3000, seed=2, max_colors=3,
                              initial=ColoredTournament(rotational_tournament(7),
                                                        np.where(rotational_tournament(7).adj, 0, -1))))
    assert len(out.coloring.palette()) <= 3


def test_rotational_eleven_rainbow_free():
    out = anneal(SearchConfig(rotational_tournament(11), MIN_MONO, budget=20_000, seed=0))
    assert out.rainbow == 0 and out.mono_in >= 1


def test_blowup_22_warm_start():
    start = blowup(example4(), 2, inner=Tournament.transitive(2))
    out = anneal(SearchConfig(start.tournament, MAX_MONO, budget=2000, seed=0, initial=start))
    assert out.rainbow == 0 and out.mono_in >= 2


def test_restarts_tie_break_smallest_seed():
    cfg = SearchConfig(rotational_tournament(3), MAX_MONO, budget=50)
    best = anneal_restarts(cfg, seeds=[5, 2, 9])
    assert best.seed == 2


def test_restarts_parallel_matches_serial():
    cfg = SearchConfig(rotational_tournament(7), MAX_MONO, budget=1000)
    a = anneal_restarts(cfg, seeds=range(3), workers=1)
    b = anneal_restarts(cfg, seeds=range(3), workers=2)
    assert (a.key, a.seed, a.coloring) == (b.key, b.seed, b.coloring)


def test_restarts_need_seeds():
    with pytest.raises(TournamentError):
        anneal_restarts(SearchConfig(rotational_tournament(3)), seeds=[])


# probes -------------------------------------------------------------------------

def test_probe_three():
    res = conjecture_probe(3, budget=500, seed=0)
    assert res.best_mono == 1
    _, rainbow, _, _ = oracles.rainbow_census(res.witness.adj.tolist(), res.witness.colors.tolist())
    assert rainbow == 0


def test_probe_rejects_even():
    with pytest.raises(EvenOrder):
        conjecture_probe(10)


def test_probe_cold_start_eleven():
    res = conjecture_probe(11, seed=1, warm_start=False)
    assert res.base == "rotational(11)"
    assert res.best_mono is not None and res.best_mono >= 1


def test_probe_warm_start_dominates():
    res = conjecture_probe(33, budget=500, seed=0)
    assert res.base == "example5(k=3)"
    assert res.best_mono >= 3


def test_outcome_dict_fields():
    d = exhaustive_search(rotational_tournament(3)).as_dict()
    assert {"objective", "key", "rainbow", "mono_in", "evaluations", "wall_time"} <= set(d)
    assert all(isinstance(x, int) for x in d["key"])


def test_exhaustive_leaves_bounded_by_partitions():
    out = exhaustive_search(Tournament.transitive(3), objective=MIN_MONO)
    assert out.key == (0, 1)
    assert 1 <= out.evaluations <= partition_count(3)
