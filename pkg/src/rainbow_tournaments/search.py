"""Search over arc colorings of a fixed tournament.

Objectives (all minimized as lexicographic keys):

``zero-rainbow-max-mono``  ``(rainbow, -D-)``: rainbow-free first, then the
                           largest maximum monochromatic in-degree.
``zero-rainbow-min-mono``  ``(rainbow, D-)``: rainbow-free colorings with the
                           smallest maximum monochromatic in-degree. This is
                           the direction in which a coloring would undercut
                           the conjectured ``n/11`` threshold.
``cap-min-rainbow``        ``(max(0, D- - cap), rainbow)``: respect a cap on
                           ``D-`` and minimize the rainbow count.

:func:`exhaustive_search` enumerates colorings up to renaming of colors
(set partitions of the arc set, as restricted growth strings).
:func:`anneal` is a seeded simulated annealer whose moves recolor one arc
and update the objective incrementally in O(n).
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .core import NO_COLOR, ColoredTournament, Tournament, as_tournament, color_distinct
from .errors import EvenOrder, SearchSpaceTooLarge, TournamentError
from .metrics import mono_degrees
from .triangles import TriangleCensus, census, triangle_array

MAX_MONO = "zero-rainbow-max-mono"
MIN_MONO = "zero-rainbow-min-mono"
CAP_MIN_RAINBOW = "cap-min-rainbow"
OBJECTIVES = (MAX_MONO, MIN_MONO, CAP_MIN_RAINBOW)

DEFAULT_BUDGET = 20_000
DEFAULT_EVALUATION_CAP = 2_000_000


def objective_key(objective: str, rainbow: int, mono_in: int, cap: int | None = None) -> tuple[int, int]:
    if objective == MAX_MONO:
        return rainbow, -mono_in
    if objective == MIN_MONO:
        return rainbow, mono_in
    if objective == CAP_MIN_RAINBOW:
        if cap is None:
            raise TournamentError("cap-min-rainbow needs mono_cap")
        return max(0, mono_in - cap), rainbow
    raise TournamentError(f"unknown objective {objective!r}; choose from {', '.join(OBJECTIVES)}")


@dataclass(frozen=True)
class SearchConfig:
    """Annealing run parameters.

    Temperatures are in units of the scalarized energy
    ``primary * weight + secondary`` where ``weight`` is ``n**2`` for the
    two mono objectives and ``C(n, 3) + 1`` for ``cap-min-rainbow``.
    The temperature decays geometrically from ``t_start`` to ``t_end``
    over ``budget`` proposed moves. ``max_colors`` caps the palette: a
    fresh color is only offered while fewer colors are in use.
    """

    base: Tournament
    objective: str = MAX_MONO
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    t_start: float = 2.0
    t_end: float = 0.05
    max_colors: int | None = None
    mono_cap: int | None = None
    initial: ColoredTournament | None = None


@dataclass(frozen=True)
class SearchOutcome:
    coloring: ColoredTournament
    census: TriangleCensus
    mono_in: int
    mono_out: int
    objective: str
    key: tuple
    evaluations: int
    exhaustive: bool
    seed: int | None = None
    wall_time: float = 0.0
    accepted: int = 0

    @property
    def rainbow(self) -> int:
        return self.census.rainbow

    def as_dict(self) -> dict:
        return {
            "objective": self.objective,
            "key": list(self.key),
            "rainbow": self.census.rainbow,
            "triangles": self.census.total,
            "mono_in": self.mono_in,
            "mono_out": self.mono_out,
            "colors": len(self.coloring.palette()),
            "evaluations": self.evaluations,
            "accepted": self.accepted,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "wall_time": self.wall_time,
        }


def _finish(ct, objective, cap, key, evaluations, exhaustive, seed, started, accepted=0):
    cen = census(ct)
    mono = mono_degrees(ct)
    check = objective_key(objective, cen.rainbow, mono.max_in, cap)
    if check != tuple(key):
        raise RuntimeError(f"search bookkeeping drifted: tracked {tuple(key)}, recomputed {check}")
    return SearchOutcome(
        ct, cen, mono.max_in, mono.max_out, objective, check, evaluations, exhaustive, seed,
        time.perf_counter() - started, accepted,
    )


# exhaustive ---------------------------------------------------------------------

def stirling2(m: int, k: int) -> int:
    row = [1] + [0] * k
    for i in range(1, m + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def partition_count(m: int, max_blocks: int | None = None) -> int:
    """Colorings of ``m`` arcs up to renaming, with at most ``max_blocks`` colors."""
    if m == 0:
        return 1
    top = m if max_blocks is None else min(m, max_blocks)
    return sum(stirling2(m, k) for k in range(1, top + 1))


def exhaustive_search(
    base,
    max_colors: int | None = None,
    objective: str = MAX_MONO,
    mono_cap: int | None = None,
    evaluation_cap: int = DEFAULT_EVALUATION_CAP,
) -> SearchOutcome:
    """Optimal coloring of ``base`` under ``objective``, up to color renaming.

    Arcs are taken in ``(tail, head)`` order and colored by restricted growth
    strings. Rainbow count and every monochromatic in-degree only grow as a
    partial coloring is extended, so partial assignments that cannot beat
    the incumbent are cut off.
    """
    started = time.perf_counter()
    t = as_tournament(base)
    objective_key(objective, 0, 0, mono_cap)  # validates objective/cap
    arcs = t.arcs()
    m = len(arcs)
    size = partition_count(m, max_colors)
    if size > evaluation_cap:
        raise SearchSpaceTooLarge(size, evaluation_cap)
    blocks_cap = m if max_colors is None else max_colors
    index = {arc: k for k, arc in enumerate(arcs)}
    heads = [v for _, v in arcs]

    # triangles keyed by their last arc in the enumeration order
    closing = [[] for _ in range(m)]
    for a, b, c in triangle_array(t):
        ids = sorted((index[(a, b)], index[(b, c)], index[(c, a)]))
        closing[ids[2]].append((ids[0], ids[1]))

    n = t.n
    counts = [[0] * (m + 1) for _ in range(n)]
    assign = [0] * m
    best = {"key": None, "assign": None}
    evaluations = 0

    # lower bound of the key reachable from a partial state
    if objective == MAX_MONO:
        def prunable(rb, mono):
            bk = best["key"]
            return bk is not None and (rb > bk[0] or (rb == bk[0] and -(n - 1) >= bk[1]))
    elif objective == MIN_MONO:
        def prunable(rb, mono):
            bk = best["key"]
            return bk is not None and (rb, mono) >= bk
    else:
        def prunable(rb, mono):
            bk = best["key"]
            return bk is not None and (max(0, mono - mono_cap), rb) >= bk

    def dfs(pos, used, rb, mono):
        nonlocal evaluations
        if pos == m:
            evaluations += 1
            key = objective_key(objective, rb, mono, mono_cap)
            if best["key"] is None or key < best["key"]:
                best["key"] = key
                best["assign"] = list(assign)
            return
        h = heads[pos]
        for color in range(min(used + 1, blocks_cap)):
            assign[pos] = color
            extra = 0
            for x, y in closing[pos]:
                cx, cy = assign[x], assign[y]
                if cx != cy and cx != color and cy != color:
                    extra += 1
            counts[h][color] += 1
            new_mono = max(mono, counts[h][color])
            if not prunable(rb + extra, new_mono):
                dfs(pos + 1, max(used, color + 1), rb + extra, new_mono)
            counts[h][color] -= 1

    dfs(0, 0, 0, 0)
    colors = np.full((n, n), NO_COLOR, dtype=np.int64)
    for (u, v), c in zip(arcs, best["assign"] or []):
        colors[u, v] = c
    ct = ColoredTournament(t, colors)
    return _finish(ct, objective, mono_cap, best["key"] or objective_key(objective, 0, 0, mono_cap),
                   evaluations, True, None, started)


# annealing ----------------------------------------------------------------------

class _MaxTracker:
    """Maximum of a multiset of non-negative counts under +-1 updates."""

    def __init__(self, values):
        self.hist = Counter(v for v in values if v > 0)
        self.top = max(self.hist, default=0)

    def move(self, old, new):
        if old > 0:
            self.hist[old] -= 1
        if new > 0:
            self.hist[new] += 1
        if new > self.top:
            self.top = new
        while self.top > 0 and self.hist[self.top] == 0:
            self.top -= 1


class _State:
    def __init__(self, ct: ColoredTournament):
        t = ct.tournament
        self.n = t.n
        self.colors = np.array(ct.colors, copy=True)
        self.arcs = t.arcs()
        adj = t.adj
        self.third = [np.flatnonzero(adj[v] & adj[:, u]) for u, v in self.arcs]
        self.in_cnt = Counter()
        self.out_cnt = Counter()
        self.usage = Counter()
        for u, v in self.arcs:
            c = int(self.colors[u, v])
            self.in_cnt[v, c] += 1
            self.out_cnt[u, c] += 1
            self.usage[c] += 1
        self.max_in = _MaxTracker(self.in_cnt.values())
        self.max_out = _MaxTracker(self.out_cnt.values())
        self.rainbow = census(ct).rainbow
        self.fresh = max(self.usage, default=-1) + 1

    def rainbow_on_arc(self, idx, color):
        u, v = self.arcs[idx]
        ws = self.third[idx]
        if not len(ws):
            return 0
        xs = self.colors[v, ws]
        ys = self.colors[ws, u]
        return int(((xs != color) & (ys != color) & (xs != ys)).sum())

    def recolor(self, idx, new):
        u, v = self.arcs[idx]
        old = int(self.colors[u, v])
        if old == new:
            return old
        self.rainbow += self.rainbow_on_arc(idx, new) - self.rainbow_on_arc(idx, old)
        self.colors[u, v] = new
        for cnt, tracker, x in ((self.in_cnt, self.max_in, v), (self.out_cnt, self.max_out, u)):
            cnt[x, old] -= 1
            tracker.move(cnt[x, old] + 1, cnt[x, old])
            cnt[x, new] += 1
            tracker.move(cnt[x, new] - 1, cnt[x, new])
        self.usage[old] -= 1
        if not self.usage[old]:
            del self.usage[old]
        self.usage[new] += 1
        self.fresh = max(self.fresh, new + 1)
        return old

    def candidates(self, idx, max_colors):
        u, v = self.arcs[idx]
        c = self.colors
        near = np.concatenate((c[u], c[:, u], c[v], c[:, v]))
        current = int(c[u, v])
        cands = [int(x) for x in np.unique(near[near >= 0]) if x != current]
        if max_colors is None or len(self.usage) < max_colors or self.usage[current] == 1:
            cands.append(self.fresh)
        return cands


def anneal(config: SearchConfig) -> SearchOutcome:
    started = time.perf_counter()
    objective, cap = config.objective, config.mono_cap
    objective_key(objective, 0, 0, cap)
    start = config.initial if config.initial is not None else color_distinct(config.base)
    if start.tournament != config.base:
        raise TournamentError("initial coloring is not on the base tournament")
    state = _State(start)
    n = state.n
    weight = n * n if objective != CAP_MIN_RAINBOW else math.comb(n, 3) + 1

    def key():
        return objective_key(objective, state.rainbow, state.max_in.top, cap)

    def energy(k):
        return k[0] * weight + k[1]

    rng = random.Random(config.seed)
    cur = key()
    best_key, best_colors = cur, state.colors.copy()
    evaluations, accepted = 1, 0
    m = len(state.arcs)
    ratio = config.t_end / config.t_start if config.t_start > 0 else 0.0
    for step in range(config.budget if m else 0):
        temp = config.t_start * ratio ** (step / max(1, config.budget - 1))
        idx = rng.randrange(m)
        cands = state.candidates(idx, config.max_colors)
        if not cands:
            continue
        new = cands[rng.randrange(len(cands))]
        old = state.recolor(idx, new)
        evaluations += 1
        k = key()
        delta = energy(k) - energy(cur)
        if delta <= 0 or (temp > 0 and rng.random() < math.exp(-delta / temp)):
            cur = k
            accepted += 1
            if k < best_key:
                best_key, best_colors = k, state.colors.copy()
        else:
            state.recolor(idx, old)
    ct = ColoredTournament(config.base, best_colors)
    return _finish(ct, objective, cap, best_key, evaluations, False, config.seed, started, accepted)


def _anneal_seed(args):
    config, seed = args
    return anneal(replace(config, seed=seed))


def anneal_restarts(config: SearchConfig, seeds, workers: int = 1) -> SearchOutcome:
    """Independent runs, one per seed; the best key wins, ties to the smallest seed."""
    seeds = sorted(set(seeds))
    if not seeds:
        raise TournamentError("no seeds given")
    jobs = [(config, s) for s in seeds]
    if workers > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_anneal_seed, jobs))
    else:
        outcomes = [_anneal_seed(j) for j in jobs]
    return min(outcomes, key=lambda o: (o.key, o.seed))


# conjecture probe -----------------------------------------------------------------

@dataclass(frozen=True)
class ProbeResult:
    n: int
    base: str
    best_mono: int | None
    witness: ColoredTournament | None
    outcome: SearchOutcome = field(repr=False)


def conjecture_probe(
    n: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    objective: str = MAX_MONO,
    warm_start: bool = True,
) -> ProbeResult:
    """Search rainbow-free colorings of a regular tournament of order ``n``.

    For ``n = 11k`` the base is the blow-up of the 11-vertex rainbow-free
    example and, with ``warm_start``, the run starts from its coloring
    (``D- = k``). Otherwise the base is the rotational tournament and the
    run starts from the all-distinct coloring.

    ``best_mono`` is ``D-`` of the best rainbow-free coloring found, or
    ``None`` if none was found.
    """
    from .constructions import example5, rotational_tournament

    if n < 1 or n % 2 == 0:
        raise EvenOrder(f"regular tournaments need odd order, got {n}")
    if warm_start and n % 11 == 0:
        start = example5(n // 11).instance
        base_name = f"example5(k={n // 11})"
        config = SearchConfig(start.tournament, objective, budget, seed, initial=start)
    else:
        base_name = f"rotational({n})"
        config = SearchConfig(rotational_tournament(n), objective, budget, seed)
    outcome = anneal(config)
    if outcome.rainbow == 0:
        return ProbeResult(n, base_name, outcome.mono_in, outcome.coloring, outcome)
    return ProbeResult(n, base_name, None, None, outcome)
