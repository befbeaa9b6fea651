"""Acceptance criteria, runnable from pytest or ``rainbow-tournaments selftest``.

Each criterion returns a :class:`Criterion` with a pass flag, a one-line
detail and its wall time; the time limit is part of the pass condition.
Triangle counts used as ground truth here come from :func:`brute_force_census`,
a plain-Python triple loop that shares no code with the library's counting.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import thm1_bound, thm1plus_threshold, verify
from .constructions import (
    almost_regular_tournament,
    example1,
    example4,
    example5,
    remark1,
    rotational_tournament,
)
from .core import ColoredTournament, Tournament, reverse
from .metrics import degree_profile, is_strongly_connected, mono_degrees
from .search import MAX_MONO, SearchConfig, anneal, conjecture_probe, exhaustive_search
from .triangles import census, triangle_count


@dataclass
class Criterion:
    number: str
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.number} {self.title}: {self.detail} ({self.seconds:.2f}s / {self.limit:g}s)"


def brute_force_census(ct: ColoredTournament) -> dict:
    """Directed triangles by checking every vertex triple in pure Python."""
    n = ct.n
    adj = ct.adj.tolist()
    col = ct.colors.tolist()
    total = rainbow = 0
    rainbow_through = [0] * n
    for a, b, c in itertools.combinations(range(n), 3):
        if adj[a][b] and adj[b][c] and adj[c][a]:
            cyc = (col[a][b], col[b][c], col[c][a])
        elif adj[a][c] and adj[c][b] and adj[b][a]:
            cyc = (col[a][c], col[c][b], col[b][a])
        else:
            continue
        total += 1
        if len(set(cyc)) == 3:
            rainbow += 1
            for x in (a, b, c):
                rainbow_through[x] += 1
    return {"total": total, "rainbow": rainbow, "rainbow_through": rainbow_through}


def brute_force_mono_in(ct: ColoredTournament) -> int:
    best = 0
    for v in range(ct.n):
        seen = {}
        for u in range(ct.n):
            if ct.adj[u, v]:
                c = int(ct.colors[u, v])
                seen[c] = seen.get(c, 0) + 1
        best = max(best, max(seen.values(), default=0))
    return best


def _timed(number, title, limit, body):
    start = time.perf_counter()
    try:
        passed, detail = body()
    except Exception as exc:  # a crash is a failed criterion, not an aborted run
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if seconds > limit:
        passed = False
        detail += f"; over the {limit:g}s limit"
    return Criterion(number, title, passed, detail, seconds, limit)


def criterion_example4() -> Criterion:
    def body():
        ct = example4().instance
        cen = census(ct)
        bf = brute_force_census(ct)
        mono = mono_degrees(ct)
        prof = degree_profile(ct)
        strong = is_strongly_connected(ct)
        ok = (
            (cen.total, cen.rainbow, cen.nonrainbow) == (55, 0, 55)
            and (bf["total"], bf["rainbow"]) == (55, 0)
            and mono.max_in == 1
            and Fraction(ct.n + 1, 12) == 1
            and prof.irregularity == 0
            and strong
        )
        return ok, (f"total={cen.total} rainbow={cen.rainbow} nonrainbow={cen.nonrainbow} "
                    f"D-={mono.max_in} i={prof.irregularity} strong={strong}")
    return _timed("1", "example4 reproduction", 1.0, body)


def criterion_example5() -> Criterion:
    def body():
        ct = example5(3).instance
        cen = census(ct)
        mono = mono_degrees(ct)
        prof = degree_profile(ct)
        strong = is_strongly_connected(ct)
        ok = (
            ct.n == 33 and prof.irregularity == 0 and strong
            and mono.max_in == 3 == Fraction(ct.n, 11) and cen.rainbow == 0
            and brute_force_census(ct)["rainbow"] == 0
        )
        return ok, f"n={ct.n} i={prof.irregularity} strong={strong} D-={mono.max_in} rainbow={cen.rainbow}"
    return _timed("2", "example5 reproduction (k=3)", 5.0, body)


def _remark_case(label, k, want):
    def body():
        res = remark1(k, 0)
        v = res.designated_vertex
        actual = brute_force_census(res.instance)["rainbow_through"][v]
        bound = thm1_bound(res.instance, v)
        return actual == want == bound, f"k={k} i=0: rainbow_through(v)={actual} bound={bound}"
    return _timed(label, f"Rainbow-through bound is tight (remark1, k={k})", 1.0, body)


def criterion_remark_k4() -> Criterion:
    return _remark_case("3a", 4, 7)


def criterion_remark_k3() -> Criterion:
    return _remark_case("3b", 3, 0)


def criterion_example1_tightness() -> Criterion:
    def body():
        res = example1(4, 4)
        ct, v = res.instance, res.designated_vertex
        mono = mono_degrees(ct)
        s = 2 * mono.max_in + mono.max_out
        thr, branch = thm1plus_threshold(ct.n, degree_profile(ct).irregularity)
        through = brute_force_census(ct)["rainbow_through"][v]
        ok = s == 4 == Fraction(ct.n + 1, 4) and thr == Fraction(ct.n, 4) and s > thr and through == 0
        return ok, f"n={ct.n} 2D-+D+={s} threshold={thr} ({branch}) rainbow_through(v)={through}"
    return _timed("4", "Every-vertex threshold is tight (example1)", 1.0, body)


def random_tournament(rng, n):
    adj = np.zeros((n, n), dtype=bool)
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.5:
            adj[u, v] = True
        else:
            adj[v, u] = True
    return Tournament(adj)


def random_coloring(rng, t: Tournament) -> ColoredTournament:
    """Colors drawn from a palette whose size is itself random.

    Palettes range from one color to one per arc so that both tiny and
    large monochromatic degrees (and so both sides of every hypothesis)
    are exercised.
    """
    m = int(t.adj.sum())
    style = rng.random()
    if style < 0.3:
        palette = max(1, m)
    elif style < 0.6:
        palette = rng.randint(max(1, m // 2), max(1, m))
    else:
        palette = rng.randint(1, max(1, m))
    colors = np.full(t.adj.shape, -1, dtype=np.int64)
    for u, v in t.arcs():
        colors[u, v] = rng.randrange(palette)
    return ColoredTournament(t, colors)


def random_near_regular(rng, n: int) -> Tournament:
    """A relabelled rotational (or almost-regular) tournament with random 3-cycles reversed.

    Reversing a directed triangle keeps every score, so the result stays
    regular (odd ``n``) or almost regular (even ``n``).
    """
    base = rotational_tournament(n) if n % 2 else almost_regular_tournament(n)
    perm = list(range(n))
    rng.shuffle(perm)
    adj = np.zeros((n, n), dtype=bool)
    for u, v in base.arcs():
        adj[perm[u], perm[v]] = True
    for _ in range(4 * n):
        a, b, c = rng.sample(range(n), 3)
        if adj[a, b] and adj[b, c] and adj[c, a]:
            adj[a, b] = adj[b, c] = adj[c, a] = False
            adj[b, a] = adj[c, b] = adj[a, c] = True
    return Tournament(adj)


def random_proper_coloring(rng, t: Tournament, both_ends: bool) -> ColoredTournament:
    """Greedy random coloring in which no two in-arcs of a vertex share a color.

    With ``both_ends`` out-arcs are kept distinct too, so ``D- = D+ = 1``.
    The palette grows only when forced, which keeps it small enough that
    rainbow-freeness is not automatic.
    """
    n = t.n
    colors = np.full((n, n), -1, dtype=np.int64)
    used_in = [set() for _ in range(n)]
    used_out = [set() for _ in range(n)]
    palette = 0
    arcs = t.arcs()
    rng.shuffle(arcs)
    for u, v in arcs:
        banned = used_in[v] | (used_out[u] if both_ends else set())
        free = [c for c in range(palette) if c not in banned]
        if free:
            c = rng.choice(free)
        else:
            c = palette
            palette += 1
        colors[u, v] = c
        used_in[v].add(c)
        used_out[u].add(c)
    return ColoredTournament(t, colors)


def soundness_check(ct: ColoredTournament, hyp_counter=None) -> list[str]:
    """Problems found on one instance; an empty list means sound."""
    problems = []
    bf = brute_force_census(ct)
    if triangle_count(ct) != bf["total"]:
        problems.append(f"closed form {triangle_count(ct)} != enumeration {bf['total']}")
    cen = census(ct)
    if (cen.total, cen.rainbow) != (bf["total"], bf["rainbow"]):
        problems.append("census disagrees with brute force")
    report = verify(ct)
    for row in report.rows:
        if row.hypothesis and hyp_counter is not None:
            hyp_counter[row.statement] = hyp_counter.get(row.statement, 0) + 1
        if row.satisfied is False:
            problems.append(f"{row.statement} violated: {row.as_dict()}")
    rev = reverse(ct)
    rcen = census(rev)
    if (rcen.total, rcen.rainbow, rcen.nonrainbow) != (cen.total, cen.rainbow, cen.nonrainbow):
        problems.append("reversal changed the census")
    m1, m2 = mono_degrees(ct), mono_degrees(rev)
    if (m1.max_in, m1.max_out) != (m2.max_out, m2.max_in):
        problems.append("reversal did not swap the monochromatic maxima")
    return problems


def criterion_soundness(random_instances: int = 1000, targeted: int = 300, seed: int = 20240501) -> Criterion:
    def body():
        rng = random.Random(seed)
        pairs = list(itertools.combinations(range(5), 2))
        checked, failures, hyp = 0, [], {}
        for mask in range(1 << len(pairs)):
            adj = np.zeros((5, 5), dtype=bool)
            for bit, (u, v) in enumerate(pairs):
                if mask >> bit & 1:
                    adj[u, v] = True
                else:
                    adj[v, u] = True
            t = Tournament(adj)
            for _ in range(3):
                failures += soundness_check(random_coloring(rng, t), hyp)
                checked += 1
        for _ in range(random_instances):
            t = random_tournament(rng, rng.randint(3, 12))
            failures += soundness_check(random_coloring(rng, t), hyp)
            checked += 1
        # extra instances aimed at the small-D hypotheses, which random palettes rarely meet
        for _ in range(targeted):
            t = random_near_regular(rng, rng.randint(12, 21))
            failures += soundness_check(random_proper_coloring(rng, t, rng.random() < 0.5), hyp)
            checked += 1
        coverage = ", ".join(f"{k}:{v}" for k, v in sorted(hyp.items()))
        detail = f"{checked} instances, {len(failures)} violations; hypotheses held [{coverage}]"
        if failures:
            detail += f"; first: {failures[0]}"
        return not failures, detail
    return _timed("5", "Soundness property suite", 120.0, body)


def criterion_regular_strong() -> Criterion:
    def body():
        bad = [n for n in range(1, 100, 2) if not is_strongly_connected(rotational_tournament(n))]
        return not bad, f"odd n in 1..99, not strongly connected: {bad or 'none'}"
    return _timed("6", "Regular implies strongly connected", 5.0, body)


def criterion_probe_11() -> Criterion:
    def body():
        res = conjecture_probe(11, seed=7)
        bf = brute_force_census(res.witness) if res.witness is not None else None
        ok = (
            res.best_mono is not None and res.best_mono >= 1
            and bf["rainbow"] == 0 and brute_force_mono_in(res.witness) == res.best_mono
        )
        return ok, f"base={res.base} best D-={res.best_mono} witness rainbow={bf and bf['rainbow']}"
    return _timed("7a", "Search soundness, n=11", 60.0, body)


def criterion_probe_33() -> Criterion:
    def body():
        res = conjecture_probe(33, seed=7)
        bf = brute_force_census(res.witness) if res.witness is not None else None
        ok = (
            res.best_mono is not None and res.best_mono >= 3
            and bf["rainbow"] == 0 and brute_force_mono_in(res.witness) == res.best_mono
        )
        return ok, f"base={res.base} best D-={res.best_mono} witness rainbow={bf and bf['rainbow']}"
    return _timed("7b", "Search soundness, n=33 warm start", 60.0, body)


def criterion_exhaustive_agreement() -> Criterion:
    def body():
        base = rotational_tournament(5)
        exact = exhaustive_search(base, objective=MAX_MONO)
        heur = anneal(SearchConfig(base, MAX_MONO, budget=5000, seed=3))
        ok = exact.key == heur.key
        return ok, f"exhaustive {exact.key} ({exact.evaluations} leaves), anneal {heur.key}"
    return _timed("8", "Exhaustive/heuristic agreement on rotational T_5", 60.0, body)


CRITERIA = (
    criterion_example4,
    criterion_example5,
    criterion_remark_k4,
    criterion_remark_k3,
    criterion_example1_tightness,
    criterion_soundness,
    criterion_regular_strong,
    criterion_probe_11,
    criterion_probe_33,
    criterion_exhaustive_agreement,
)


def run_all(echo=print) -> list[Criterion]:
    results = []
    for fn in CRITERIA:
        res = fn()
        if echo is not None:
            echo(res.line())
        results.append(res)
    return results
