"""Deterministic generators for the extremal instances.

The two-sided constructions (``remark1``, ``example1``, ``example2``,
``example3``) share one layout. The designated vertex ``v`` is vertex 0,
its out-neighbors ``w_1..w_a`` are vertices ``1..a`` and its in-neighbors
``u_1..u_b`` are vertices ``a+1..a+b``. Window indices on ``U`` are
1-based and wrap modulo ``b`` (index ``j`` means ``u_{((j-1) mod b) + 1}``),
and the structured colors keep the same 1-based wrapped values.

Every arc not given a structured color receives a fresh color, assigned in
``(tail, head)`` order starting just above the largest structured color.

Each builder recomputes the recorded claims on the finished instance and
raises :class:`ConstructionMismatch` if any of them fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import NO_COLOR, ColoredTournament, Tournament
from .errors import (
    ConstructionMismatch,
    EvenBlowupFactor,
    EvenOrder,
    KTooSmall,
    OddIrregularityParameter,
    OddOrder,
    ParameterOutOfRange,
    ParityViolation,
    RangeViolation,
)
from .metrics import degree_profile, is_strongly_connected, mono_degrees
from .triangles import census


@dataclass(frozen=True)
class ConstructionResult:
    name: str
    params: dict
    instance: ColoredTournament
    designated_vertex: int | None
    claimed: dict
    notes: tuple[str, ...] = field(default=())
    stated: dict = field(default_factory=dict)

    def measured(self) -> dict:
        return measure(self.instance, self.designated_vertex)


def measure(ct: ColoredTournament, v: int | None = None) -> dict:
    """The metric values a construction can claim, computed from scratch."""
    prof = degree_profile(ct)
    mono = mono_degrees(ct)
    cen = census(ct)
    out = {
        "n": ct.n,
        "irregularity": prof.irregularity,
        "regular": prof.irregularity == 0,
        "strongly_connected": is_strongly_connected(ct),
        "mono_in": mono.max_in,
        "mono_out": mono.max_out,
        "mono_sum": 2 * mono.max_in + mono.max_out,
        "triangles": cen.total,
        "rainbow_total": cen.rainbow,
    }
    if v is not None:
        out["rainbow_through_v"] = cen.rainbow_through[v]
        out["out_degree_v"] = prof.out_degree[v]
        out["in_degree_v"] = prof.in_degree[v]
    return out


def _checked(name, params, ct, v, claimed, notes=(), stated=None):
    got = measure(ct, v)
    bad = {k: (want, got[k]) for k, want in claimed.items() if got[k] != want}
    if bad:
        detail = ", ".join(f"{k}: recorded {w}, measured {g}" for k, (w, g) in sorted(bad.items()))
        raise ConstructionMismatch(f"{name}{params}: {detail}")
    return ConstructionResult(name, dict(params), ct, v, dict(claimed), tuple(notes), dict(stated or {}))


# base tournaments -----------------------------------------------------------

def _rotational_adj(n):
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    for d in range(1, (n - 1) // 2 + 1):
        adj[idx, (idx + d) % n] = True
    return adj


def rotational_tournament(n: int) -> Tournament:
    """Vertex ``i`` beats ``i+1, ..., i+(n-1)/2`` (mod n). Regular."""
    if n < 1 or n % 2 == 0:
        raise EvenOrder(f"rotational tournaments need odd n >= 1, got {n}")
    return Tournament(_rotational_adj(n))


def almost_regular_tournament(n: int) -> Tournament:
    """Rotational tournament of order ``n+1`` with its last vertex removed.

    Vertices ``0..n/2-1`` get out-degree ``n/2``, the rest ``n/2 - 1``.
    """
    if n < 2 or n % 2:
        raise OddOrder(f"almost regular builder needs even n >= 2, got {n}")
    return Tournament(_rotational_adj(n + 1)[:n, :n])


# shared two-sided layout ----------------------------------------------------

def _wrap(j, mod):
    return (j - 1) % mod + 1


class _Layout:
    """Mutable scratch space for the v / W / U constructions."""

    def __init__(self, a, b, sub_w, sub_u):
        self.a, self.b = a, b
        self.n = n = 1 + a + b
        self.adj = np.zeros((n, n), dtype=bool)
        self.colors = np.full((n, n), NO_COLOR, dtype=np.int64)
        W = np.arange(1, a + 1)
        U = np.arange(a + 1, a + b + 1)
        self.adj[0, W] = True
        self.adj[U, 0] = True
        self.adj[np.ix_(W, W)] = sub_w
        self.adj[np.ix_(U, U)] = sub_u
        # W -> U defaults to U -> W until windows are placed
        self.adj[np.ix_(U, W)] = True

    def w(self, j):
        return j

    def u(self, j):
        return self.a + _wrap(j, self.b)

    def window(self, j, u_indices):
        """Make ``w_j`` beat exactly the listed ``u`` indices."""
        wj = self.w(j)
        u_indices = list(u_indices)
        assert len({_wrap(p, self.b) for p in u_indices}) == len(u_indices), "window wraps onto itself"
        for p in u_indices:
            up = self.u(p)
            self.adj[up, wj] = False
            self.adj[wj, up] = True

    def paint(self, tail, head, color):
        assert self.adj[tail, head], f"no arc {tail}->{head} to color"
        self.colors[tail, head] = color

    def finish(self):
        fresh = int(self.colors.max()) + 1
        for tail, head in np.argwhere(self.adj & (self.colors == NO_COLOR)):
            self.colors[tail, head] = fresh
            fresh += 1
        return ColoredTournament(Tournament(self.adj), self.colors)


# named constructions --------------------------------------------------------

def remark1(k: int, i: int) -> ConstructionResult:
    """Tightness witness for the per-vertex rainbow lower bound.

    ``n = 4k - 1 + 2i``; ``v`` lies in exactly ``(k-3)(2k-1+i)`` rainbow
    triangles while both monochromatic degrees are 1.
    """
    if i < 0 or i % 2:
        raise OddIrregularityParameter(f"i must be even and >= 0 (regular halves of order 2k-1+i), got {i}")
    if k < 3:
        raise KTooSmall(f"k must be >= 3 for the colored arcs w_j u_(j+2) to exist, got {k}")
    a = 2 * k - 1 + i
    lay = _Layout(a, a, _rotational_adj(a), _rotational_adj(a))
    for j in range(1, a + 1):
        lay.window(j, range(j, j + k))
    for j in range(1, a + 1):
        lay.paint(0, lay.w(j), j)
        lay.paint(lay.u(j), 0, j)
        lay.paint(lay.w(j), lay.u(j + 1), j)
        lay.paint(lay.w(j), lay.u(j + 2), _wrap(j + 2, a))
    claimed = {
        "n": 4 * k - 1 + 2 * i,
        "irregularity": i,
        "strongly_connected": True,
        "mono_in": 1,
        "mono_out": 1,
        "rainbow_through_v": (k - 3) * a,
    }
    return _checked("remark1", {"k": k, "i": i}, lay.finish(), 0, claimed)


def example1(m: int, k: int) -> ConstructionResult:
    """``n = 4m - 1``; no rainbow triangle through ``v`` and ``2D- + D+ = k``."""
    if m < 1 or not 1 <= k <= m:
        raise ParameterOutOfRange(f"need 1 <= k <= m, got m={m}, k={k}")
    if k < 3:
        raise ParameterOutOfRange(f"the recorded out-degree k-2 needs k >= 3, got k={k}")
    a = 2 * m - 1
    lay = _Layout(a, a, _rotational_adj(a), _rotational_adj(a))
    for j in range(1, a + 1):
        lay.window(j, range(j, j + k))
    for j in range(1, a + 1):
        lay.paint(0, lay.w(j), j)
        lay.paint(lay.u(j), 0, j)
        lay.paint(lay.w(j), lay.u(j + 1), _wrap(j + 1, a))
        for p in range(j + 2, j + k):
            lay.paint(lay.w(j), lay.u(p), j)
    claimed = {
        "n": 4 * m - 1,
        "irregularity": 2 * m - 2 * k,
        "strongly_connected": True,
        "mono_in": 1,
        "mono_out": k - 2,
        "mono_sum": k,
        "rainbow_through_v": 0,
    }
    return _checked("example1", {"m": m, "k": k}, lay.finish(), 0, claimed)


def example2(n: int, x: int) -> ConstructionResult:
    """Irregularity ``x - 1 >= (n-1)/2`` defeats even ``D- = D+ = 1``."""
    if x % 2 == 0 or (n - 1 - x) % 2 == 0:
        raise ParityViolation(f"x and n-1-x must both be odd, got n={n}, x={x}")
    if not (n + 1 <= 2 * x and x <= n - 2):
        raise RangeViolation(f"need (n+1)/2 <= x <= n-2, got n={n}, x={x}")
    b = n - 1 - x
    lay = _Layout(x, b, _rotational_adj(x), _rotational_adj(b))
    for j in range(1, b + 1):
        lay.window(j, [j])
    for j in range(1, x + 1):
        lay.paint(0, lay.w(j), j)
    for j in range(1, b + 1):
        lay.paint(lay.u(j), 0, j)
    claimed = {
        "n": n,
        "irregularity": x - 1,
        "strongly_connected": True,
        "mono_in": 1,
        "mono_out": 1,
        "rainbow_through_v": 0,
    }
    return _checked("example2", {"n": n, "x": x}, lay.finish(), 0, claimed)


def thm1plus_floor(n: int, i: int) -> int:
    return (n - 1 - i) * (n + 1 - i) // (4 * (n - 1 + i))


def example3_case(k: int, i: int) -> tuple[int, int]:
    """``(case, m)`` for the given parameters."""
    n = 4 * k - 1 + i
    m = thm1plus_floor(n, i)
    if i <= 2 * k - 1 and (2 * k - 1) * (m + 1) + i * m >= k * (2 * k - 1):
        return 1, m
    return 2, m


def example3(k: int, i: int) -> ConstructionResult:
    """Near-tightness witness for ``1 <= i < (n+3)/3``, ``n = 4k - 1 + i``.

    With ``m`` the floor of the every-vertex threshold, ``w_1..w_{2k-1}``
    beat windows of ``m+1`` consecutive ``u``'s and the extra vertices
    ``w_{2k}, ...`` beat ``u_j`` plus a shifted block. Case 1 uses blocks of
    ``m-1``, Case 2 blocks of ``m`` (plus the ``w_{4k-1}`` rule when
    ``i = 2k``). For odd ``i`` the extra vertices sit on the
    higher-out-degree half of the almost regular ``T[W]``.

    Only what the coloring actually guarantees is recorded as a claim: the
    colors ``C(v w_{2k-1+j}) = j`` repeat on the out-arcs of ``v``, so the
    maximum monochromatic out-degree is at least 2, and the irregularity of
    the result can exceed ``i``. The literal values are kept in
    ``stated``.
    """
    n = 4 * k - 1 + i
    if k < 1 or i < 1 or not 3 * i < n + 3:
        raise ParameterOutOfRange(f"need k >= 1 and 1 <= i < (n+3)/3, got k={k}, i={i}")
    case, m = example3_case(k, i)
    if m < 1:
        raise ParameterOutOfRange(f"k={k}, i={i} gives m=0; the arcs w_j u_(j+1) would not exist")
    a, b = 2 * k - 1 + i, 2 * k - 1
    if i % 2 == 0:
        sub_w = _rotational_adj(a)
    else:
        sub_w = almost_regular_tournament(a).adj[::-1, ::-1]
    lay = _Layout(a, b, sub_w, _rotational_adj(b))
    last = 2 * m - 1 if case == 1 else 2 * m
    extra = min(i, 2 * k - 1)
    for j in range(1, 2 * k):
        lay.window(j, range(j, j + m + 1))
    for j in range(1, extra + 1):
        lay.window(2 * k - 1 + j, [j, *range(j + m + 1, j + last + 1)])
    if case == 2 and i == 2 * k:
        lay.window(4 * k - 1, range(1, m + 1))

    for j in range(1, 2 * k):
        lay.paint(0, lay.w(j), j)
        lay.paint(lay.u(j), 0, j)
        lay.paint(lay.w(j), lay.u(j + 1), _wrap(j + 1, b))
        for p in range(j + 2, j + m + 1):
            lay.paint(lay.w(j), lay.u(p), j)
    for j in range(1, extra + 1):
        lay.paint(0, lay.w(2 * k - 1 + j), j)
        for q in range(j + m + 1, j + last + 1):
            lay.paint(lay.w(2 * k - 1 + j), lay.u(q), j)
    if case == 2 and i == 2 * k:
        lay.paint(0, lay.w(4 * k - 1), 2 * k)
        for s in range(1, m + 1):
            lay.paint(lay.w(4 * k - 1), lay.u(s), 2 * k)

    stated_out = m - 1 if case == 1 else m
    mono_out = max(stated_out, 2)
    claimed = {
        "n": n,
        "strongly_connected": True,
        "mono_in": 1,
        "mono_out": mono_out,
        "mono_sum": 2 + mono_out,
        "rainbow_through_v": 0,
    }
    stated = {"irregularity": i, "mono_out": stated_out, "mono_sum": 2 + stated_out}
    ct = lay.finish()
    notes = [f"case {case}, m = {m}"]
    if stated_out < 2:
        notes.append(f"stated value 2D- + D+ = {2 + stated_out} is below the attainable {2 + mono_out}")
    irr = int(np.abs(ct.tournament.out_degrees() - ct.tournament.in_degrees()).max())
    if irr != i:
        notes.append(f"measured irregularity {irr} differs from the parameter i = {i}")
    return _checked("example3", {"k": k, "i": i}, ct, 0, claimed, notes, stated)


def example4() -> ConstructionResult:
    """The rainbow-free coloring of the quadratic-residue tournament on 11 vertices."""
    n = 11
    offsets = (1, 3, 4, 5, 9)
    adj = np.zeros((n, n), dtype=bool)
    colors = np.full((n, n), NO_COLOR, dtype=np.int64)
    idx = np.arange(n)
    for color, d in enumerate(offsets, start=1):
        adj[idx, (idx + d) % n] = True
        colors[idx, (idx + d) % n] = color
    ct = ColoredTournament(Tournament(adj), colors)
    claimed = {
        "n": 11,
        "irregularity": 0,
        "strongly_connected": True,
        "mono_in": 1,
        "mono_out": 1,
        "triangles": 55,
        "rainbow_total": 0,
    }
    return _checked("example4", {}, ct, None, claimed)


def blowup(base, k: int, inner: Tournament | None = None) -> ColoredTournament:
    """Replace every vertex by ``k`` copies.

    Arcs between copies of different vertices inherit direction and color
    from the base; the copies of one vertex form ``inner`` (by default the
    rotational tournament of order ``k``, which needs ``k`` odd) in a single
    fresh color, one fresh color per class. Passing ``inner`` explicitly
    allows even ``k`` at the cost of regularity.
    """
    if isinstance(base, ConstructionResult):
        base = base.instance
    if inner is None:
        if k < 1 or k % 2 == 0:
            raise EvenBlowupFactor(f"blow-up factor must be odd and >= 1 for a regular inner tournament, got {k}")
        inner_adj = _rotational_adj(k)
    else:
        if inner.n != k or k < 1:
            raise ParameterOutOfRange(f"inner tournament has order {inner.n}, blow-up factor is {k}")
        inner_adj = inner.adj
    n = base.n
    cls = np.repeat(np.arange(n), k)
    adj = base.adj[np.ix_(cls, cls)].copy()
    colors = base.colors[np.ix_(cls, cls)].copy()
    fresh = int(base.colors.max()) + 1 if n else 0
    for c in range(n):
        block = slice(c * k, (c + 1) * k)
        adj[block, block] = inner_adj
        colors[block, block] = np.where(inner_adj, fresh, NO_COLOR)
        fresh += 1
    return ColoredTournament(Tournament(adj), colors)


def example5(k: int) -> ConstructionResult:
    ct = blowup(example4().instance, k)
    claimed = {
        "n": 11 * k,
        "irregularity": 0,
        "strongly_connected": True,
        "mono_in": k,
        "rainbow_total": 0,
    }
    return _checked("example5", {"k": k}, ct, None, claimed)


def theorem2_margin(result: ConstructionResult) -> Fraction:
    """How far ``2D- + D+`` sits above the every-vertex threshold."""
    from .bounds import thm1plus_threshold

    meas = result.measured()
    return meas["mono_sum"] - thm1plus_threshold(meas["n"], meas["irregularity"])[0]
