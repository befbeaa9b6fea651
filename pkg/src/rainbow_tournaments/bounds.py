"""Exact evaluation of the triangle bounds and per-instance verification.

All thresholds are :class:`fractions.Fraction` values; no decision is ever
taken in floating point. :func:`verify` evaluates every statement on a
concrete instance and reports, for each, whether its hypothesis holds and
whether its conclusion holds.

Statement keys used in reports:

``lemma1``      triangles through each vertex >= delta(v)(n - delta(v) - i)/2
``claim1``      triangles through each vertex >= the degree-free bound
``lemma2``      non-rainbow triangles through v <= D-(n-1) + D+ d+(v)
``lemma3``      total triangles >= the degree-square bound
``lemma4``      non-rainbow triangles <= mono 2-paths <= n(n-1)D-/2
``theorem1``    rainbow triangles through v >= lemma1 - lemma2
``theorem2``    small 2D- + D+ puts every vertex on a rainbow triangle
``theorem3``    small D- forces a rainbow triangle
``regular_strong``  regular tournaments are strongly connected

The per-vertex statements are reported once, at the vertex with the least
slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import ColoredTournament, as_tournament, reverse
from .errors import VertexOutOfRange
from .metrics import degree_profile, is_strongly_connected, mono_degrees
from .triangles import census

LOWER = "lower"
UPPER = "upper"


def _vertex(n, v):
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")


def lemma1_bound(t, v: int) -> Fraction:
    t = as_tournament(t)
    _vertex(t.n, v)
    prof = degree_profile(t)
    d = prof.min_degree[v]
    return Fraction(d * (t.n - d - prof.irregularity), 2)


def claim1_bound(n: int, i: int) -> Fraction:
    if i == 1:
        return Fraction(n * (n - 2), 8)
    return Fraction((n - 1) * (n + 1 - 2 * i), 8)


def lemma2_upper(ct: ColoredTournament, v: int) -> Fraction:
    _vertex(ct.n, v)
    mono = mono_degrees(ct)
    dout = int(ct.tournament.out_degrees()[v])
    return Fraction(mono.max_in * (ct.n - 1) + mono.max_out * dout)


def lemma3_lower(n: int, i: int) -> Fraction:
    if n % 2:
        return Fraction((n - 1) * (n * n + n - 3 * i * i), 24)
    return Fraction(n * (n * n - 1 - 3 * i * i), 24)


def lemma4_upper(n: int, max_in: int) -> Fraction:
    return Fraction(n * (n - 1) * max_in, 2)


def thm1_bound(ct: ColoredTournament, v: int) -> Fraction:
    """Guaranteed rainbow triangles through ``v`` (may be negative)."""
    return lemma1_bound(ct, v) - lemma2_upper(ct, v)


def thm1plus_threshold(n: int, i: int) -> tuple[Fraction, str]:
    """Cap on ``2 D- + D+`` and which branch produced it.

    The first branch applies for ``1 <= i < (n+3)/3``, tested as ``3i < n+3``.
    """
    if 1 <= i and 3 * i < n + 3:
        return Fraction((n - 1 - i) * (n + 1 - i), 4 * (n - 1 + i)), "irregular"
    return Fraction(n - 2 * i, 4), "otherwise"


def thm2_threshold(n: int, i: int) -> tuple[Fraction, str]:
    """Strict upper limit on ``D-`` forcing a rainbow triangle."""
    if n % 2:
        return Fraction(n * n + n - 3 * i * i, 12 * n), "odd"
    return Fraction(n * n - 1 - 3 * i * i, 12 * (n - 1)), "even"


@dataclass
class BoundRow:
    statement: str
    kind: str
    hypothesis: bool
    reason: str
    bound: Fraction | None
    actual: int
    holds: bool
    vertex: int | None = None
    notes: list = field(default_factory=list)
    fixed_guarantee: int | None = None

    @property
    def guarantee(self) -> int | None:
        if self.fixed_guarantee is not None:
            return self.fixed_guarantee
        if self.bound is None:
            return None
        return math.ceil(self.bound) if self.kind == LOWER else math.floor(self.bound)

    @property
    def satisfied(self) -> bool | None:
        """The conclusion, reported only where the hypothesis holds."""
        return self.holds if self.hypothesis else None

    def as_dict(self) -> dict:
        return {
            "statement": self.statement,
            "kind": self.kind,
            "hypothesis": self.hypothesis,
            "reason": self.reason,
            "bound_num": None if self.bound is None else self.bound.numerator,
            "bound_den": None if self.bound is None else self.bound.denominator,
            "guarantee": self.guarantee,
            "actual": self.actual,
            "satisfied": self.satisfied,
            "holds": self.holds,
            "vertex": self.vertex,
            "notes": list(self.notes),
        }


@dataclass
class BoundReport:
    n: int
    irregularity: int
    max_in: int
    max_out: int
    strongly_connected: bool
    reversed: bool
    rows: list

    def row(self, statement: str) -> BoundRow:
        for r in self.rows:
            if r.statement == statement:
                return r
        raise KeyError(statement)

    @property
    def ok(self) -> bool:
        return all(r.satisfied is not False for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "irregularity": self.irregularity,
            "max_in": self.max_in,
            "max_out": self.max_out,
            "strongly_connected": self.strongly_connected,
            "reversed": self.reversed,
            "ok": self.ok,
            "rows": [r.as_dict() for r in self.rows],
        }


def _worst_lower(values, bounds):
    """Vertex with the least ``value - bound``; ties go to the smallest vertex."""
    v = min(range(len(values)), key=lambda x: (values[x] - bounds[x], x))
    return v, all(val >= bd for val, bd in zip(values, bounds))


def _worst_upper(values, bounds):
    v = min(range(len(values)), key=lambda x: (bounds[x] - values[x], x))
    return v, all(val <= bd for val, bd in zip(values, bounds))


def verify(ct: ColoredTournament) -> BoundReport:
    """Check every statement on ``ct``.

    If ``D- > D+`` the instance is reversed first (the statements assume
    ``D- <= D+``) and the report is flagged ``reversed``.
    """
    mono = mono_degrees(ct)
    flipped = mono.max_in > mono.max_out
    if flipped:
        ct = reverse(ct)
        mono = mono_degrees(ct)
    n = ct.n
    prof = degree_profile(ct)
    i = prof.irregularity
    strong = n >= 1 and is_strongly_connected(ct)
    dmin, dmout = mono.max_in, mono.max_out
    report = BoundReport(n, i, dmin, dmout, strong, flipped, [])
    if n < 3:
        # no triangles; every statement about them is vacuous
        report.rows.append(
            BoundRow("regular_strong", LOWER, i == 0 and n >= 1, "regular" if i == 0 else "not regular",
                     None, int(strong), strong or i != 0, notes=["degenerate order"], fixed_guarantee=1)
        )
        return report

    cen = census(ct)
    why_strong = "strongly connected" if strong else "not strongly connected"
    dout = prof.out_degree

    # lemma1
    l1 = [Fraction(d * (n - d - i), 2) for d in prof.min_degree]
    v, ok = _worst_lower(cen.through, l1)
    report.rows.append(BoundRow("lemma1", LOWER, strong, why_strong, l1[v], cen.through[v], ok, v))

    # claim 1
    c1 = claim1_bound(n, i)
    v, ok = _worst_lower(cen.through, [c1] * n)
    report.rows.append(BoundRow("claim1", LOWER, strong, why_strong, c1, cen.through[v], ok, v))

    # lemma2
    l2 = [Fraction(dmin * (n - 1) + dmout * dout[v]) for v in range(n)]
    v, ok = _worst_upper(cen.nonrainbow_through, l2)
    chain = all(
        cen.nonrainbow_through[x] <= cen.t1[x] + cen.t2[x] + cen.t3[x]
        and cen.t1[x] <= dmout * dout[x]
        and cen.t2[x] <= dmin * prof.in_degree[x]
        and cen.t3[x] <= dmin * dout[x]
        for x in range(n)
    )
    row = BoundRow("lemma2", UPPER, strong, why_strong, l2[v], cen.nonrainbow_through[v], ok and chain, v)
    row.notes.append(f"t1+t2+t3 at vertex {v}: {cen.t1[v] + cen.t2[v] + cen.t3[v]}")
    if not chain:
        row.notes.append("intermediate t1/t2/t3 chain violated")
    report.rows.append(row)

    # lemma3
    l3 = lemma3_lower(n, i)
    report.rows.append(BoundRow("lemma3", LOWER, strong, why_strong, l3, cen.total, cen.total >= l3))

    # lemma4
    l4 = lemma4_upper(n, dmin)
    ok = cen.nonrainbow <= cen.mono_p2_total <= l4
    row = BoundRow("lemma4", UPPER, strong, why_strong, l4, cen.nonrainbow, ok)
    row.notes.append(f"monochromatic 2-paths: {cen.mono_p2_total}")
    report.rows.append(row)

    # theorem1
    t1 = [l1[x] - l2[x] for x in range(n)]
    v, ok = _worst_lower(cen.rainbow_through, t1)
    row = BoundRow("theorem1", LOWER, strong, why_strong, t1[v], cen.rainbow_through[v], ok, v)
    if t1[v] <= 0:
        row.notes.append("vacuous bound")
    report.rows.append(row)

    # theorem2: every vertex on a rainbow triangle
    thr, branch = thm1plus_threshold(n, i)
    s = 2 * dmin + dmout
    hyp = strong and s <= thr
    reason = f"{why_strong}; 2D- + D+ = {s} {'<=' if s <= thr else '>'} {thr} ({branch} branch)"
    least = min(cen.rainbow_through)
    v = cen.rainbow_through.index(least)
    row = BoundRow("theorem2", LOWER, hyp, reason, thr, least, least >= 1, v, fixed_guarantee=1)
    row.notes.append("bound is the cap on 2D- + D+; actual is the fewest rainbow triangles at a vertex")
    report.rows.append(row)

    # theorem3: some rainbow triangle
    thr, branch = thm2_threshold(n, i)
    hyp = strong and dmin < thr
    reason = f"{why_strong}; D- = {dmin} {'<' if dmin < thr else '>='} {thr} ({branch} n)"
    row = BoundRow("theorem3", LOWER, hyp, reason, thr, cen.rainbow, cen.rainbow >= 1, fixed_guarantee=1)
    row.notes.append("bound is the strict cap on D-; actual is the rainbow triangle count")
    report.rows.append(row)

    report.rows.append(
        BoundRow("regular_strong", LOWER, i == 0, "regular" if i == 0 else "not regular",
                 None, int(strong), strong or i != 0, fixed_guarantee=1)
    )
    return report
