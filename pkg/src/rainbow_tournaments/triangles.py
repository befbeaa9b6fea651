"""Directed triangles: enumeration, closed-form counts and colored censuses.

A triangle ``(a, b, c)`` is the directed 3-cycle ``a -> b -> c -> a``,
always written with its smallest vertex first. Seen from one of its
vertices ``v`` it reads ``v -> w -> u -> v``; the per-vertex quantities
``t1, t2, t3`` count the triangles through ``v`` in which, respectively,
``C(vw) = C(wu)``, ``C(wu) = C(uv)`` and ``C(uv) = C(vw)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import ColoredTournament, as_tournament
from .errors import VertexOutOfRange


def triangle_array(t) -> np.ndarray:
    """All directed triangles as a ``(k, 3)`` int array in lexicographic order."""
    adj = as_tournament(t).adj
    n = adj.shape[0]
    parts = []
    for a in range(n - 2):
        w = np.flatnonzero(adj[a, a + 1:]) + a + 1
        u = np.flatnonzero(adj[a + 1:, a]) + a + 1
        if not len(w) or not len(u):
            continue
        hits = np.argwhere(adj[np.ix_(w, u)])
        if len(hits):
            block = np.empty((len(hits), 3), dtype=np.int64)
            block[:, 0] = a
            block[:, 1] = w[hits[:, 0]]
            block[:, 2] = u[hits[:, 1]]
            parts.append(block)
    if not parts:
        return np.empty((0, 3), dtype=np.int64)
    tri = np.concatenate(parts)
    order = np.lexsort((tri[:, 2], tri[:, 1], tri[:, 0]))
    return tri[order]


def enumerate_triangles(t) -> list[tuple[int, int, int]]:
    return [tuple(map(int, row)) for row in triangle_array(t)]


def triangle_count(t) -> int:
    """Number of directed triangles from the out-degree sequence alone."""
    t = as_tournament(t)
    n = t.n
    sq = sum(int(d) ** 2 for d in t.out_degrees())
    num = n * (n - 1) * (2 * n - 1) - 6 * sq
    assert num % 12 == 0, "out-degree sequence is not a tournament score sequence"
    return num // 12


def triangles_through(t, v: int) -> int:
    """Triangles containing ``v``: the arcs from N+(v) to N-(v)."""
    t = as_tournament(t)
    if not 0 <= v < t.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{t.n - 1}")
    return int(t.adj[np.ix_(t.out_neighbors(v), t.in_neighbors(v))].sum())


def triangles_through_all(t) -> tuple[int, ...]:
    t = as_tournament(t)
    return tuple(triangles_through(t, v) for v in range(t.n))


def is_rainbow(c1, c2, c3):
    return (c1 != c2) & (c2 != c3) & (c3 != c1)


def mono_p2(ct: ColoredTournament) -> tuple[int, tuple[int, ...]]:
    """Monochromatic directed 2-paths: the total and the count per center."""
    centered = []
    for v in range(ct.n):
        cin = ct.colors[:, v]
        cout = ct.colors[v, :]
        cin_vals, cin_counts = np.unique(cin[cin >= 0], return_counts=True)
        cout_vals, cout_counts = np.unique(cout[cout >= 0], return_counts=True)
        _, i, j = np.intersect1d(cin_vals, cout_vals, assume_unique=True, return_indices=True)
        centered.append(int((cin_counts[i] * cout_counts[j]).sum()))
    return sum(centered), tuple(centered)


@dataclass(frozen=True)
class TriangleCensus:
    total: int
    rainbow: int
    nonrainbow: int
    through: tuple[int, ...]
    rainbow_through: tuple[int, ...]
    nonrainbow_through: tuple[int, ...]
    t1: tuple[int, ...]
    t2: tuple[int, ...]
    t3: tuple[int, ...]
    mono_p2_total: int
    mono_p2_centered: tuple[int, ...]

    def as_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}


def census(ct: ColoredTournament) -> TriangleCensus:
    n = ct.n
    tri = triangle_array(ct)
    a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
    col = ct.colors
    c1, c2, c3 = col[a, b], col[b, c], col[c, a]
    rainbow = is_rainbow(c1, c2, c3)
    e12 = (c1 == c2).astype(np.int64)
    e23 = (c2 == c3).astype(np.int64)
    e31 = (c3 == c1).astype(np.int64)

    def per_vertex(*pairs):
        acc = np.zeros(n, dtype=np.int64)
        for verts, weights in pairs:
            np.add.at(acc, verts, weights)
        return tuple(map(int, acc))

    ones = np.ones(len(tri), dtype=np.int64)
    rb = rainbow.astype(np.int64)
    nr = 1 - rb
    p2_total, p2_centered = mono_p2(ct)
    return TriangleCensus(
        total=len(tri),
        rainbow=int(rb.sum()),
        nonrainbow=int(nr.sum()),
        through=per_vertex((a, ones), (b, ones), (c, ones)),
        rainbow_through=per_vertex((a, rb), (b, rb), (c, rb)),
        nonrainbow_through=per_vertex((a, nr), (b, nr), (c, nr)),
        t1=per_vertex((a, e12), (b, e23), (c, e31)),
        t2=per_vertex((a, e23), (b, e31), (c, e12)),
        t3=per_vertex((a, e31), (b, e12), (c, e23)),
        mono_p2_total=p2_total,
        mono_p2_centered=p2_centered,
    )
