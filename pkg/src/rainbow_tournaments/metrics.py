"""Degree statistics, monochromatic degrees and strong connectivity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import ColoredTournament, as_tournament
from .errors import VertexOutOfRange

REGULAR = "regular"
ALMOST_REGULAR = "almost-regular"
OTHER = "other"


@dataclass(frozen=True)
class DegreeProfile:
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]
    irregularity: int

    @property
    def n(self) -> int:
        return len(self.out_degree)

    @property
    def min_degree(self) -> tuple[int, ...]:
        """Per-vertex ``min(d+, d-)``."""
        return tuple(min(a, b) for a, b in zip(self.out_degree, self.in_degree))

    @property
    def regularity(self) -> str:
        if self.irregularity == 0:
            return REGULAR
        if self.irregularity == 1:
            return ALMOST_REGULAR
        return OTHER


@dataclass(frozen=True)
class MonoDegrees:
    """Monochromatic in/out degrees.

    ``in_counts[v]`` maps each color to the number of in-arcs of ``v`` with
    that color; ``out_counts`` likewise for out-arcs. ``max_in`` and
    ``max_out`` are the maxima over the vertices in ``subset``.
    """

    max_in: int
    max_out: int
    in_counts: tuple[dict, ...]
    out_counts: tuple[dict, ...]
    subset: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "max_in": self.max_in,
            "max_out": self.max_out,
            "subset": list(self.subset),
            "per_vertex": [
                {
                    "vertex": v,
                    "in": {str(c): k for c, k in sorted(self.in_counts[v].items())},
                    "out": {str(c): k for c, k in sorted(self.out_counts[v].items())},
                }
                for v in self.subset
            ],
        }


def degree_profile(t) -> DegreeProfile:
    t = as_tournament(t)
    dout = t.out_degrees()
    din = t.in_degrees()
    irregularity = int(np.abs(dout - din).max()) if t.n else 0
    return DegreeProfile(tuple(map(int, dout)), tuple(map(int, din)), irregularity)


def _color_counts(colors_row):
    vals, counts = np.unique(colors_row[colors_row >= 0], return_counts=True)
    return {int(c): int(k) for c, k in zip(vals, counts)}


def mono_degrees(ct: ColoredTournament, subset=None) -> MonoDegrees:
    n = ct.n
    if subset is None:
        subset = range(n)
    subset = tuple(sorted(set(int(v) for v in subset)))
    for v in subset:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")
    in_counts = tuple(_color_counts(ct.colors[:, v]) for v in range(n))
    out_counts = tuple(_color_counts(ct.colors[v, :]) for v in range(n))
    max_in = max((max(in_counts[v].values(), default=0) for v in subset), default=0)
    max_out = max((max(out_counts[v].values(), default=0) for v in subset), default=0)
    return MonoDegrees(max_in, max_out, in_counts, out_counts, subset)


def max_mono_in(ct: ColoredTournament) -> int:
    return mono_degrees(ct).max_in


def strong_components(t) -> int:
    """Number of strongly connected components."""
    t = as_tournament(t)
    if t.n == 0:
        return 0
    count, _ = connected_components(csr_matrix(t.adj), directed=True, connection="strong")
    return int(count)


def is_strongly_connected(t) -> bool:
    return strong_components(t) == 1
