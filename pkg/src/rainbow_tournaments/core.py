"""Tournaments, arc colorings and the line-oriented instance format.

A :class:`Tournament` stores its orientation as an ``n x n`` boolean
matrix ``adj`` with ``adj[u, v]`` true iff the arc ``u -> v`` is present.
A :class:`ColoredTournament` adds an integer matrix ``colors`` holding the
color of every present arc and ``-1`` everywhere else.

Both are immutable: the arrays are flagged read-only and every
"mutation" (:func:`reverse`, :func:`recolor`) returns a new value.

Instance text format::

    ct v1
    n 3
    arc 0 1 1
    arc 1 2 2
    arc 2 0 3

Lines starting with ``#`` are comments. Canonical output sorts the arc
lines by ``(tail, head)``.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .errors import (
    DuplicatePair,
    InstanceSyntaxError,
    MissingPair,
    NoSuchArc,
    SelfLoop,
    TournamentError,
    VertexOutOfRange,
)

NO_COLOR = -1
FORMAT_HEADER = "ct v1"


def _frozen(a):
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


class Tournament:
    """An orientation of the complete graph on vertices ``0..n-1``."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise TournamentError(f"adjacency must be square, got shape {adj.shape}")
        n = adj.shape[0]
        if n and adj.diagonal().any():
            v = int(np.flatnonzero(adj.diagonal())[0])
            raise SelfLoop(f"self-loop at vertex {v}")
        both = adj & adj.T
        if both.any():
            u, v = map(int, np.argwhere(both)[0])
            raise DuplicatePair(f"both arcs {u}->{v} and {v}->{u} present")
        missing = ~(adj | adj.T)
        np.fill_diagonal(missing, False)
        if missing.any():
            u, v = map(int, np.argwhere(missing)[0])
            raise MissingPair(f"pair {{{u}, {v}}} has no arc")
        object.__setattr__(self, "adj", _frozen(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Tournament is immutable")

    def __reduce__(self):
        return Tournament, (np.array(self.adj),)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
        return build(n, ((u, v, 0) for u, v in arcs)).tournament

    @classmethod
    def transitive(cls, n: int) -> Tournament:
        """``u -> v`` for every ``u < v``."""
        return cls(np.triu(np.ones((n, n), dtype=bool), k=1))

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def out_degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return self.adj.sum(axis=0)

    def out_neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[v])

    def in_neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[:, v])

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by ``(tail, head)``."""
        return [(int(u), int(v)) for u, v in np.argwhere(self.adj)]

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self):
        return f"Tournament(n={self.n})"


class ColoredTournament:
    """A tournament together with a color for each of its arcs."""

    __slots__ = ("tournament", "colors")

    def __init__(self, tournament: Tournament, colors):
        colors = np.asarray(colors, dtype=np.int64)
        if colors.shape != tournament.adj.shape:
            raise TournamentError("color matrix shape does not match the tournament")
        if (colors[tournament.adj] < 0).any():
            u, v = map(int, np.argwhere(tournament.adj & (colors < 0))[0])
            raise TournamentError(f"arc {u}->{v} has no (or a negative) color")
        if (colors[~tournament.adj] != NO_COLOR).any():
            u, v = map(int, np.argwhere(~tournament.adj & (colors != NO_COLOR))[0])
            raise NoSuchArc(f"color given for absent arc {u}->{v}")
        object.__setattr__(self, "tournament", tournament)
        object.__setattr__(self, "colors", _frozen(colors))

    def __setattr__(self, name, value):
        raise AttributeError("ColoredTournament is immutable")

    def __reduce__(self):
        return ColoredTournament, (self.tournament, np.array(self.colors))

    @property
    def n(self) -> int:
        return self.tournament.n

    @property
    def adj(self) -> np.ndarray:
        return self.tournament.adj

    def color(self, u: int, v: int) -> int:
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        if not self.tournament.adj[u, v]:
            raise NoSuchArc(f"no arc {u}->{v}")
        return int(self.colors[u, v])

    def arcs(self) -> list[tuple[int, int, int]]:
        """``(tail, head, color)`` triples sorted by ``(tail, head)``."""
        return [(u, v, int(self.colors[u, v])) for u, v in self.tournament.arcs()]

    def palette(self) -> list[int]:
        return sorted(int(c) for c in np.unique(self.colors[self.adj]))

    def __eq__(self, other):
        if not isinstance(other, ColoredTournament):
            return NotImplemented
        return self.tournament == other.tournament and np.array_equal(self.colors, other.colors)

    def __hash__(self):
        return hash((self.tournament, self.colors.tobytes()))

    def __repr__(self):
        return f"ColoredTournament(n={self.n}, colors={len(self.palette())})"


def as_tournament(obj) -> Tournament:
    """Accept either a Tournament or a ColoredTournament."""
    if isinstance(obj, ColoredTournament):
        return obj.tournament
    if isinstance(obj, Tournament):
        return obj
    raise TypeError(f"expected a tournament, got {type(obj).__name__}")


def _check_vertex(n, v):
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")


def build(n: int, arcs: Iterable[tuple[int, int, int]]) -> ColoredTournament:
    """Validate an arc list and return the colored tournament it describes.

    Raises DuplicatePair, MissingPair, SelfLoop or VertexOutOfRange.
    """
    if n < 0:
        raise TournamentError(f"negative vertex count {n}")
    adj = np.zeros((n, n), dtype=bool)
    colors = np.full((n, n), NO_COLOR, dtype=np.int64)
    for tail, head, color in arcs:
        tail, head, color = int(tail), int(head), int(color)
        _check_vertex(n, tail)
        _check_vertex(n, head)
        if tail == head:
            raise SelfLoop(f"self-loop at vertex {tail}")
        if adj[tail, head] or adj[head, tail]:
            raise DuplicatePair(f"pair {{{tail}, {head}}} listed more than once")
        if color < 0:
            raise TournamentError(f"arc {tail}->{head} has negative color {color}")
        adj[tail, head] = True
        colors[tail, head] = color
    return ColoredTournament(Tournament(adj), colors)


def color_distinct(t: Tournament, start: int = 0) -> ColoredTournament:
    """Give every arc its own color, ``start, start+1, ...`` in arc order."""
    colors = np.full(t.adj.shape, NO_COLOR, dtype=np.int64)
    colors[t.adj] = np.arange(start, start + int(t.adj.sum()))
    return ColoredTournament(t, colors)


def color_uniform(t: Tournament, color: int = 0) -> ColoredTournament:
    colors = np.where(t.adj, color, NO_COLOR)
    return ColoredTournament(t, colors)


def reverse(ct):
    """Reverse every arc, keeping its color. Accepts plain tournaments too."""
    if isinstance(ct, Tournament):
        return Tournament(ct.adj.T)
    return ColoredTournament(Tournament(ct.adj.T), ct.colors.T)


def recolor(ct: ColoredTournament, arc: tuple[int, int], color: int) -> ColoredTournament:
    u, v = arc
    ct.color(u, v)  # raises NoSuchArc / VertexOutOfRange
    if color < 0:
        raise TournamentError(f"negative color {color}")
    colors = ct.colors.copy()
    colors[u, v] = color
    return ColoredTournament(ct.tournament, colors)


def serialize(ct: ColoredTournament) -> str:
    lines = [FORMAT_HEADER, f"n {ct.n}"]
    lines.extend(f"arc {u} {v} {c}" for u, v, c in ct.arcs())
    return "\n".join(lines) + "\n"


def parse(text: str) -> ColoredTournament:
    n = None
    header_seen = False
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not header_seen:
            if fields != ["ct", "v1"]:
                raise InstanceSyntaxError(f"expected header {FORMAT_HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InstanceSyntaxError(f"expected 'n <N>', got {line!r}", lineno)
            n = _parse_int(fields[1], lineno)
            continue
        if len(fields) != 4 or fields[0] != "arc":
            raise InstanceSyntaxError(f"expected 'arc <tail> <head> <color>', got {line!r}", lineno)
        arcs.append(tuple(_parse_int(f, lineno) for f in fields[1:]))
    if not header_seen:
        raise InstanceSyntaxError("empty instance")
    if n is None:
        raise InstanceSyntaxError("missing 'n <N>' line")
    return build(n, arcs)


def _parse_int(token, lineno):
    if not token.isdigit():
        raise InstanceSyntaxError(f"expected a non-negative decimal integer, got {token!r}", lineno)
    return int(token)


def read_instance(path) -> ColoredTournament:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_instance(ct: ColoredTournament, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(ct))
