"""Exception hierarchy.

Everything raised on purpose by the library derives from
:class:`TournamentError`, which is a :class:`ValueError`.
"""


class TournamentError(ValueError):
    pass


# instance validation
class DuplicatePair(TournamentError):
    pass


class MissingPair(TournamentError):
    pass


class SelfLoop(TournamentError):
    pass


class VertexOutOfRange(TournamentError):
    pass


class NoSuchArc(TournamentError):
    pass


class InstanceSyntaxError(TournamentError):
    """Malformed instance text. ``lineno`` is 1-based (0 when unknown)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


# constructions
class ConstructionError(TournamentError):
    pass


class EvenOrder(ConstructionError):
    pass


class OddOrder(ConstructionError):
    pass


class OddIrregularityParameter(ConstructionError):
    pass


class KTooSmall(ConstructionError):
    pass


class ParameterOutOfRange(ConstructionError):
    pass


class ParityViolation(ConstructionError):
    pass


class RangeViolation(ConstructionError):
    pass


class EvenBlowupFactor(ConstructionError):
    pass


class ConstructionMismatch(ConstructionError):
    """A generated instance disagrees with the values recorded for it."""


# search
class SearchSpaceTooLarge(TournamentError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"search space has {size} colorings, cap is {cap}")
