"""Exception hierarchy for chordflip."""


class ChordflipError(ValueError):
    """Base class for invalid input to any chordflip operation."""


class OddLength(ChordflipError):
    pass


class BadMultiplicity(ChordflipError):
    pass


class UnknownLabel(ChordflipError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotBipartite(ChordflipError):
    """The complement of the interlacement graph contains an odd cycle."""


class OddClass(ChordflipError):
    pass


class EmptyInput(ChordflipError):
    pass


class BadParity(ChordflipError):
    pass


class TooLarge(ChordflipError):
    pass


class TransversalViolation(RuntimeError):
    """A bisecting window failed to cut every chord. Always a bug."""
