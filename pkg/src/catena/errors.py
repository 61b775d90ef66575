"""Exception hierarchy shared by every catena module."""


class CatenaError(Exception):
    """Base class for all errors raised by catena."""


# lattice construction and queries
class CycleDetected(CatenaError):
    pass


class NotALattice(CatenaError):
    pass


class RedundantCover(CatenaError):
    pass


class NotComparable(CatenaError):
    pass


class SizeLimitExceeded(CatenaError):
    pass


# rings and extensions
class TooLarge(CatenaError):
    pass


class NotIrreducible(CatenaError):
    pass


class NotARing(CatenaError):
    """A table-backed structure violates a commutative ring axiom."""


class NotAModule(CatenaError):
    pass


class NotAnIdeal(CatenaError):
    pass


class NotMaximal(CatenaError):
    pass


class NotAnEmbedding(CatenaError):
    pass


# extension analysis
class NotMinimal(CatenaError):
    pass


class NotConductorMaximal(CatenaError):
    """The conductor of a cover edge is not maximal in the lower ring.

    This contradicts the structure theorem for finite minimal extensions and
    therefore signals a bug in the tables or in the classifier.
    """


class InconsistentCharacterization(CatenaError):
    pass


class HypothesisNotMet(CatenaError):
    pass


class TypePatternMismatch(CatenaError):
    pass


# galois side
class NotPrime(CatenaError):
    pass


# input handling
class ParseError(CatenaError):
    pass


class SpecError(CatenaError):
    pass
