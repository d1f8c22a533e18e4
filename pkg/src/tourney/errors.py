"""Exception types raised by the public API."""


class TournamentError(Exception):
    """Base class for all library errors."""


class MissingPair(TournamentError):
    """An arc set leaves some vertex pair unoriented."""


class ConflictingPair(TournamentError):
    """An arc set orients some vertex pair both ways."""


class SelfArc(TournamentError):
    """An arc set contains a loop (i, i)."""


class VertexOutOfRange(TournamentError):
    """A vertex label falls outside 0..n-1."""


class NotIndecomposable(TournamentError):
    """Operation requires an indecomposable tournament."""


class CoreNotIndecomposable(TournamentError):
    """Operation requires the induced core T[X] to be indecomposable."""


class CoreTooSmall(TournamentError):
    """Operation requires |X| >= 3."""


class NotTransitive(TournamentError):
    """Operation requires a transitive tournament."""


class BadSize(TournamentError):
    """Generator size parameter outside its family's size set."""


class BadParameters(TournamentError):
    """Generator parameters violate their stated constraints."""


class InfeasibleSpec(TournamentError):
    """No tournament realizes the requested family description."""


class AmbiguousSpec(TournamentError):
    """More than one isomorphy class realizes the requested family description."""


class NotFamilyT(TournamentError):
    """Operation requires a family-T member (indecomposable, |W5(T)| = n - 2)."""


class NoEligibleVertex(TournamentError):
    """No vertex x in W5(T) has T[sigma(T) + {x}] a 3-cycle."""


class BudgetExceeded(TournamentError):
    """Requested work is outside the enumeration budget."""
