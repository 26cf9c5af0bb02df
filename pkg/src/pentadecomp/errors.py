"""Exception types shared across the toolkit."""


class PentadecompError(Exception):
    """Base class for all toolkit errors."""


class DomainError(PentadecompError, ValueError):
    """An argument is outside the operation's mathematical domain."""


class RangeOverflowError(PentadecompError, OverflowError):
    """An input or result exceeds the supported integer range (10**15 inputs)."""


class MemoryBudgetError(PentadecompError, MemoryError):
    """A table or bit array would exceed the configured memory budget."""


class SearchCapExceededError(PentadecompError):
    """A configured work budget was exhausted before the search finished."""


class HypothesisViolationError(PentadecompError):
    """A caller-side precondition (lemma hypothesis) does not hold."""


class PredicateViolationError(PentadecompError):
    """A representability predicate promised a solution the search did not find.

    This should never happen; it indicates a transcription error in an
    exceptional-set predicate and is reported with full context.
    """


class BoundViolationError(PentadecompError):
    """A shifted witness index escaped the interval the lemma guarantees."""


class IdentityViolationError(PentadecompError):
    """A final decomposition identity failed its exact re-check."""


class NoValidBError(PentadecompError):
    """No shift parameter B satisfied the interval and congruence system."""


class NotRepresentableError(PentadecompError):
    """Exhaustive search found no witness; a counterexample to a theorem."""


class UnsupportedTripleError(PentadecompError, ValueError):
    """The coefficient triple has no constructive path."""
