"""Exception types raised across the package.

Every error the library signals deliberately derives from :class:`EonSimError`,
so callers can catch the whole family with one clause while tests and
algorithms can still distinguish individual failure modes.
"""


class EonSimError(Exception):
    """Base class for every error raised by this package."""


# -- slot grids and topology --------------------------------------------------

class OutOfBoundsError(EonSimError):
    """A slot range falls outside a link's grid."""


class AlreadyOccupiedError(EonSimError):
    """Attempt to occupy a slot that is already taken."""


class NotOccupiedError(EonSimError):
    """Attempt to release a slot that is already free (double release)."""


class NoSuchLinkError(EonSimError):
    """No directed link exists for the requested endpoints or id."""


class HeterogeneousSlotCountsError(EonSimError):
    """Links of one route disagree on grid size; no joint grid exists."""


# -- traffic generation --------------------------------------------------------

class NonPositiveRateError(EonSimError):
    """An exponential rate parameter must be strictly positive."""


class DegenerateNetworkError(EonSimError):
    """Source/destination sampling needs at least two nodes."""


class EmptyCatalogError(EonSimError):
    """Bitrate sampling needs a non-empty catalog."""


# -- allocation context --------------------------------------------------------

class RouteIndexOutOfRangeError(EonSimError):
    """Route position outside the candidate list of the current request."""


class LinkIndexOutOfRangeError(EonSimError):
    """Link position outside the chosen route."""


class OptionIndexOutOfRangeError(EonSimError):
    """Modulation option position outside the sampled bitrate entry."""


class StagedOverlapError(EonSimError):
    """A staged slot range overlaps an earlier staged range on the same link."""


class AllocatorFaultError(EonSimError):
    """An allocation callback violated its contract; the run is aborted."""


class CommitConflictError(AllocatorFaultError):
    """A staged range is not free on the live grid at commit time."""


class AuditViolationError(AllocatorFaultError):
    """Strict audit rejected a committed allocation (contiguity/continuity)."""


# -- simulator lifecycle -------------------------------------------------------

class NoAllocatorSetError(EonSimError):
    """init() was called before an allocation callback was assigned."""


class AlreadyInitializedError(EonSimError):
    """The simulator accepts no changes (or second init) after init()."""


class NotInitializedError(EonSimError):
    """run() was called before init()."""


class InvalidConfigError(EonSimError):
    """The simulator configuration is unusable (empty network/routes/catalog)."""


class TimeInPastError(EonSimError):
    """An event was scheduled before the current simulation clock."""


class UnknownConnectionError(EonSimError):
    """A departure referenced a connection that is not live (internal bug)."""


class MissingRoutesError(EonSimError):
    """A request arrived for a node pair that has no candidate routes."""


# -- input documents -----------------------------------------------------------

class InputError(EonSimError):
    """Base class for problems with input documents."""


class MalformedDocumentError(InputError):
    """The document is not valid JSON."""


class SchemaError(InputError):
    """A required field is missing or has the wrong type; names the path."""


class ValidationError(InputError):
    """The document is well-formed but semantically inconsistent."""
