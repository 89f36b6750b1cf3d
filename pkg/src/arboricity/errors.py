"""Exception types shared across the library.

The CLI maps these onto its exit-code contract: input problems exit with 2,
structural/precondition problems with 3, resource caps with 4.
"""


class ArboricityError(Exception):
    """Base class for all library errors."""


class GraphInputError(ArboricityError, ValueError):
    """Malformed input: unknown identities, bad values, empty where forbidden."""


class DisconnectedGraphError(ArboricityError):
    """An operation that requires a connected graph received a disconnected one."""


class EmptyCoreError(ArboricityError):
    """A game-theoretic precondition failed: the core of the game is empty."""


class ResourceLimitError(ArboricityError):
    """An enumeration cap was exceeded."""


class InternalInvariantError(ArboricityError):
    """An internal consistency check failed; indicates a bug, not bad input."""
