"""Exception types shared across the package."""


class WreathcloseError(Exception):
    """Base class for all errors raised by this package."""


class GroupTooLargeError(WreathcloseError):
    """Group enumeration would exceed the configured order cap."""


class CapExceededError(WreathcloseError):
    """A size cap (points, vertices, subsets, search space) was exceeded."""


class SearchTimeoutError(WreathcloseError):
    """An exhaustive search hit its time budget; no partial result is returned."""


class GroupSpecError(WreathcloseError):
    """Syntax error in the group-spec DSL.  Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
