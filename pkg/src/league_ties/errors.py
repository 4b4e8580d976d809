"""Exception types shared across the package."""


class LeagueTiesError(Exception):
    """Base class for all package-specific failures."""


class SizeRefusedError(LeagueTiesError):
    """A requested league size is outside the supported (or sane) range."""


class CheckpointError(LeagueTiesError):
    """A checkpoint ledger cannot be used: wrong header, corrupt body, bad path."""


class IncompleteTableError(LeagueTiesError):
    """A score table is missing one or more off-diagonal results."""
