"""Exception types shared across the package."""


class TeamCraftError(Exception):
    """Base class for all teamcraft errors."""


class InvalidId(TeamCraftError):
    """A participant or team id is out of range."""


class InvalidInput(TeamCraftError):
    """A value violates a documented precondition."""


class InconsistentInput(TeamCraftError):
    """Two inputs that must agree (e.g. assembly and role vector) do not."""


class Infeasible(TeamCraftError):
    """No valid team construction exists for the given instance.

    ``rule`` names the violated construction rule (1-4) when one applies.
    """

    def __init__(self, message: str, rule: int | None = None):
        super().__init__(message)
        self.rule = rule


class Unsupported(TeamCraftError):
    """The operation is only defined for a different configuration."""


class BoundExceeded(TeamCraftError):
    """Problem size exceeds the configured exhaustive-search bound."""


class InvalidCode(TeamCraftError):
    """A compact assembly encoding is out of range."""


class InvalidConfig(TeamCraftError):
    """A configuration value is unusable."""


class InvalidSwap(TeamCraftError):
    """A role swap between the given participants is not allowed."""


class ParseError(TeamCraftError):
    """A score file cell could not be parsed.

    ``row`` and ``col`` are 1-based positions in the data section when known.
    """

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


class MissingRole(TeamCraftError):
    """A configured role column is absent from the input file."""


class IoError(TeamCraftError):
    """A solution or session file could not be written or read."""
