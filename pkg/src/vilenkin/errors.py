"""Error taxonomy shared across the package.

All errors derive from ValueError so callers that do not care about the
distinction can catch one type. The CLI maps ConfigurationError to exit
code 2 and everything else to exit code 1.
"""


class VilenkinError(ValueError):
    pass


class ValidationError(VilenkinError):
    """Structurally invalid value: bad radix entry, digit out of range."""


class ConfigurationError(VilenkinError):
    """Invalid or contradictory configuration (file, flags, environment)."""


class DomainError(VilenkinError):
    """Input outside an operation's mathematical domain."""


class UsageError(VilenkinError):
    """Operation called with arguments outside its admissible range."""
