"""
Exception types shared across newtonpoly.

Everything derives from ValueError so callers that only care about
"bad input" can keep catching the builtin.
"""


class NewtonPolyError(ValueError):
    """Base class for newtonpoly precondition failures."""


class InvalidInputError(NewtonPolyError):
    """Malformed polygon, loop or polynomial input."""


class NotApplicableError(NewtonPolyError):
    """Operation called outside of its domain (e.g. genus-0 input to is_maximal)."""
