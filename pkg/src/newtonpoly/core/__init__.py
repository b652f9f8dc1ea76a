from .errors import InvalidInputError, NewtonPolyError, NotApplicableError
from .results import CommandResult

__all__ = ["CommandResult", "InvalidInputError", "NewtonPolyError", "NotApplicableError"]
