"""
Result object shared by every command.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


@dataclass
class CommandResult:
    """Outcome of one command or batch item."""

    success: bool
    payload: Any
    metrics: Dict[str, Any] = field(default_factory=dict)
    execution_time: float = 0.0
    error_message: Optional[str] = None
    warnings: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    @classmethod
    def failure(cls, message: str, execution_time: float = 0.0) -> "CommandResult":
        return cls(
            success=False,
            payload={"error": message},
            execution_time=execution_time,
            error_message=message,
            exit_code=EXIT_INPUT_ERROR,
        )

    def to_json(self) -> Dict[str, Any]:
        data = {"success": self.success, "result": self.payload}
        if self.error_message:
            data["error"] = self.error_message
        if self.warnings:
            data["warnings"] = self.warnings
        return data
