"""
Batch runner for newtonpoly commands.

Runs one operation over many inputs, turning per-item failures into
CommandResult records instead of aborting the batch.
"""

import logging
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from joblib import Parallel, delayed

from newtonpoly.config.settings import NewtonPolyConfig
from newtonpoly.core.errors import NewtonPolyError
from newtonpoly.core.results import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, CommandResult


def run_item(name: str, operation: Callable[[str], Any], verdict: Optional[Callable[[Any], bool]] = None) -> CommandResult:
    """
    Apply ``operation`` to one input and wrap the outcome.

    Args:
        name: Input identifier (file name or literal)
        operation: Callable returning an object with ``to_json``
        verdict: Optional predicate; False marks a negative result (exit 1)
    """
    start_time = time.time()
    try:
        value = operation(name)
    except NewtonPolyError as e:
        return CommandResult.failure(f"{name}: {e}", time.time() - start_time)

    positive = verdict(value) if verdict is not None else True
    return CommandResult(
        success=True,
        payload=value.to_json(),
        metrics={"input": name},
        execution_time=time.time() - start_time,
        exit_code=EXIT_OK if positive else EXIT_NEGATIVE,
    )


class BatchRunner:
    """
    Runs a command over several inputs, optionally in parallel.

    Args:
        config: newtonpoly configuration
        logger: Optional logger instance
    """

    def __init__(self, config: NewtonPolyConfig, logger: Optional[logging.Logger] = None):
        self.config = config
        self.logger = logger or logging.getLogger(self.__class__.__name__)

    def run(
        self,
        inputs: Sequence[str],
        operation: Callable[[str], Any],
        verdict: Optional[Callable[[Any], bool]] = None,
        n_jobs: Optional[int] = None,
    ) -> Dict[str, CommandResult]:
        """
        Run ``operation`` over every input.

        Returns:
            Results keyed by input, in input order
        """
        n_jobs = n_jobs or self.config.enumeration.n_jobs
        self.logger.info(f"Running {len(inputs)} inputs with n_jobs={n_jobs}")
        if n_jobs == 1 or len(inputs) < 2:
            results = [run_item(name, operation, verdict) for name in inputs]
        else:
            results = Parallel(n_jobs=n_jobs)(delayed(run_item)(name, operation, verdict) for name in inputs)

        for name, result in zip(inputs, results):
            if not result.success:
                self.logger.error(result.error_message)
            elif result.exit_code == EXIT_NEGATIVE:
                self.logger.warning(f"{name}: negative verdict")
        return dict(zip(inputs, results))

    @staticmethod
    def exit_code(results: Dict[str, CommandResult]) -> int:
        """Worst exit code over the batch: input errors outrank negative verdicts."""
        codes = [r.exit_code for r in results.values()] or [EXIT_OK]
        if EXIT_INPUT_ERROR in codes:
            return EXIT_INPUT_ERROR
        return max(codes)

    def get_batch_summary(self, results: Dict[str, CommandResult]) -> Dict[str, Any]:
        """Counts and timing across a batch."""
        total_time = sum(r.execution_time for r in results.values())
        return {
            "total_inputs": len(results),
            "successful": sum(r.success for r in results.values()),
            "failed": sum(not r.success for r in results.values()),
            "negative": sum(r.exit_code == EXIT_NEGATIVE for r in results.values()),
            "total_execution_time": total_time,
            "average_execution_time": total_time / len(results) if results else 0.0,
        }
