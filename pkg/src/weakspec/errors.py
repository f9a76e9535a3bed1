"""Exception taxonomy shared across the package.

Each class maps to a distinct CLI exit code so batch callers can tell
bad usage from bad data from a diverged run.
"""


class WeakspecError(Exception):
    """Base class for package errors."""

    exit_code = 1


class ValidationError(WeakspecError):
    """Inputs violate a documented precondition (ranges, shapes, configs)."""

    exit_code = 3


class IntegrityError(WeakspecError):
    """Stored artifact is corrupt or inconsistent with its manifest."""

    exit_code = 4


class DivergenceError(WeakspecError):
    """Training produced a non-finite loss."""

    exit_code = 5

    def __init__(self, epoch: int, message: str = ""):
        self.epoch = epoch
        super().__init__(message or f"non-finite loss at epoch {epoch}")


class PipelineStepError(ValidationError):
    """Preprocessing failure, tagged with the step that raised it."""

    def __init__(self, step: str, message: str):
        self.step = step
        super().__init__(f"[{step}] {message}")
