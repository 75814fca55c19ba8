"""Exception types raised by the workbench services."""


class WorkbenchError(Exception):
    """Base class for every error the workbench raises on purpose"""


class InvalidInput(WorkbenchError, ValueError):
    """An argument is outside the domain an operation accepts"""


class LoopedGraphError(InvalidInput):
    """A graph with self-loops was passed to a loop-free operation"""


class ResourceLimitExceeded(WorkbenchError):
    """A construction or search would exceed a configured cap"""

    def __init__(self, message: str, limit: int = 0):
        super().__init__(message)
        self.limit = limit


class SearchBudgetExceeded(ResourceLimitExceeded):
    """An exponential search expanded more nodes than its budget allows"""


class UnknownClaim(WorkbenchError, KeyError):
    """No claim is registered under the requested id"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown claim"
