"""Custom exceptions for the laminar graph toolkit."""

from src.core.enums import ExitCode


class LaminarException(Exception):
    """Base exception for laminar toolkit errors."""
    
    def __init__(self, message: str, exit_code: int = ExitCode.USAGE_ERROR):
        self.message = message
        self.exit_code = exit_code
        super().__init__(message)


class GraphConstructionException(LaminarException):
    """Exception raised when an edge list cannot form a simple graph."""


class GraphFormatException(LaminarException):
    """Exception raised when an edge-list file is malformed."""


class UnknownVertexException(LaminarException):
    """Exception raised when a vertex id or label is not in the graph."""


class DisconnectedGraphException(LaminarException):
    """Exception raised when a connected graph is required."""
    
    def __init__(self, message: str = "Graph is not connected"):
        super().__init__(message, ExitCode.USAGE_ERROR)


class PreconditionException(LaminarException):
    """Exception raised when an algorithm is called outside its contract."""


class GeneratorException(LaminarException):
    """Exception raised for an unknown or malformed generator name."""


class CnfParseException(LaminarException):
    """Exception raised when DIMACS CNF input is malformed."""


class ReductionException(LaminarException):
    """Exception raised when a reduction instance cannot be built."""


class ContractViolationException(LaminarException):
    """Exception raised when a result breaks a structural contract."""


class SizeGuardException(LaminarException):
    """Exception raised when an instance exceeds an exponential-time guard."""
    
    def __init__(self, message: str):
        super().__init__(message, ExitCode.SIZE_GUARD)


class EnumerationOverflowException(SizeGuardException):
    """Exception raised when diametral path enumeration exceeds its cap."""
