"""Domain errors. Everything the solver raises on purpose derives from SolverError."""

from typing import Optional


class SolverError(Exception):
    """Base class for all solver, encoding and protocol errors"""


# Graph instances

class GraphParseError(SolverError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class GraphValidationError(SolverError):
    pass


class InvalidParameterError(SolverError, ValueError):
    pass


class InstanceTooLargeError(SolverError):
    pass


# Tree encoding

class NotATreeError(SolverError):
    pass


class NotSpanningError(SolverError):
    pass


class InvalidEncodingError(SolverError):
    pass


# Operators

class ConstructionFailedError(SolverError):
    pass


class StaleMoveError(SolverError):
    pass


# Distributed mode

class ProtocolError(SolverError):
    pass


class SatelliteLostError(SolverError):
    pass


class CentralLostError(SolverError):
    pass


class GraphChecksumMismatchError(SolverError):
    pass


class ConnectFailedError(SolverError):
    pass


class TransportTimeoutError(SolverError):
    pass


# Harness

class VerificationFailedError(SolverError):
    pass
