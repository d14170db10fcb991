"""Exception hierarchy shared across the package."""


class GraphError(Exception):
    """Base class for graph construction and I/O problems."""


class EdgeListParseError(GraphError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_no: int = 0):
        super().__init__(message)
        self.line_no = line_no


class ValidationError(GraphError):
    """Structurally invalid input: self-loop, bad vertex id, disconnected graph."""


class GenerationError(GraphError):
    """A random generator exhausted its retry budget."""


class AlgorithmError(Exception):
    """Internal invariant violated; unreachable on valid inputs."""
