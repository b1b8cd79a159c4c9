"""Exception hierarchy shared by the library and the CLI exit-code mapping."""

from __future__ import annotations


class SteinerError(Exception):
    """Base class for all library errors."""


class GraphFormatError(SteinerError, ValueError):
    """Edge-list text could not be turned into a valid graph.

    ``kind`` is a short machine-readable tag (``malformed``, ``duplicate-edge``,
    ``self-loop``, ``out-of-range``, ``edge-count``, ``disconnected``) and
    ``line`` the 1-based line number of the offending input line, if any.
    """

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{kind}: {message}")


class DisconnectedGraphError(GraphFormatError):
    def __init__(self, message: str = "graph is not connected", line: int | None = None):
        super().__init__("disconnected", message, line)


class InvalidParameterError(SteinerError, ValueError):
    """Bad family parameters, k out of range, malformed terminal sets."""


class CapacityError(SteinerError, RuntimeError):
    """A documented size guard refused the computation (never approximated)."""


class NotATreeError(InvalidParameterError):
    pass


class NonModularGraphError(InvalidParameterError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(
            "graph is not modular: triple %s has no common median vertex" % (triple,)
        )


class IdentityViolation(SteinerError, AssertionError):
    """An exact identity failed; always an implementation bug."""
