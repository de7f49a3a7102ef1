"""Exception hierarchy shared by the whole engine.

The CLI maps these onto process exit codes: domain/precondition/parse
problems are input errors (exit 2), exceeded enumeration bounds are a
refusal (exit 3), and a failed mathematical check is exit 1.
"""

from __future__ import annotations


class MultigroupError(Exception):
    """Base class for all engine errors."""


class DomainError(MultigroupError):
    """An element or operation identifier outside the structure it targets."""


class PreconditionError(MultigroupError):
    """An operation was invoked on input violating its stated precondition."""


class BoundExceeded(MultigroupError):
    """An exhaustive enumeration would exceed the configured size bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class ParseError(MultigroupError):
    """Instance text rejected, with a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DecompositionFailure(MultigroupError):
    """Coset family failed to partition the universe.

    Carries the offending pair of representatives and the overlap, so a
    report can show exactly where disjointness broke down.
    """

    def __init__(self, rep_a: str, rep_b: str, overlap: tuple[str, ...]):
        self.rep_a = rep_a
        self.rep_b = rep_b
        self.overlap = overlap
        super().__init__(
            f"cosets of {rep_a!r} and {rep_b!r} overlap on {{{', '.join(overlap)}}}"
        )


class InternalConsistencyError(MultigroupError):
    """A constructed object violated an invariant the engine must maintain."""
