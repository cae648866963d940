from __future__ import annotations


class TqftError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, message: str, *, code: str | None = None) -> None:
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"


class InvalidComplex(TqftError):
    code = "invalid-complex"


class NotASubcomplex(TqftError):
    code = "not-a-subcomplex"


class GluingError(TqftError):
    """Raised by gluing construction; ``code`` is one of ``not-disjoint``,
    ``not-isomorphism``, ``non-simplicial-quotient``, ``unknown-component``,
    ``not-composable``."""

    code = "gluing-error"


class NotAGroup(TqftError):
    code = "not-a-group"


class InvalidSurface(TqftError):
    code = "invalid-surface"


class NotFlippable(TqftError):
    code = "not-flippable"


class NotSquare(TqftError):
    code = "not-square"
