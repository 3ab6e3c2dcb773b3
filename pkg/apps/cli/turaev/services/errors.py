"""Error hierarchy shared by every service."""


class TuraevError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TuraevError, ValueError):
    """The caller supplied something that cannot be processed (CLI exit code 2)."""


class PDSyntaxError(InputError):
    """Malformed PD-code text."""


class DiagramStructureError(InputError):
    """Parsed crossings do not form a valid connected spherical diagram."""

    def __init__(self, message: str, diagnostics: list | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class CapExceededError(InputError):
    """Input is larger than a configured computation cap."""


class PreconditionError(InputError):
    """An operation was applied outside its domain (wrong genus, non-alternating input, bad site)."""


class IdentityCheckError(TuraevError):
    """A mathematical identity that must hold failed (CLI exit code 1)."""


class InternalError(TuraevError):
    """An internal invariant was violated; always a bug."""
