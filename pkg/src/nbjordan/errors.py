"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: InputError -> 1, DomainError -> 2,
StructureError -> 3.  Library code raises them directly.
"""


class InputError(ValueError):
    """Malformed external input (bad graph6 line, unknown name, bad flag)."""


class DomainError(ValueError):
    """Input is well-formed but outside an operation's domain."""


class StructureError(RuntimeError):
    """An internal structural identity failed; indicates a bug upstream."""
