"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A configured exploration or rendering budget was exceeded."""
