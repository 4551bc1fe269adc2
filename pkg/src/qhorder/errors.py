"""Shared exception types."""


class InternalConsistencyError(Exception):
    """An invariant the library guarantees has failed; indicates a bug."""


class CatalogError(ValueError):
    """The input catalog violates a documented precondition."""
