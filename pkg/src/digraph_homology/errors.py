"""Exception types shared across the package."""


class DataError(Exception):
    """Malformed or inconsistent input data (files, manifests, cyclic graphs)."""


class GuardExceeded(Exception):
    """An oracle or enumeration size guard was hit; guards fail hard, never truncate."""
