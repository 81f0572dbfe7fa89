"""Error types shared across the package."""


class SizeCapError(Exception):
    """A computation refused because it exceeds the configured size caps."""


class InternalInconsistencyError(Exception):
    """Cross-checked results disagree; signals a bug, not bad input."""


class CenterNotSplitError(Exception):
    """The center's minimal polynomials do not split over the rationals."""
