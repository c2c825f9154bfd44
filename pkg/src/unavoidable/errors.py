"""Shared exception types."""

from __future__ import annotations


class ExtractionFailure(Exception):
    """An extraction stage found neither of its promised outcomes.

    Raised only in the best-effort regime (inputs below the guarantee
    threshold).  ``partials`` carries whatever verified intermediates
    the stage did produce, so callers can keep going.
    """

    def __init__(self, stage: str, message: str, partials: dict | None = None):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.message = message
        self.partials = partials or {}
