"""Deterministic window-management policy engine."""

from ._panekit import *  # noqa: F401,F403
from ._panekit import PanekitError, replay, verify

__all__ = [name for name in dir() if not name.startswith("_")]
