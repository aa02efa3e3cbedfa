"""Exact Stirling numbers, Stirling functions, parity tapestry and Wilson-type congruences."""

from ._core import *  # noqa: F401,F403
from ._core import InvariantViolation

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
