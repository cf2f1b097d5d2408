"""Cogrowth bounds, exact cogrowth series, and geodesic sampling."""

__version__ = "0.1.0"

from .groups import GroupId, parse_group  # noqa: F401
from .words import Alphabet, Word, free_reduce, is_freely_reduced  # noqa: F401
