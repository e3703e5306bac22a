"""Quanton-state geometry: duality parameters and Bures distances."""

from ._quanton import *  # noqa: F401,F403
from ._quanton import __version__  # noqa: F401
