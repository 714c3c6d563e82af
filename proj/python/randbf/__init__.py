"""Instrumented Bellman-Ford engines (basic, adaptive, Yen, randomized)."""

from ._randbf import *  # noqa: F401,F403
from ._randbf import __version__  # noqa: F401
