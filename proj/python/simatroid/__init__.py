"""Simplicial matroids of hyperclique complexes over exact fields."""

from ._simatroid import *  # noqa: F401,F403
from ._simatroid import Error, GuardExceeded, Instance, ParseError  # noqa: F401
