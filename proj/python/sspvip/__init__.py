"""Solver for systems of split variational inequality problems in l^p spaces."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
