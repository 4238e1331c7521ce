"""Exact rational polyhedral computations and extended-formulation checks."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, fixtures  # noqa: F401

__version__ = "0.1.0"
