"""Numerical toolkit for the gaussian uncertainty integral."""

from ._unckit import *  # noqa: F401,F403
from ._unckit import __doc__  # noqa: F401
