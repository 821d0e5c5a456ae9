"""Exact number theory for strong approximation experiments on tori."""

from ._asa import *  # noqa: F401,F403
from ._asa import __doc__  # noqa: F401
