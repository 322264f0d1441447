"""Planted clique / maximum-edge biclique recovery via nuclear-norm relaxation."""

from nuclique._core import *  # noqa: F401,F403
from nuclique._core import __doc__ as _core_doc

__doc__ = _core_doc
