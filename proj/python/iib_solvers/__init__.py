"""Influence-immunization bounding: linear-threshold-model solvers."""

try:
    from ._iib_solvers import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _iib_solvers import *  # noqa: F401,F403  (in-tree build: module on PYTHONPATH)
