"""Double edge-swap Markov chains, exhaustive censuses and graph-of-graphs
connectivity for the six degree-constrained graph spaces between simple
graphs and pseudographs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
