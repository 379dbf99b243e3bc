"""Discrete potential theory on graph boundaries.

Thin wrapper around the compiled extension: graphs, the metric boundary,
hitting-time potentials, Dirichlet/Neumann spectra, Hardy and
maximum-principle reports, and distance-energy maximization.
"""

from ._graphpt import *  # noqa: F401,F403
from ._graphpt import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
