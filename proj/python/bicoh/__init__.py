"""Coherence computations for braided monoidal structures.

Thin wrapper over the C++ core: term parsing and evaluation, exact braid
equality, isomorphism decisions, braid-movie certificates, and the
little-cubes path demos.
"""

try:
    from ._bicoh import *  # noqa: F401,F403  (installed layout)
    from . import _bicoh as _impl
except ImportError:  # in-build layout: extension next to the package dir
    from _bicoh import *  # noqa: F401,F403
    import _bicoh as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
