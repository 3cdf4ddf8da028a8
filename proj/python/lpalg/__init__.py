"""Exact computation in Leavitt path algebras."""

try:
    from ._lpalg import *  # noqa: F401,F403
    from ._lpalg import __doc__  # noqa: F401
except ImportError:  # running against a plain CMake build tree
    from _lpalg import *  # noqa: F401,F403
    from _lpalg import __doc__  # noqa: F401
