"""Exact arithmetic for quintic central charges and stability certificates.

Everything exact crosses the boundary as strings: rationals as ``"p/q"``,
algebraic numbers as 8-entry coordinate lists over the power basis of a
primitive 20th root of unity.  Floats only ever appear as midpoints of
certified enclosures and are labeled as such.
"""

try:
    from gepnerkit._core import *  # noqa: F401,F403  (installed layout)
    from gepnerkit import _core as _impl
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
del _impl
