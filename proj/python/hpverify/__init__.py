"""Python bindings for the verification core.

The compiled extension lives either next to this package (installed wheel)
or on sys.path directly (in-tree test runs against the build directory).
"""

try:
    from ._hp import *  # noqa: F401,F403
    from ._hp import __doc__ as _core_doc
except ImportError:  # pragma: no cover - build-tree layout
    from _hp import *  # noqa: F401,F403
    from _hp import __doc__ as _core_doc

__doc__ = _core_doc
