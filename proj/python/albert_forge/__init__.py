"""Split octonions, the Dickson-Freudenthal cubic form, and the finite
exceptional groups acting on the 27-space.

The compiled core lives in ``_albert_forge``; this package re-exports it.
"""

try:
    from ._albert_forge import *  # noqa: F401,F403  (installed layout)
    from ._albert_forge import __version__  # noqa: F401
except ImportError:  # in-tree build: the module sits next to the package on sys.path
    from _albert_forge import *  # noqa: F401,F403
    from _albert_forge import __version__  # noqa: F401
