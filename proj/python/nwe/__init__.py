"""Exact certification of LOCC indistinguishability for orthogonal product states.

State sets and certificates cross the C++ boundary as canonical JSON
strings; ``json.loads`` turns them into plain dictionaries.
"""

try:
    from ._nwe import *  # noqa: F401,F403  (installed wheel layout)
    from ._nwe import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension module directly on sys.path
    from _nwe import *  # noqa: F401,F403
    from _nwe import __version__  # noqa: F401
