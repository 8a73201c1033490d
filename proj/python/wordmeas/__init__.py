from ._wordmeas import *  # noqa: F401,F403
