from ._helly import *  # noqa: F401,F403
from ._helly import __doc__  # noqa: F401
