"""Max bisection above ceil(m/2): greedy bisection, kernelization and exact decisions."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
