"""Qubit state-discrimination toolkit.

Bloch-sphere algebra, minimum-error discrimination bounds and detectors,
equal-average ensemble construction, remote steering measurements,
no-signalling bound chains, and seeded Monte-Carlo protocol simulation.
All heavy lifting happens in the compiled extension.
"""

from qsdkit._core import *  # noqa: F401,F403
from qsdkit._core import __version__  # noqa: F401
