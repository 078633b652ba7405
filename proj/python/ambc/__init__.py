# SPDX-License-Identifier: Apache-2.0
"""Multi-antenna ambient-backscatter receiver simulation.

Thin python surface over the C++ core: channel geometry, the optimum and
simplified detectors, closed-form error probabilities, and seeded
Monte-Carlo experiments.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
