"""Diffusion-based molecular communication link between two bacterial
populations: binding kinetics, channel physics, capacity, timing,
modulation, and Monte-Carlo validation. Thin wrapper over the C++ core."""

from ._bactlink import *  # noqa: F401,F403
from ._bactlink import __doc__ as __core_doc__  # noqa: F401

__version__ = "0.1.0"
