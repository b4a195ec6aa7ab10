"""2-rational and 2-birational multiquadratic fields."""

from ._core import *  # noqa: F401,F403
from ._core import Error, EffortBoundExceeded, HypothesisViolation, InvalidArgument, TheoremViolation

__version__ = "0.1.0"
