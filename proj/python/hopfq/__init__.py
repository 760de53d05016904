"""Hopf-fibration geometry of 1-, 2- and 3-qubit pure states."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError, ContractViolation  # noqa: F401
