"""Logical neural networks: rule compiler, activation inference, readout."""

from ._lognet import *  # noqa: F401,F403

__version__ = "0.1.0"
