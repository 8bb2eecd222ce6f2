"""Haar wavelet filter banks: direct convolution and polyphase fast form."""

from ._core import *  # noqa: F401,F403
from ._core import FasthaarError, Mode, __doc__  # noqa: F401

__version__ = "1.0.0"
