"""Closed-form estimation of sparse differential Gaussian graphical models."""

from diffee.core.config import settings

__version__ = settings.VERSION
