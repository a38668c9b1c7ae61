"""Utility functions for density_engine module."""

from .logger import ComputationLogger, ComputationStep

__all__ = ["ComputationLogger", "ComputationStep"]
