"""Exact computations for the type D iquantum / singular Soergel bimodule picture."""

__version__ = "0.1.0"
