"""Arithmetic obstructions to lens space summands of reducible Dehn surgeries."""

__version__ = "0.1.0"
