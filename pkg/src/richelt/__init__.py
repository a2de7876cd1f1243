"""Exact tools for Richardson elements of parabolic subalgebras."""
from __future__ import annotations

__version__ = "0.1.0"
