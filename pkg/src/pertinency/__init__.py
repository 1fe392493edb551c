"""Pertinency of group and dual-group actions on q-skew polynomial rings."""

__version__ = "0.1.0"
