"""Exact distance-k domination, distance-k dimension and location-domination."""

__version__ = "0.1.0"
