"""Iterated total/line graph toolkit."""

__version__ = "0.1.0"
