"""Exact reality classification for nilpotent and semisimple classes
in the classical simple Lie groups, with verified conjugating elements."""

__version__ = "0.1.0"
