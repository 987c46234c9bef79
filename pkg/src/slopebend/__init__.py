"""Graph drawing with one bend per edge and few slopes, plus an exact checker."""

__version__ = "0.1.0"
