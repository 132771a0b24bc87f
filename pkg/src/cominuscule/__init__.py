"""Combinatorics of totally non-negative cells in cominuscule Grassmannians."""

__version__ = "0.1.0"
