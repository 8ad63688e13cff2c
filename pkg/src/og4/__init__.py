"""Computational companion for 4-valent G-oriented graphs with cyclic normal quotients."""

__version__ = "0.1.0"
