"""Exact third-order Jacobsthal sequences, their generalized quaternions, and an
identity checker."""

__version__ = "0.1.0"
