"""Multilevel lattice constructions (A, C, C*, D) from binary codes."""

from ._multilevel import *  # noqa: F401,F403
