"""Exact evaluation of generalized matrix functions and checks of their symmetric-matrix identities."""

from .perm_core import Permutation, compose, decompose, enumerate_sn, from_cycles, inverse, parse_cycle_string

__all__ = ["Permutation", "compose", "decompose", "enumerate_sn", "from_cycles", "inverse", "parse_cycle_string"]
