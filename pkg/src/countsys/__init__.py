"""Finite counting systems: iterators, generalized arithmetic and brute-force checks."""

from .arith import add, cayley_table, check_law, mul, power
from .counting import C3, N5, ONE, R5, S4, CountingSystem, is_minimal, new_system, sharp, trajectory
from .finset import FiniteSet, MapTable, make_set
from .natmodel import BoundedNat

__all__ = [
    "CountingSystem",
    "new_system",
    "FiniteSet",
    "MapTable",
    "make_set",
    "BoundedNat",
    "trajectory",
    "is_minimal",
    "sharp",
    "add",
    "mul",
    "power",
    "cayley_table",
    "check_law",
    "ONE",
    "C3",
    "S4",
    "R5",
    "N5",
]
