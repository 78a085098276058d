"""Gödel semantics over finite chains of integer truth levels.

A chain ``{0, 1, ..., top}`` stands for the truth values ``{0, 1/top, ..., 1}``.
The Gödel connectives only look at the order of values, so integer levels
give the same answers as the rational ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .formula import And, Bot, Formula, Implies, Neg, Or, Top, Var, as_formula, fold, max_var

__all__ = [
    "LevelAssignment",
    "evaluate",
    "is_true",
    "boolean_models",
    "evaluate_levels",
]


@dataclass(frozen=True)
class LevelAssignment:
    """A ``(top+1)``-valued assignment to ``X1..Xn``; ``values[i-1]`` is the level of ``Xi``."""

    top: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.top < 1:
            raise ValueError(f"top must be >= 1, got {self.top}")
        for i, v in enumerate(self.values, 1):
            if not 0 <= v <= self.top:
                raise ValueError(f"value of X{i} is {v}, outside [0, {self.top}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def relabel(self, embedding: Sequence[int], new_top: int) -> LevelAssignment:
        """Push the assignment through a map ``{0..top} -> {0..new_top}``."""
        return LevelAssignment(new_top, tuple(embedding[v] for v in self.values))


def _check_range(f: Formula, n: int) -> None:
    m = max_var(f)
    if m > n:
        raise ValueError(f"formula uses X{m} but only {n} variables are assigned")


def evaluate(f: Formula | str, a: LevelAssignment) -> int:
    """Truth level of ``f`` under ``a``, an integer in ``[0, a.top]``.

    >>> evaluate("X1 -> X2", LevelAssignment(2, (2, 1)))
    1
    """
    f = as_formula(f)
    _check_range(f, a.n)
    top, values = a.top, a.values

    def visit(node, args):
        if isinstance(node, Var):
            return values[node.index - 1]
        if isinstance(node, And):
            return min(args)
        if isinstance(node, Or):
            return max(args)
        if isinstance(node, Implies):
            return top if args[0] <= args[1] else args[1]
        if isinstance(node, Neg):
            return top if args[0] == 0 else 0
        if isinstance(node, Bot):
            return 0
        if isinstance(node, Top):
            return top
        raise TypeError(f"unknown formula node {node!r}")

    return fold(f, visit)


def is_true(f: Formula | str, a: LevelAssignment) -> bool:
    return evaluate(f, a) == a.top


def boolean_models(f: Formula | str, n: int) -> int:
    """Number of Boolean assignments to ``X1..Xn`` that make ``f`` true."""
    f = as_formula(f)
    if n < max_var(f):
        raise ValueError(f"n={n} is smaller than the largest variable index {max_var(f)}")
    return sum(
        is_true(f, LevelAssignment(1, bits)) for bits in itertools.product((0, 1), repeat=n)
    )


def evaluate_levels(f: Formula, levels: np.ndarray, top) -> np.ndarray:
    """Vectorised :func:`evaluate` over the rows of an integer matrix.

    ``levels`` has shape ``(rows, n)``; ``top`` is a scalar or a per-row array.
    Returns the per-row truth level.
    """
    rows = levels.shape[0]
    top_arr = np.broadcast_to(np.asarray(top, dtype=levels.dtype), (rows,))
    zero = np.zeros(rows, dtype=levels.dtype)

    def visit(node, args):
        if isinstance(node, Var):
            return levels[:, node.index - 1]
        if isinstance(node, And):
            return np.minimum(*args)
        if isinstance(node, Or):
            return np.maximum(*args)
        if isinstance(node, Implies):
            return np.where(args[0] <= args[1], top_arr, args[1])
        if isinstance(node, Neg):
            return np.where(args[0] == 0, top_arr, zero)
        if isinstance(node, Bot):
            return zero
        if isinstance(node, Top):
            return top_arr
        raise TypeError(f"unknown formula node {node!r}")

    _check_range(f, levels.shape[1])
    return fold(f, visit)
