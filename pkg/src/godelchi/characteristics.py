"""Generalised Euler characteristics of formulas and tautology decisions.

``chi(f, n, k)`` counts the classes of ``(k+1)``-valued assignments to
``X1..Xn`` that make ``f`` true. Equivalently it is the valuation ``chi_k`` of
the n-variable Lindenbaum algebra evaluated at the class of ``f``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .counting import P
from .formula import Formula, Implies, as_formula, max_var, to_string
from .patterns import level_chunks
from .semantics import boolean_models, evaluate_levels

__all__ = [
    "ChiReport",
    "resolve_n",
    "chi",
    "satisfied_by_height",
    "chi_vector",
    "is_tautology_Gk",
    "is_tautology_Ginf",
    "equivalent",
]


def resolve_n(f: Formula, n: int | None) -> int:
    """Ambient variable count: ``max_var(f)`` unless a larger ``n`` is given."""
    least = max_var(f)
    if n is None:
        n = least
    if n < 1:
        raise ValueError("n must be >= 1 (closed formulas need an explicit variable count)")
    if n < least:
        raise ValueError(f"n={n} is smaller than the largest variable index {least}")
    return n


def satisfied_by_height(f: Formula | str, n: int, max_height: int | None = None, threads: int = 1) -> list[int]:
    """``out[h-1]`` = number of height-h patterns that satisfy ``f``, for h = 1..max_height."""
    f = as_formula(f)
    n = resolve_n(f, n)
    max_height = n + 1 if max_height is None else min(max_height, n + 1)
    counts = [0] * max_height

    def count(item):
        top, block = item
        return top, int(np.count_nonzero(evaluate_levels(f, block, top) == top))

    chunks = level_chunks(n, max_height)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(count, chunks))
    else:
        results = map(count, chunks)
    for top, c in results:
        counts[top - 1] += c
    return counts


def chi(f: Formula | str, n: int | None = None, k: int = 1, threads: int = 1) -> int:
    """``chi_k`` of ``f`` over ``n`` variables; ``k > n + 1`` behaves as ``n + 1``.

    >>> chi("~~X1", 1, 2)
    2
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    f = as_formula(f)
    n = resolve_n(f, n)
    return sum(satisfied_by_height(f, n, k, threads))


@dataclass(frozen=True)
class ChiReport:
    formula: Formula
    n: int
    chi: tuple[int, ...]
    p_row: tuple[int, ...]
    boolean_model_count: int
    classical_tautology: bool = field(init=False)
    classical_contradiction: bool = field(init=False)
    godel_infinity_tautology: bool = field(init=False)
    least_k_not_tautology: Optional[int] = field(init=False)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "classical_tautology", self.chi[0] == 2**self.n)
        set_(self, "classical_contradiction", self.chi[0] == 0)
        set_(self, "godel_infinity_tautology", self.chi[-1] == self.p_row[-1])
        failing = [k for k, (c, p) in enumerate(zip(self.chi, self.p_row), 1) if c < p]
        set_(self, "least_k_not_tautology", failing[0] if failing else None)

    def is_tautology(self, k: int) -> bool:
        """Tautology of the ``(k+1)``-valued logic."""
        k = min(k, self.n + 1)
        return self.chi[k - 1] == self.p_row[k - 1]

    def to_json(self) -> dict:
        return {
            "formula": to_string(self.formula),
            "n": self.n,
            "chi": [str(c) for c in self.chi],
            "p": [str(p) for p in self.p_row],
            "boolean_models": str(self.boolean_model_count),
            "classical_tautology": self.classical_tautology,
            "classical_contradiction": self.classical_contradiction,
            "godel_infinity_tautology": self.godel_infinity_tautology,
            "least_k_not_tautology": self.least_k_not_tautology,
        }


def chi_vector(f: Formula | str, n: int | None = None, threads: int = 1) -> ChiReport:
    """``chi_1 .. chi_{n+1}`` of ``f`` together with the derived verdicts."""
    f = as_formula(f)
    n = resolve_n(f, n)
    chis = np.cumsum(satisfied_by_height(f, n, n + 1, threads), dtype=object)
    return ChiReport(
        formula=f,
        n=n,
        chi=tuple(int(c) for c in chis),
        p_row=tuple(P(n, k) for k in range(1, n + 2)),
        boolean_model_count=boolean_models(f, n),
    )


def is_tautology_Gk(f: Formula | str, n: int | None = None, k: int = 1, threads: int = 1) -> bool:
    """Whether ``f`` takes value 1 under every ``(k+1)``-valued assignment."""
    f = as_formula(f)
    n = resolve_n(f, n)
    return chi(f, n, k, threads) == P(n, k)


def is_tautology_Ginf(f: Formula | str, n: int | None = None, threads: int = 1) -> bool:
    """Tautology over the real unit interval; decided on ``n + 2`` truth values."""
    f = as_formula(f)
    n = resolve_n(f, n)
    return is_tautology_Gk(f, n, n + 1, threads)


def equivalent(f: Formula | str, g: Formula | str, n: int | None = None, threads: int = 1) -> bool:
    """Logical equivalence in infinite-valued Gödel logic over ``n`` variables."""
    f, g = as_formula(f), as_formula(g)
    n = resolve_n(Implies(f, g), n)
    return is_tautology_Ginf(Implies(f, g), n, threads) and is_tautology_Ginf(Implies(g, f), n, threads)
