"""Brute-force reference counts for cross-checking.

Nothing here touches the pattern enumerator: classes are found by running
through every assignment on the ``(k+1)``-element chain and comparing the
order relations the assignment induces, straight from the definition of
n-equivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .formula import Formula, as_formula, max_var
from .semantics import LevelAssignment, is_true

__all__ = [
    "OracleGuardError",
    "ClassCensus",
    "class_key",
    "census",
    "brute_chi",
    "brute_class_count",
    "brute_equivalence",
]

GRID_LIMIT = 10**7


class OracleGuardError(RuntimeError):
    pass


def _check_grid(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if (k + 1) ** n > GRID_LIMIT:
        raise OracleGuardError(f"(k+1)^n = {(k + 1) ** n} assignments exceeds {GRID_LIMIT}")


def _chain(values: tuple[int, ...], top: int, order: tuple[int, ...]) -> tuple[str, ...]:
    """Relations ``0 ? v[order[0]] ? ... ? v[order[-1]] ? 1`` as a tuple of '<' and '='."""
    seq = [0, *(values[i] for i in order), top]
    rel = []
    for a, b in zip(seq, seq[1:]):
        if a > b:
            return ()
        rel.append("=" if a == b else "<")
    return tuple(rel)


def class_key(a: LevelAssignment) -> tuple:
    """A complete invariant of n-equivalence.

    Sorting the variables by (value, index) gives a permutation that any
    equivalent assignment shares, so that permutation plus the relation chain
    identifies the class.
    """
    order = tuple(sorted(range(a.n), key=lambda i: (a.values[i], i)))
    return order, _chain(a.values, a.top, order)


def brute_equivalence(a: LevelAssignment, b: LevelAssignment) -> bool:
    """Decide n-equivalence by searching for a common sorting permutation."""
    if a.n != b.n or a.top != b.top:
        raise ValueError("assignments must share n and top")
    for order in itertools.permutations(range(a.n)):
        ra = _chain(a.values, a.top, order)
        if ra and ra == _chain(b.values, b.top, order):
            return True
    return False


@dataclass(frozen=True)
class ClassCensus:
    n: int
    k: int
    formula: Formula | None
    classes: frozenset
    satisfied_classes: frozenset


def census(f: Formula | str | None, n: int, k: int) -> ClassCensus:
    """Every class reached by a ``(k+1)``-valued assignment, and those making ``f`` true."""
    _check_grid(n, k)
    if f is not None:
        f = as_formula(f)
        if max_var(f) > n:
            raise ValueError(f"formula uses X{max_var(f)} but n={n}")
    classes = set()
    good = set()
    for values in itertools.product(range(k + 1), repeat=n):
        a = LevelAssignment(k, values)
        key = class_key(a)
        classes.add(key)
        if f is not None and is_true(f, a):
            good.add(key)
    return ClassCensus(n, k, f, frozenset(classes), frozenset(good))


def brute_chi(f: Formula | str, n: int, k: int) -> int:
    """Number of classes of ``(k+1)``-valued assignments making ``f`` true."""
    return len(census(f, n, k).satisfied_classes)


def brute_class_count(n: int, k: int) -> int:
    """Number of classes of ``(k+1)``-valued assignments over ``n`` variables."""
    return len(census(None, n, k).classes)
