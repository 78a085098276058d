"""Counts of join-irreducibles by height.

``T(n, k)`` is the number of elements of height ``k`` in the tallest tree of
the forest for ``n`` variables; ``P(n, k)`` is the number of elements of height
at most ``k`` in the whole forest, which is also the number of n-equivalence
classes of ``(k+1)``-valued assignments.
"""

from __future__ import annotations

import threading
from math import comb

__all__ = ["CountTable", "T", "P", "table", "tree_table"]


class CountTable:
    """Memoised T and P values. Safe to share between threads."""

    def __init__(self):
        self._t: dict[tuple[int, int], int] = {}
        self._p: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def T(self, n: int, k: int) -> int:
        if n < 0 or k < 1:
            raise ValueError(f"T(n, k) needs n >= 0 and k >= 1, got ({n}, {k})")
        with self._lock:
            return self._tree(n, k)

    def _tree(self, n: int, k: int) -> int:
        if k == 1:
            return 1
        if k > n + 1:
            return 0
        key = (n, k)
        val = self._t.get(key)
        if val is None:
            # iterate over i so deep n does not recurse through the memo
            val = sum(comb(n, i) * self._tree(n - i, k - 1) for i in range(1, n + 1))
            self._t[key] = val
        return val

    def P(self, n: int, k: int) -> int:
        if n < 1 or k < 1:
            raise ValueError(f"P(n, k) needs n >= 1 and k >= 1, got ({n}, {k})")
        k = min(k, n + 1)
        with self._lock:
            val = self._p.get((n, k))
            if val is None:
                val = sum(
                    comb(n, j) * self._tree(j, i) for i in range(1, k + 1) for j in range(n + 1)
                )
                self._p[(n, k)] = val
            return val

    def table(self, max_n: int, max_k: int) -> list[list[int]]:
        _check_bounds(max_n, max_k)
        return [[self.P(n, k) for k in range(1, max_k + 1)] for n in range(1, max_n + 1)]

    def tree_table(self, max_n: int, max_k: int) -> list[list[int]]:
        _check_bounds(max_n, max_k)
        return [[self.T(n, k) for k in range(1, max_k + 1)] for n in range(1, max_n + 1)]


def _check_bounds(max_n, max_k):
    if max_n < 1 or max_k < 1:
        raise ValueError(f"table bounds must be positive, got max_n={max_n}, max_k={max_k}")


_DEFAULT = CountTable()


def T(n: int, k: int) -> int:
    """Elements of height exactly ``k`` in the tallest tree for ``n`` variables."""
    return _DEFAULT.T(n, k)


def P(n: int, k: int) -> int:
    """Classes of ``(k+1)``-valued assignments over ``n`` variables.

    Constant in ``k`` once ``k >= n + 1``.

    >>> P(2, 2)
    9
    """
    return _DEFAULT.P(n, k)


def table(max_n: int, max_k: int) -> list[list[int]]:
    """``P(n, k)`` for ``1 <= n <= max_n`` (rows) and ``1 <= k <= max_k`` (columns)."""
    return _DEFAULT.table(max_n, max_k)


def tree_table(max_n: int, max_k: int) -> list[list[int]]:
    return _DEFAULT.tree_table(max_n, max_k)
