"""The vector space of valuations on the n-variable Lindenbaum algebra.

A valuation is fixed by its value at the bottom (always 0 here) and on the
join-irreducibles, i.e. on the order patterns. We store *weights*: the value
at a pattern minus the value at its parent. The value at any element ``x`` is
then the sum of the weights of the patterns below ``x``, which satisfies the
valuation law automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .characteristics import satisfied_by_height
from .counting import P
from .formula import Formula, as_formula, max_var
from .patterns import (
    OrderPattern,
    Permutation,
    ResourceGuardError,
    apply_perm,
    children,
    enumerate_patterns,
    guard_limit,
    parent,
)
from .semantics import evaluate_levels

__all__ = [
    "DENSE_LIMIT",
    "Valuation",
    "LinearSystem",
    "chi_as_valuation",
    "indicator",
    "weight_indicator",
    "value_at_formula",
    "value_at_pattern",
    "maximal_chain",
    "independence_matrix",
    "determinant",
    "solve_exact",
    "orbits",
    "invariant_dimension",
    "is_invariant",
    "in_span_of_chis",
]

# P(6, 7): every pattern on six variables
DENSE_LIMIT = 18731


def _dense_guard(n: int, limit: int | None) -> None:
    limit = guard_limit(DENSE_LIMIT) if limit is None else limit
    total = P(n, n + 1)
    if total > limit:
        raise ResourceGuardError(
            f"n={n} has {total} join-irreducibles; dense valuation work is limited to {limit} "
            "(set CHI_MAX_PATTERNS or pass limit= to raise it)"
        )


def _fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Valuation:
    """A valuation given by weights on patterns.

    Two storage forms: sparse per-pattern weights, or one weight per height
    (``height_weights[h-1]`` for every pattern of height ``h``). The second
    form covers the span of the generalised characteristics at any ``n``.
    """

    __slots__ = ("n", "_weights", "_height_weights")

    def __init__(self, n: int, weights: Mapping[OrderPattern, object] | None = None):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.n = n
        clean = {}
        for p, w in (weights or {}).items():
            if p.n != n:
                raise ValueError(f"pattern {p} has {p.n} variables, valuation has {n}")
            w = _fraction(w)
            if w:
                clean[p] = w
        self._weights = clean
        self._height_weights = None

    @classmethod
    def by_height(cls, n: int, height_weights: Sequence) -> Valuation:
        if len(height_weights) != n + 1:
            raise ValueError(f"need {n + 1} height weights, got {len(height_weights)}")
        v = cls(n)
        v._weights = None
        v._height_weights = tuple(_fraction(w) for w in height_weights)
        return v

    @classmethod
    def zero(cls, n: int) -> Valuation:
        return cls(n)

    @property
    def height_weights(self) -> tuple[Fraction, ...] | None:
        return self._height_weights

    def weight(self, p: OrderPattern) -> Fraction:
        if self._height_weights is not None:
            return self._height_weights[p.height - 1]
        return self._weights.get(p, Fraction(0))

    def weights(self, limit: int | None = None) -> dict[OrderPattern, Fraction]:
        """All nonzero weights as a dict (dense materialisation for height form)."""
        if self._height_weights is None:
            return dict(self._weights)
        _dense_guard(self.n, limit)
        return {p: w for p in enumerate_patterns(self.n, self.n + 1) if (w := self.weight(p))}

    def weight_vector(self, limit: int | None = None) -> list[Fraction]:
        """Weights of every pattern, in enumeration order."""
        _dense_guard(self.n, limit)
        return [self.weight(p) for p in enumerate_patterns(self.n, self.n + 1)]

    def _combine(self, other: Valuation, sign: int) -> Valuation:
        if not isinstance(other, Valuation):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("valuations over different variable counts")
        if self._height_weights is not None and other._height_weights is not None:
            return Valuation.by_height(
                self.n, [a + sign * b for a, b in zip(self._height_weights, other._height_weights)]
            )
        out = self.weights()
        for p, w in other.weights().items():
            out[p] = out.get(p, 0) + sign * w
        return Valuation(self.n, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rmul__(self, c):
        c = _fraction(c)
        if self._height_weights is not None:
            return Valuation.by_height(self.n, [c * w for w in self._height_weights])
        return Valuation(self.n, {p: c * w for p, w in self._weights.items()})

    def __neg__(self):
        return -1 * self

    def __eq__(self, other):
        if not isinstance(other, Valuation) or other.n != self.n:
            return NotImplemented
        if self._height_weights is not None and other._height_weights is not None:
            return self._height_weights == other._height_weights
        return (self - other).weights() == {}

    __hash__ = None

    def __repr__(self):
        if self._height_weights is not None:
            return f"Valuation.by_height({self.n}, {[str(w) for w in self._height_weights]})"
        return f"Valuation({self.n}, {{{len(self._weights)} nonzero weights}})"


def chi_as_valuation(n: int, k: int) -> Valuation:
    """``chi_k``: weight 1 on every pattern of height <= k, 0 above."""
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in 1..{n + 1}, got {k}")
    return Valuation.by_height(n, [1] * k + [0] * (n + 1 - k))


def indicator(p: OrderPattern) -> Valuation:
    """The basis valuation that is 1 at ``p`` and 0 at every other join-irreducible.

    Its weights are 1 at ``p`` and -1 at each child of ``p``, so that the
    value at the children (sum down their chains) returns to 0.
    """
    weights = {p: Fraction(1)}
    for q in children(p):
        weights[q] = Fraction(-1)
    return Valuation(p.n, weights)


def weight_indicator(p: OrderPattern) -> Valuation:
    """Weight 1 at ``p`` only: the valuation counting whether ``p`` lies below an element."""
    return Valuation(p.n, {p: Fraction(1)})


def value_at_formula(nu: Valuation, f: Formula | str) -> Fraction:
    """Value of ``nu`` at the class of ``f``: the total weight of patterns satisfying ``f``."""
    f = as_formula(f)
    if max_var(f) > nu.n:
        raise ValueError(f"formula uses X{max_var(f)} but the valuation is over {nu.n} variables")
    if nu.height_weights is not None:
        counts = satisfied_by_height(f, nu.n)
        return sum((w * c for w, c in zip(nu.height_weights, counts)), Fraction(0))
    by_top: dict[int, list[tuple[OrderPattern, Fraction]]] = {}
    for p, w in nu.weights().items():
        by_top.setdefault(p.top, []).append((p, w))
    total = Fraction(0)
    for top, items in by_top.items():
        levels = np.array([p.levels for p, _ in items], dtype=np.int8).reshape(len(items), nu.n)
        hit = evaluate_levels(f, levels, top) == top
        total += sum((w for (_, w), h in zip(items, hit) if h), Fraction(0))
    return total


def value_at_pattern(nu: Valuation, p: OrderPattern) -> Fraction:
    """Value of ``nu`` at the join-irreducible ``p``: weights summed down its chain."""
    if p.n != nu.n:
        raise ValueError(f"pattern has {p.n} variables, valuation has {nu.n}")
    total = Fraction(0)
    q = p
    while q is not None:
        total += nu.weight(q)
        q = parent(q)
    return total


def maximal_chain(n: int) -> list[OrderPattern]:
    """A longest chain ``c_1 < ... < c_{n+1}`` of join-irreducibles, ``height(c_i) = i``.

    The top element puts ``0 < Xn < X(n-1) < ... < X1 < 1``; each lower one
    merges the highest intermediate block into the one block.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c = OrderPattern._trusted(tuple(n + 1 - i for i in range(1, n + 1)), n + 1)
    chain = []
    while c is not None:
        chain.append(c)
        c = parent(c)
    return chain[::-1]


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        if any(len(row) != len(self.matrix[0]) for row in self.matrix):
            raise ValueError("ragged matrix")
        if len(self.rhs) != len(self.matrix):
            raise ValueError("right-hand side length differs from row count")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0]) if self.matrix else 0


def independence_matrix(n: int) -> LinearSystem:
    """Coefficients of ``sum_k r_k chi_k = 0`` evaluated along :func:`maximal_chain`.

    Entry ``[i][k]`` (0-based) is ``chi_{k+1}(c_{i+1}) = min(i+1, k+1)``.
    """
    chain = maximal_chain(n)
    chis = [chi_as_valuation(n, k) for k in range(1, n + 2)]
    rows = tuple(tuple(value_at_pattern(x, c) for x in chis) for c in chain)
    return LinearSystem(rows, (Fraction(0),) * (n + 1))


def determinant(a: LinearSystem | Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    rows = a.matrix if isinstance(a, LinearSystem) else a
    m = [[_fraction(x) for x in row] for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[-1][-1]


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of ``matrix @ x = rhs`` (free variables set to 0), or None if inconsistent."""
    rows = [[_fraction(x) for x in row] + [_fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix):
        raise ValueError("right-hand side length differs from row count")
    cols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def _generators(n: int) -> list[Permutation]:
    if n == 1:
        return []
    return [Permutation.swap(n, 1, 2), Permutation.cycle(n)]


def orbits(n: int, limit: int | None = None) -> list[list[OrderPattern]]:
    """Orbits of the patterns under permutations of the variables, in enumeration order."""
    _dense_guard(n, limit)
    patterns = list(enumerate_patterns(n, n + 1))
    index = {p: i for i, p in enumerate(patterns)}
    root = list(range(len(patterns)))

    def find(i):
        while root[i] != i:
            root[i] = root[root[i]]
            i = root[i]
        return i

    # the transposition (1 2) and the n-cycle generate the symmetric group
    for g in _generators(n):
        for i, p in enumerate(patterns):
            a, b = find(i), find(index[apply_perm(p, g)])
            if a != b:
                root[max(a, b)] = min(a, b)
    groups: dict[int, list[OrderPattern]] = {}
    for i, p in enumerate(patterns):
        groups.setdefault(find(i), []).append(p)
    return list(groups.values())


def invariant_dimension(n: int, limit: int | None = None) -> int:
    """Dimension of the valuations fixed by every variable permutation."""
    return len(orbits(n, limit))


def is_invariant(nu: Valuation, limit: int | None = None) -> bool:
    """Whether ``nu`` is unchanged by every permutation of the variables."""
    _dense_guard(nu.n, limit)
    gens = _generators(nu.n)
    return all(
        nu.weight(apply_perm(p, g)) == nu.weight(p)
        for p in enumerate_patterns(nu.n, nu.n + 1)
        for g in gens
    )


def in_span_of_chis(nu: Valuation, limit: int | None = None) -> list[Fraction] | None:
    """Coefficients ``r`` with ``nu == sum_k r[k-1] * chi_k``, or None when ``nu`` is outside the span."""
    _dense_guard(nu.n, limit)
    n = nu.n
    equations = {}
    for p in enumerate_patterns(n, n + 1):
        row = tuple(1 if p.height <= k else 0 for k in range(1, n + 2))
        w = nu.weight(p)
        if equations.setdefault(row, w) != w:
            return None
    rows = list(equations)
    return solve_exact(rows, [equations[r] for r in rows])
