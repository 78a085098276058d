"""Order patterns: n-equivalence classes of many-valued assignments.

A pattern records how the values of ``X1..Xn`` sit between 0 and 1: which
variables are 0, which are 1, and how the rest group into strictly increasing
intermediate levels. Each pattern is also a join-irreducible element of the
Lindenbaum algebra of n-variable Gödel logic, and its height is the number of
intermediate blocks plus one.

Internally a pattern is its *canonical level vector*: ``levels[i-1]`` is 0 for
the zero block, ``j`` for the j-th intermediate block and ``top = m + 1`` for
the one block.
"""

from __future__ import annotations

import functools
import os
import re
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from .formula import Formula, as_formula, max_var
from .semantics import LevelAssignment, is_true

__all__ = [
    "Permutation",
    "OrderPattern",
    "ResourceGuardError",
    "pattern_of",
    "canonical_assignment",
    "satisfies",
    "enumerate_patterns",
    "count_patterns",
    "level_chunks",
    "parent",
    "children",
    "apply_perm",
    "pattern_index",
    "write_forest_dot",
    "parse_pattern",
]


class ResourceGuardError(RuntimeError):
    """An operation would materialise more objects than the configured limit."""


def guard_limit(default: int) -> int:
    """The resource limit, overridable by the ``CHI_MAX_PATTERNS`` environment variable."""
    env = os.environ.get("CHI_MAX_PATTERNS")
    return int(env) if env else default


class Permutation:
    """A bijection of ``{1..n}``; ``image[i-1]`` is the image of ``i``."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{image} is not a permutation of 1..{len(image)}")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> Permutation:
        image = list(range(1, n + 1))
        image[i - 1], image[j - 1] = j, i
        return cls(image)

    @classmethod
    def cycle(cls, n: int) -> Permutation:
        """The n-cycle ``1 -> 2 -> ... -> n -> 1``."""
        return cls([*range(2, n + 1), 1])

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        """Composition ``(self @ other)(i) == self(other(i))``."""
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self.image[j - 1] for j in other.image)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.image, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"


class OrderPattern:
    """One n-equivalence class, stored as its canonical level vector.

    Use :meth:`from_blocks` to build one from its zero block, intermediate
    blocks and one block.
    """

    __slots__ = ("levels", "top", "_hash")

    def __init__(self, levels: Sequence[int], top: int):
        levels = tuple(int(v) for v in levels)
        if not levels:
            raise ValueError("a pattern needs at least one variable")
        if top < 1:
            raise ValueError(f"top must be >= 1, got {top}")
        if any(not 0 <= v <= top for v in levels):
            raise ValueError(f"levels {levels} fall outside [0, {top}]")
        missing = set(range(1, top)) - set(levels)
        if missing:
            raise ValueError(f"intermediate levels {sorted(missing)} are empty")
        self.levels = levels
        self.top = top
        self._hash = hash((levels, top))

    @classmethod
    def _trusted(cls, levels: tuple[int, ...], top: int) -> OrderPattern:
        p = object.__new__(cls)
        p.levels = levels
        p.top = top
        p._hash = hash((levels, top))
        return p

    @classmethod
    def from_blocks(
        cls,
        zero_block: Iterable[int],
        blocks: Sequence[Iterable[int]],
        one_block: Iterable[int],
        n: int | None = None,
    ) -> OrderPattern:
        groups = [set(zero_block), *(set(b) for b in blocks), set(one_block)]
        seen = [i for g in groups for i in g]
        if n is None:
            n = max(seen, default=0)
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}")
        for b in groups[1:-1]:
            if not b:
                raise ValueError("intermediate blocks must be nonempty")
        levels = [0] * n
        for level, g in enumerate(groups):
            for i in g:
                levels[i - 1] = level
        return cls(levels, len(groups) - 1)

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def m(self) -> int:
        """Number of intermediate blocks."""
        return self.top - 1

    @property
    def height(self) -> int:
        return self.top

    def _block(self, level: int) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.levels, 1) if v == level)

    @property
    def zero_block(self) -> frozenset[int]:
        return self._block(0)

    @property
    def one_block(self) -> frozenset[int]:
        return self._block(self.top)

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        return tuple(self._block(j) for j in range(1, self.top))

    def __eq__(self, other):
        if not isinstance(other, OrderPattern):
            return NotImplemented
        return self.top == other.top and self.levels == other.levels

    def __hash__(self):
        return self._hash

    def __lt__(self, other: OrderPattern) -> bool:
        return (self.n, self.top, self.levels) < (other.n, other.top, other.levels)

    def __repr__(self):
        return f"OrderPattern({self})"

    def __str__(self):
        def fmt(block):
            return "{" + ",".join(map(str, sorted(block))) + "}"

        inner = ",".join(fmt(b) for b in self.blocks)
        return f"{fmt(self.zero_block)}|[{inner}]|{fmt(self.one_block)}"


def parse_pattern(text: str) -> OrderPattern:
    """Inverse of ``str(pattern)``: ``"{1}|[{2},{3}]|{}"``. ``∅`` is accepted for ``{}``."""
    body = text.strip().strip("()").replace("∅", "{}").replace(" ", "")
    parts = body.split("|")
    if len(parts) != 3 or not (parts[1].startswith("[") and parts[1].endswith("]")):
        raise ValueError(f"cannot read pattern {text!r}; expected ZERO|[B1,B2,...]|ONE")

    def block(s):
        if not re.fullmatch(r"\{(\d+(,\d+)*)?\}", s):
            raise ValueError(f"malformed block {s!r} in pattern {text!r}")
        return [int(x) for x in s[1:-1].split(",") if x]

    inner = re.findall(r"\{[^{}]*\}", parts[1])
    if "".join(inner) != parts[1][1:-1].replace("},{", "}{"):
        raise ValueError(f"malformed block list {parts[1]!r}")
    return OrderPattern.from_blocks(block(parts[0]), [block(b) for b in inner], block(parts[2]))


def pattern_of(a: LevelAssignment) -> OrderPattern:
    """The n-equivalence class of an assignment."""
    inner = sorted({v for v in a.values if 0 < v < a.top})
    rank = {v: j for j, v in enumerate(inner, 1)}
    top = len(inner) + 1
    rank[0] = 0
    rank[a.top] = top
    return OrderPattern._trusted(tuple(rank[v] for v in a.values), top)


def canonical_assignment(p: OrderPattern) -> LevelAssignment:
    """The representative using the fewest truth values: ``top = height(p)``."""
    return LevelAssignment(p.top, p.levels)


def height(p: OrderPattern) -> int:
    return p.top


def satisfies(p: OrderPattern, f: Formula | str) -> bool:
    """Whether every assignment in the class gives ``f`` the value 1."""
    f = as_formula(f)
    if max_var(f) > p.n:
        raise ValueError(f"formula uses X{max_var(f)} but the pattern has {p.n} variables")
    return is_true(f, canonical_assignment(p))


def parent(p: OrderPattern) -> OrderPattern | None:
    """The pattern below ``p`` in the forest: the top intermediate block joins the one block.

    Returns None for roots (height 1).
    """
    if p.top == 1:
        return None
    m = p.top - 1
    return OrderPattern._trusted(tuple(min(v, m) for v in p.levels), m)


def children(p: OrderPattern) -> list[OrderPattern]:
    """Patterns whose parent is ``p``.

    A child moves a nonempty part of the one block down to a new highest
    intermediate block; the rest of the one block stays on top.
    """
    ones = sorted(p.one_block)
    top = p.top
    out = []
    for mask in range((1 << len(ones)) - 1):
        stay = {ones[b] for b in range(len(ones)) if mask >> b & 1}
        levels = tuple(top + 1 if i in stay else v for i, v in enumerate(p.levels, 1))
        out.append(OrderPattern._trusted(levels, top + 1))
    return out


def apply_perm(p: OrderPattern, sigma: Permutation) -> OrderPattern:
    """Relabel variable ``i`` as ``sigma(i)``."""
    if sigma.n != p.n:
        raise ValueError(f"permutation on {sigma.n} points applied to a pattern on {p.n}")
    levels = [0] * p.n
    for i, v in enumerate(p.levels):
        levels[sigma.image[i] - 1] = v
    return OrderPattern._trusted(tuple(levels), p.top)


# -- enumeration -------------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def _suffixes(missing: frozenset[int], length: int, top: int) -> np.ndarray:
    """All label vectors of ``length`` over ``0..top`` covering ``missing``, in lex order."""
    if len(missing) > length:
        return np.empty((0, length), dtype=np.int8)
    if length == 0:
        return np.empty((1, 0), dtype=np.int8)
    parts = []
    for c in range(top + 1):
        rest = _suffixes(missing - {c}, length - 1, top)
        if rest.shape[0]:
            block = np.empty((rest.shape[0], length), dtype=np.int8)
            block[:, 0] = c
            block[:, 1:] = rest
            parts.append(block)
    if not parts:
        return np.empty((0, length), dtype=np.int8)
    out = np.concatenate(parts)
    out.setflags(write=False)
    return out


def level_chunks(n: int, max_height: int) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(top, levels)`` blocks covering every pattern of height <= max_height.

    Each block holds the canonical level vectors (one per row, ``int8``) of
    the patterns with a given height and a given level for ``X1``. Blocks come
    in enumeration order, so concatenating them gives :func:`enumerate_patterns`.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if max_height < 1:
        raise ValueError(f"max_height must be >= 1, got {max_height}")
    if n > 120:
        raise ValueError("n is limited to 120 variables (int8 level storage)")
    for top in range(1, min(max_height, n + 1) + 1):
        need = frozenset(range(1, top))
        for first in range(top + 1):
            rest = _suffixes(need - {first}, n - 1, top)
            if rest.shape[0] == 0:
                continue
            block = np.empty((rest.shape[0], n), dtype=np.int8)
            block[:, 0] = first
            block[:, 1:] = rest
            yield top, block
    if n >= 8:
        # suffix tables at this size run to hundreds of MB
        _suffixes.cache_clear()


def enumerate_patterns(n: int, max_height: int) -> Iterator[OrderPattern]:
    """Every pattern on ``n`` variables of height <= max_height, each exactly once.

    Order: ascending height, then lexicographic canonical level vector.
    """
    for top, block in level_chunks(n, max_height):
        for row in block.tolist():
            yield OrderPattern._trusted(tuple(row), top)


def count_patterns(n: int, max_height: int, threads: int = 1) -> int:
    """``len(list(enumerate_patterns(n, max_height)))`` without building objects."""
    return parallel_sum((lambda item: item[1].shape[0]), level_chunks(n, max_height), threads)


def parallel_sum(fn, items: Iterable, threads: int = 1) -> int:
    """Sum ``fn(item)`` over ``items``, optionally on a thread pool."""
    if threads <= 1:
        return sum(int(fn(x)) for x in items)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(int(r) for r in pool.map(fn, items))


def pattern_index(n: int, limit: int | None = None) -> dict[OrderPattern, int]:
    """Dense ordinal of every pattern on ``n`` variables, in enumeration order."""
    from .counting import P

    total = P(n, n + 1)
    limit = guard_limit(10**6) if limit is None else limit
    if total > limit:
        raise ResourceGuardError(
            f"n={n} has {total} patterns, more than the limit {limit} (set CHI_MAX_PATTERNS to raise it)"
        )
    return {p: i for i, p in enumerate(enumerate_patterns(n, n + 1))}


def write_forest_dot(n: int, out: TextIO, max_height: int | None = None, limit: int | None = None) -> int:
    """Write the forest of patterns as a Graphviz digraph (edges parent -> child).

    Returns the number of nodes written.
    """
    max_height = n + 1 if max_height is None else max_height
    from .counting import P

    total = P(n, max_height)
    limit = guard_limit(10**6) if limit is None else limit
    if total > limit:
        raise ResourceGuardError(f"forest has {total} nodes, more than the limit {limit}")
    ordinal: dict[OrderPattern, int] = {}
    out.write(f"digraph F{n} {{\n")
    out.write("  node [shape=box];\n")
    for i, p in enumerate(enumerate_patterns(n, max_height)):
        ordinal[p] = i
        out.write(f'  p{i} [label="{p}\\nh={p.height}"];\n')
    for p, i in ordinal.items():
        q = parent(p)
        if q is not None:
            out.write(f"  p{ordinal[q]} -> p{i};\n")
    out.write("}\n")
    return len(ordinal)
