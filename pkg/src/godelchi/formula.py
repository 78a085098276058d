"""Gödel propositional formulas: AST, parser, printer, variable renaming.

Grammar (lowest to highest precedence)::

    formula  := implies
    implies  := or [ "->" implies ]        right associative, alias "→"
    or       := and { "|" and }            alias "∨"
    and      := neg { "&" neg }            alias "∧"
    neg      := ("~" | "!" | "¬") neg | atom
    atom     := var | "0" | "1" | "bot" | "top" | "⊥" | "⊤" | "(" formula ")"
    var      := ("X" | "x") digits         index >= 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, TypeVar, Union

__all__ = [
    "Formula",
    "Var",
    "Bot",
    "Top",
    "And",
    "Or",
    "Implies",
    "Neg",
    "ParseError",
    "parse",
    "to_string",
    "max_var",
    "rename",
    "as_formula",
]


class ParseError(ValueError):
    """Raised on malformed formula text; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class Formula:
    """Base class of formula nodes. Nodes are immutable and hashable."""

    __slots__ = ()

    def children(self) -> tuple[Formula, ...]:
        return ()

    def __str__(self) -> str:
        return to_string(self)


@dataclass(frozen=True, repr=False)
class Var(Formula):
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")

    def __repr__(self):
        return f"Var({self.index})"


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    def __repr__(self):
        return "Bot()"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Neg(Formula):
    child: Formula

    def children(self):
        return (self.child,)

    def __repr__(self):
        return f"Neg({self.child!r})"


@dataclass(frozen=True, repr=False)
class _Binary(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Implies(_Binary):
    pass


T = TypeVar("T")


def fold(f: Formula, visit: Callable[[Formula, tuple], T]) -> T:
    """Bottom-up fold: ``visit(node, child_results)`` for every node.

    Recursion is used first; formulas too deep for the interpreter stack are
    redone with an explicit work list.
    """
    try:
        return _fold_recursive(f, visit)
    except RecursionError:
        return _fold_iterative(f, visit)


def _fold_recursive(f, visit):
    return visit(f, tuple(_fold_recursive(c, visit) for c in f.children()))


def _fold_iterative(f, visit):
    results: list = []
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        kids = node.children()
        if expanded or not kids:
            args = ()
            if kids:
                args = tuple(results[len(results) - len(kids):])
                del results[len(results) - len(kids):]
            results.append(visit(node, args))
        else:
            stack.append((node, True))
            for c in reversed(kids):
                stack.append((c, False))
    return results[0]


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<imp>->|→)
  | (?P<or>\||∨)
  | (?P<and>&|∧)
  | (?P<neg>[~!¬])
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<var>[Xx][0-9]+)
  | (?P<bot>0(?![0-9])|bot\b|⊥)
  | (?P<top>1(?![0-9])|top\b|⊤)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "var" and int(m.group()[1:]) == 0:
                raise ParseError("variable index 0 is not allowed", pos, text)
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise ParseError(f"expected {kind}, found {found}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.implies()
        self.take("eof")
        return f

    def implies(self) -> Formula:
        # right associative: collect operands, then fold from the right
        operands = [self.disjunction()]
        while self.peek() == "imp":
            self.i += 1
            operands.append(self.disjunction())
        f = operands.pop()
        while operands:
            f = Implies(operands.pop(), f)
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "or":
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.negation()
        while self.peek() == "and":
            self.i += 1
            f = And(f, self.negation())
        return f

    def negation(self) -> Formula:
        count = 0
        while self.peek() == "neg":
            self.i += 1
            count += 1
        f = self.atom()
        for _ in range(count):
            f = Neg(f)
        return f

    def atom(self) -> Formula:
        kind, value, pos = self.tokens[self.i]
        if kind == "var":
            self.i += 1
            return Var(int(value[1:]))
        if kind == "bot":
            self.i += 1
            return Bot()
        if kind == "top":
            self.i += 1
            return Top()
        if kind == "lp":
            self.i += 1
            f = self.implies()
            self.take("rp")
            return f
        found = repr(value) if kind != "eof" else "end of input"
        raise ParseError(f"expected a variable, constant or '(', found {found}", pos, self.text)


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse("X1 | X2 & X3")
    Or(Var(1), And(Var(2), Var(3)))
    """
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise ParseError("parentheses nested too deeply", 0, text) from None


def as_formula(f: Formula | str) -> Formula:
    if isinstance(f, Formula):
        return f
    if isinstance(f, str):
        return parse(f)
    raise TypeError(f"expected a Formula or formula text, got {type(f).__name__}")


# -- printing ----------------------------------------------------------------

_PREC = {Implies: 1, Or: 2, And: 3, Neg: 4}
_ATOM_PREC = 5
_SYMBOL = {Implies: " -> ", Or: " | ", And: " & "}


def _render(node: Formula, args: tuple) -> tuple[str, int]:
    if isinstance(node, Var):
        return f"X{node.index}", _ATOM_PREC
    if isinstance(node, Bot):
        return "0", _ATOM_PREC
    if isinstance(node, Top):
        return "1", _ATOM_PREC
    prec = _PREC[type(node)]
    if isinstance(node, Neg):
        text, p = args[0]
        return "~" + (text if p >= prec else f"({text})"), prec
    (lt, lp), (rt, rp) = args
    if isinstance(node, Implies):
        # right associative: a left operand of equal precedence needs parens
        left_ok, right_ok = lp > prec, rp >= prec
    else:
        left_ok, right_ok = lp >= prec, rp > prec
    lt = lt if left_ok else f"({lt})"
    rt = rt if right_ok else f"({rt})"
    return lt + _SYMBOL[type(node)] + rt, prec


def to_string(f: Formula) -> str:
    """Render with the fewest parentheses that still round-trip through parse."""
    return fold(f, _render)[0]


# -- structural helpers ------------------------------------------------------

def max_var(f: Formula) -> int:
    """Largest variable index occurring in ``f``, 0 for closed formulas."""

    def visit(node, args):
        if isinstance(node, Var):
            return node.index
        return max(args, default=0)

    return fold(f, visit)


def variables(f: Formula) -> Iterator[int]:
    def visit(node, args):
        if isinstance(node, Var):
            return frozenset((node.index,))
        return frozenset().union(*args)

    return iter(sorted(fold(f, visit)))


def rename(f: Formula, sigma) -> Formula:
    """Replace every ``Var(i)`` by ``Var(sigma(i))``.

    ``sigma`` is a :class:`godelchi.patterns.Permutation` (or anything with
    ``n`` and ``__call__``) acting on ``{1..sigma.n}``.
    """
    from .patterns import Permutation

    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    if max_var(f) > sigma.n:
        raise ValueError(f"formula uses X{max_var(f)} but the permutation acts on {sigma.n} variables")

    def visit(node, args):
        if isinstance(node, Var):
            return Var(sigma(node.index))
        if not args:
            return node
        return type(node)(*args)

    return fold(f, visit)


FormulaLike = Union[Formula, str]
