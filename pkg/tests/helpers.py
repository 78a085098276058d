"""Random formula generators shared by the test modules."""

import random

from hypothesis import strategies as st

from godelchi.formula import And, Bot, Implies, Neg, Or, Top, Var

_BINARY = (And, Or, Implies)


# filled by the acceptance tests, printed by the terminal summary hook
ACCEPTANCE_RESULTS: dict[str, str] = {}


def random_formula(rng: random.Random, n: int, depth: int):
    """A formula over X1..Xn of depth at most ``depth`` (leaves have depth 0)."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.08:
            return Bot()
        if r < 0.14:
            return Top()
        return Var(rng.randint(1, n))
    if rng.random() < 0.2:
        return Neg(random_formula(rng, n, depth - 1))
    op = rng.choice(_BINARY)
    return op(random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1))


def corpus(size: int, max_n: int = 3, depth: int = 4, seed: int = 20240611):
    """``size`` (formula, n) pairs with n drawn from 1..max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        n = rng.randint(1, max_n)
        out.append((random_formula(rng, n, depth), n))
    return out


def formulas(n: int, depth: int = 4):
    leaves = st.one_of(
        st.builds(Var, st.integers(1, n)),
        st.just(Bot()),
        st.just(Top()),
    )

    def extend(children):
        return st.one_of(
            st.builds(Neg, children),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=2 ** depth)
