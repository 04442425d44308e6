"""Hypothesis strategies and random generators shared by the tests."""
import numpy as np
from hypothesis import strategies as st

from gradedimp.chain import globalization, identity, make_chain
from gradedimp.context import random_context
from gradedimp.lset import Universe
from gradedimp.theory import Implication, Theory

NAMES = "pqrs"


@st.composite
def logics(draw, levels=(2, 3, 5)):
    chain = make_chain(draw(st.sampled_from(["lukasiewicz", "godel"])), draw(st.sampled_from(levels)))
    hedge = draw(st.sampled_from([identity, globalization]))(chain)
    return chain, hedge


def lsets(chain, size):
    return st.tuples(*[st.integers(0, chain.top)] * size)


@st.composite
def theories(draw, levels=(2, 3, 5), max_size=4, max_formulas=5):
    chain, hedge = draw(logics(levels))
    size = draw(st.integers(1, max_size))
    U = Universe.of(NAMES[:size])
    pairs = draw(st.lists(st.tuples(lsets(chain, size), lsets(chain, size)), max_size=max_formulas))
    return Theory(chain, hedge, U, tuple(Implication(a, b) for a, b in pairs))


def random_theory(rng, levels=(2, 3, 5), max_size=4, max_formulas=5, min_formulas=0):
    chain = make_chain(["lukasiewicz", "godel"][rng.integers(2)], int(rng.choice(levels)))
    hedge = [identity, globalization][rng.integers(2)](chain)
    size = int(rng.integers(1, max_size + 1))
    U = Universe.of(NAMES[:size])
    count = int(rng.integers(min_formulas, max_formulas + 1))

    def one():
        return tuple(int(v) for v in rng.integers(0, chain.levels, size))

    return Theory(chain, hedge, U, tuple(Implication(one(), one()) for _ in range(count)))


def random_small_context(rng, max_objects=3, max_attributes=3, levels=(2, 3)):
    chain = make_chain(["lukasiewicz", "godel"][rng.integers(2)], int(rng.choice(levels)))
    hedge = [identity, globalization][rng.integers(2)](chain)
    return random_context(chain, hedge, int(rng.integers(1, max_objects + 1)),
                          int(rng.integers(1, max_attributes + 1)), rng)
