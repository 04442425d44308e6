from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from gradedimp.chain import identity, make_chain
from gradedimp.lset import Universe
from gradedimp.theory import Implication, Theory

settings.register_profile(
    "default", deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


def theory_of(variety, levels, hedge, names, pairs):
    chain = make_chain(variety, levels)
    h = hedge(chain)
    U = Universe.of(names)
    return Theory(chain, h, U, tuple(Implication(U.parse(a, chain), U.parse(b, chain)) for a, b in pairs))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def example1():
    return theory_of("godel", 3, identity, "pqr", [
        ("{0.5/p}", "{0.5/p, 0.5/q, r}"),
        ("{p}", "{p, q, r}"),
    ])


@pytest.fixture
def example1_reduced():
    return theory_of("godel", 3, identity, "pqr", [
        ("{0.5/p, 0.5/q, 0.5/r}", "{0.5/p, 0.5/q, r}"),
        ("{p}", "{p, q, r}"),
    ])


@pytest.fixture
def example1_infl():
    return theory_of("godel", 3, identity, "pqr", [
        ("{0.5/p, 0.5/q, 0.5/r}", "{0.5/p, 0.5/q, r}"),
        ("{p, 0.5/q, r}", "{p, q, r}"),
    ])


@pytest.fixture
def example2():
    return theory_of("lukasiewicz", 5, identity, "pqrs", [
        ("{0.25/r, 0.25/s}", "{0.75/p, 0.75/q, 0.75/r, 0.25/s}"),
        ("{0.5/p, 0.25/q, 0.5/s}", "{0.75/p, 0.75/q, r, 0.5/s}"),
        ("{0.25/p, s}", "{0.75/p, q, r, s}"),
    ])


EXAMPLE2_STEPS = [(0, 1), (0, 1), (1, 2), (2, 1), (2, 1), (2, 1)]

# new antecedent after each recorded step, as printed
EXAMPLE2_ANTECEDENTS = [
    "{0.25/p, 0.25/q, 0.5/r, 0.25/s}",
    "{0.5/p, 0.5/q, 0.75/r, 0.25/s}",
    "{0.5/p, 0.5/q, 0.5/r, 0.5/s}",
    "{0.25/p, 0.25/q, 0.5/r, s}",
    "{0.5/p, 0.5/q, 0.75/r, s}",
    "{0.75/p, 0.75/q, r, s}",
]

EXAMPLE2_INCREMENTS = [
    "{0.25/p, 0.25/q, 0.5/r}",
    "{0.5/p, 0.5/q, 0.75/r, 0.25/s}",
    "{0.25/p, 0.5/q, 0.5/r, 0.5/s}",
    "{0.25/p, 0.25/q, 0.5/r}",
    "{0.5/p, 0.5/q, 0.75/r, 0.25/s}",
    "{0.75/p, 0.75/q, r, 0.5/s}",
]


@pytest.fixture
def example2_final():
    return theory_of("lukasiewicz", 5, identity, "pqrs", [
        ("{0.75/p, 0.75/q, r, s}", "{0.75/p, q, r, s}"),
        ("{0.5/p, 0.5/q, 0.5/r, 0.5/s}", "{0.75/p, 0.75/q, r, 0.5/s}"),
        ("{0.5/p, 0.5/q, 0.75/r, 0.25/s}", "{0.75/p, 0.75/q, 0.75/r, 0.25/s}"),
    ])
