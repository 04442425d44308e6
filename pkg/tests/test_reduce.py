import itertools
from fractions import Fraction

import numpy as np
import pytest

from conftest import EXAMPLE2_ANTECEDENTS, EXAMPLE2_INCREMENTS, EXAMPLE2_STEPS, theory_of
from gradedimp.chain import globalization, identity
from gradedimp.errors import InvariantViolation, NotApplicable, PreconditionError
from gradedimp.oracle import Oracle, brute_equivalent, reduction_lemma_violations
from gradedimp.reduce import (
    applicable_steps,
    check_reducible_input,
    increment,
    infl_construction,
    is_applicable,
    is_irreducible,
    prepare,
    reduce_to_irreducible,
    reduction_step,
    replay_trace,
)
from gradedimp.theory import (
    Theory,
    saturate,
    has_saturated_consequents,
    is_equivalent,
    is_nonredundant,
    is_witnessed,
)
from strategies import random_theory


def P(theory, text):
    return theory.universe.parse(text, theory.chain)


def fractional_increment(theory, t, s):
    """Independent evaluation of S(C, A)* ⊗ D on rational degrees."""
    n = theory.chain.top
    luk = theory.chain.variety == "lukasiewicz"

    def res(a, b):
        if luk:
            return min(Fraction(1), 1 - a + b)
        return Fraction(1) if a <= b else b

    def tensor(a, b):
        return max(Fraction(0), a + b - 1) if luk else min(a, b)

    A = [Fraction(v, n) for v in theory[t].antecedent]
    C, D = ([Fraction(v, n) for v in part] for part in theory[s])
    S = min((res(c, a) for c, a in zip(C, A)), default=Fraction(1))
    h = Fraction(theory.hedge.table[int(S * n)], n)
    return tuple(int(tensor(h, d) * n) for d in D)


def test_example1_single_step(example1, example1_reduced):
    trace = reduce_to_irreducible(prepare(example1))
    assert trace.final == example1_reduced
    assert trace.pairs() == [(0, 1)]
    assert is_irreducible(example1_reduced)
    assert is_witnessed(example1_reduced)
    assert not is_witnessed(example1)


def test_example1_increment(example1):
    assert increment(example1, 0, 1) == P(example1, "{0.5/p, 0.5/q, 0.5/r}")
    # {p} ⇒ {p, q, r} can also be widened, but row-major order picks (0, 1) first
    assert applicable_steps(example1) == [(0, 1), (1, 0)]


def test_example2_replay_reproduces_each_step(example2, example2_final):
    trace = replay_trace(example2, EXAMPLE2_STEPS)
    assert [s.increment for s in trace.steps] == [P(example2, t) for t in EXAMPLE2_INCREMENTS]
    assert [s.antecedent for s in trace.steps] == [P(example2, t) for t in EXAMPLE2_ANTECEDENTS]
    # the printed final theory lists the formulas in reverse order
    assert trace.final.same_formulas(example2_final)
    assert trace.final.formulas == tuple(reversed(example2_final.formulas))
    assert is_irreducible(trace.final)
    assert is_witnessed(trace.final)
    assert has_saturated_consequents(trace.final)
    assert is_equivalent(trace.final, example2)
    for before, after in itertools.pairwise(trace.theories()):
        assert brute_equivalent(before, after)


def test_example2_input_is_prepared(example2):
    assert prepare(example2) == example2
    check_reducible_input(example2)


def test_example2_automatic_strategy_reaches_same_final(example2, example2_final):
    trace = reduce_to_irreducible(example2)
    assert trace.final.same_formulas(example2_final)
    assert replay_trace(example2, trace.pairs()).final == trace.final


def test_increment_matches_rational_evaluation():
    rng = np.random.default_rng(3)
    checked = 0
    while checked < 400:
        theory = random_theory(rng, min_formulas=2)
        if len(theory) < 2:
            continue
        for t, s in itertools.permutations(range(len(theory)), 2):
            assert increment(theory, t, s) == fractional_increment(theory, t, s)
            checked += 1


def test_step_errors(example1, example2):
    with pytest.raises(IndexError):
        reduction_step(example1, 0, 5)
    with pytest.raises(ValueError):
        reduction_step(example1, 1, 1)
    with pytest.raises(NotApplicable):
        reduction_step(reduction_step(example1, 0, 1), 1, 0)
    with pytest.raises(NotApplicable, match="step 1"):
        replay_trace(example2, [(0, 1), (0, 0)])
    with pytest.raises(NotApplicable):
        replay_trace(example2, [(0, 1), (0, 1), (0, 1), (0, 1)])


def test_step_producing_duplicate_is_rejected():
    theory = theory_of("godel", 2, identity, "pq",
                       [("{q}", "{p, q}"), ("{p, q}", "{p, q}"), ("{}", "{p}")])
    assert not is_nonredundant(theory)
    with pytest.raises(InvariantViolation):
        reduction_step(theory, 0, 2)


def test_precondition_checks():
    raw = theory_of("godel", 2, identity, "pqr", [("{p}", "{q}"), ("{q}", "{r}")])
    with pytest.raises(PreconditionError):
        reduce_to_irreducible(raw)
    with pytest.raises(PreconditionError):
        # saturated but redundant: {p, q} ⇒ {p, q, r} follows from the other two
        check_reducible_input(saturate(raw).replace([*saturate(raw), (P(raw, "{p, q}"), P(raw, "{p, q, r}"))]))
    check_reducible_input(prepare(raw))


def naive_reduce(theory):
    """Restart the row-major scan from scratch after every step."""
    current, pairs = theory, []
    while True:
        steps = applicable_steps(current)
        if not steps:
            return current, pairs
        pairs.append(steps[0])
        current = reduction_step(current, *steps[0])


def test_incremental_strategy_equals_restart_scan():
    rng = np.random.default_rng(17)
    for _ in range(300):
        theory = prepare(random_theory(rng))
        trace = reduce_to_irreducible(theory)
        final, pairs = naive_reduce(theory)
        assert trace.pairs() == pairs
        assert trace.final == final


def test_reduction_outcome_properties():
    rng = np.random.default_rng(23)
    for _ in range(300):
        theory = prepare(random_theory(rng))
        trace = reduce_to_irreducible(theory)
        final = trace.final
        assert len(final) == len(theory)
        assert is_irreducible(final)
        assert is_witnessed(final)
        assert has_saturated_consequents(final)
        assert brute_equivalent(theory, final)
        oracle = Oracle.for_theory(theory)
        for step in trace.theories():
            assert reduction_lemma_violations(step, oracle) == []


def test_any_permitted_order_preserves_invariants():
    # follow a random applicable pair each time instead of the first
    rng = np.random.default_rng(29)
    for _ in range(150):
        theory = prepare(random_theory(rng, min_formulas=2))
        current, pairs = theory, []
        while steps := applicable_steps(current):
            pair = steps[int(rng.integers(len(steps)))]
            pairs.append(pair)
            current = reduction_step(current, *pair)
        assert is_witnessed(current) and is_nonredundant(current)
        assert brute_equivalent(theory, current)
        assert replay_trace(theory, pairs).final == current


def test_infl_construction(example1, example1_infl):
    assert infl_construction(example1) == example1_infl
    assert not is_equivalent(example1, example1_infl)
    assert not brute_equivalent(example1, example1_infl)


def test_infl_construction_is_sound_under_globalization():
    rng = np.random.default_rng(31)
    for _ in range(150):
        theory = random_theory(rng)
        theory = prepare(Theory(theory.chain, globalization(theory.chain), theory.universe, theory.formulas))
        assert brute_equivalent(theory, infl_construction(theory))
