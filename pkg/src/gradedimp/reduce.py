"""Antecedent-widening reduction of theories to witnessed non-redundancy.

A single step picks two distinct formulas ``A ⇒ B`` (target) and ``C ⇒ D``
(source) and replaces the target by ``A ∪ (S(C, A)* ⊗ D) ⇒ B``.  Starting
from a non-redundant theory with saturated consequents, every irreducible
result of repeated steps is equivalent, non-redundant, still saturated, of
the same size, and every antecedent is a model of the remaining formulas.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvariantViolation, NotApplicable, PreconditionError
from .lset import LSet, is_full_subset, multiple, subsethood, union
from .theory import (
    Implication,
    Theory,
    has_saturated_consequents,
    is_nonredundant,
    least_model,
    remove_redundant,
    saturate,
)


@dataclass(frozen=True)
class ReductionStep:
    target: int
    source: int
    increment: LSet
    antecedent: LSet


@dataclass(frozen=True)
class ReductionTrace:
    initial: Theory
    steps: tuple[ReductionStep, ...]
    final: Theory

    def __len__(self) -> int:
        return len(self.steps)

    def pairs(self) -> list[tuple[int, int]]:
        return [(s.target, s.source) for s in self.steps]

    def theories(self) -> list[Theory]:
        """``initial`` followed by the theory after every step."""
        out = [self.initial]
        for s in self.steps:
            out.append(reduction_step(out[-1], s.target, s.source))
        return out


def increment(theory: Theory, target: int, source: int) -> LSet:
    """``S(C, A)* ⊗ D`` for target ``A ⇒ B`` and source ``C ⇒ D``."""
    A = theory[target].antecedent
    C, D = theory[source]
    degree = theory.hedge.table[subsethood(theory.chain, C, A)]
    return multiple(theory.chain, degree, D)


def is_applicable(theory: Theory, target: int, source: int) -> bool:
    return target != source and not is_full_subset(increment(theory, target, source), theory[target].antecedent)


def _check_indices(theory: Theory, target: int, source: int) -> None:
    n = len(theory)
    if not (0 <= target < n and 0 <= source < n):
        raise IndexError(f"step ({target}, {source}) out of range for a theory of {n} formulas")
    if target == source:
        raise ValueError("target and source of a reduction step must be distinct formulas")


def _apply(theory: Theory, target: int, source: int) -> tuple[Theory, ReductionStep]:
    _check_indices(theory, target, source)
    A, B = theory[target]
    inc = increment(theory, target, source)
    if is_full_subset(inc, A):
        raise NotApplicable(
            f"step ({target}, {source}) does not enlarge the antecedent of formula {target}"
        )
    grown = Implication(union(A, inc), B)
    if grown in theory.formulas:
        raise InvariantViolation(
            f"step ({target}, {source}) would produce a formula already in the theory; "
            "the input cannot be non-redundant"
        )
    formulas = list(theory.formulas)
    formulas[target] = grown
    return theory.replace(formulas), ReductionStep(target, source, inc, grown.antecedent)


def reduction_step(theory: Theory, target: int, source: int) -> Theory:
    return _apply(theory, target, source)[0]


def applicable_steps(theory: Theory) -> list[tuple[int, int]]:
    n = len(theory)
    return [(i, j) for i in range(n) for j in range(n) if is_applicable(theory, i, j)]


def is_irreducible(theory: Theory) -> bool:
    n = len(theory)
    return not any(is_applicable(theory, i, j) for i in range(n) for j in range(n))


def prepare(theory: Theory) -> Theory:
    """Equivalent non-redundant theory with saturated consequents."""
    return remove_redundant(saturate(theory))


def check_reducible_input(theory: Theory) -> None:
    if not has_saturated_consequents(theory):
        raise PreconditionError("input theory must have saturated consequents (run prepare first)")
    if not is_nonredundant(theory):
        raise PreconditionError("input theory must be non-redundant (run prepare first)")


def reduce_to_irreducible(theory: Theory, *, check: bool = True) -> ReductionTrace:
    """Apply the first applicable (target, source) pair in row-major order until none is left.

    Only pairs involving the widened target can change their applicability
    after a step, so those are the only ones recomputed; the pair chosen is
    always the one a full restart scan would pick.
    """
    if check:
        check_reducible_input(theory)
    n = len(theory)
    current = theory
    steps = []
    table = [[is_applicable(current, i, j) for j in range(n)] for i in range(n)]
    while True:
        pair = next(((i, row.index(True)) for i, row in enumerate(table) if True in row), None)
        if pair is None:
            break
        current, step = _apply(current, *pair)
        steps.append(step)
        t = pair[0]
        for j in range(n):
            table[t][j] = is_applicable(current, t, j)
            table[j][t] = is_applicable(current, j, t)
    bound = n * len(theory.universe) * theory.chain.top
    if len(steps) > bound:
        raise InvariantViolation(f"{len(steps)} steps exceed the termination bound {bound}")
    return ReductionTrace(theory, tuple(steps), current)


def replay_trace(theory: Theory, pairs: Iterable[Sequence[int]]) -> ReductionTrace:
    """Apply exactly the given (target, source) choices, in order."""
    current = theory
    steps = []
    for k, pair in enumerate(pairs):
        target, source = (int(v) for v in pair)
        try:
            current, step = _apply(current, target, source)
        except (NotApplicable, InvariantViolation, IndexError, ValueError) as exc:
            raise NotApplicable(f"replay step {k} ({target}, {source}) failed: {exc}") from exc
        steps.append(step)
    return ReductionTrace(theory, tuple(steps), current)


def infl_construction(theory: Theory) -> Theory:
    """``{[A] of the other formulas ⇒ [A]}`` over the saturated input.

    Equivalent to the input under globalization; with other hedges the
    result may be strictly weaker.
    """
    sat = saturate(theory)
    return sat.replace(
        Implication(least_model(sat.without(i), A), B) for i, (A, B) in enumerate(sat)
    )
