"""Brute-force semantics by enumerating every L-set.

Nothing here goes through least models: models are found by evaluating
truth degrees directly, entailment is a minimum over models, and least
models are meets of models.  That keeps these functions usable as an
independent check on the fast paths.
"""
from __future__ import annotations

from functools import reduce as _fold
from itertools import combinations

from .chain import Hedge, ResiduatedChain
from .errors import BudgetExceeded
from .lset import (
    DEFAULT_BUDGET,
    LSet,
    check_budget,
    enumerate_lsets,
    intersection,
    is_full_subset,
    subsethood,
)
from .reduce import increment
from .theory import Implication, Theory, truth_degree

ModelSet = tuple[LSet, ...]

ORACLE_BUDGET = 10**5


class Oracle:
    """Enumerated L-sets of one universe, with per-formula model sets memoized."""

    def __init__(self, chain: ResiduatedChain, hedge: Hedge, size: int, budget: int = ORACLE_BUDGET):
        self.chain = chain
        self.hedge = hedge
        self.size = size
        self.lsets: ModelSet = tuple(enumerate_lsets(chain, size, budget))
        self.everything = frozenset(self.lsets)
        self._cache: dict[Implication, frozenset] = {}

    @classmethod
    def for_theory(cls, theory: Theory, budget: int = ORACLE_BUDGET) -> "Oracle":
        return cls(theory.chain, theory.hedge, len(theory.universe), budget)

    def models_of(self, imp) -> frozenset:
        imp = Implication(*imp)
        hit = self._cache.get(imp)
        if hit is None:
            top = self.chain.top
            hit = frozenset(M for M in self.lsets
                            if truth_degree(self.chain, self.hedge, imp, M) == top)
            self._cache[imp] = hit
        return hit

    def models(self, formulas) -> frozenset:
        out = self.everything
        for f in formulas:
            out = out & self.models_of(f)
        return out

    def entailment(self, formulas, imp) -> int:
        return min(truth_degree(self.chain, self.hedge, Implication(*imp), M)
                   for M in self.models(formulas))

    def least_model(self, formulas, M: LSet) -> LSet:
        above = [N for N in self.models(formulas) if is_full_subset(M, N)]
        return _fold(intersection, above)

    def equivalent(self, first, second) -> bool:
        return self.models(first) == self.models(second)

    def nonredundant(self, formulas) -> bool:
        formulas = list(formulas)
        full = self.models(formulas)
        return all(self.models(formulas[:i] + formulas[i + 1:]) != full
                   for i in range(len(formulas)))

    def witnessed(self, formulas) -> bool:
        formulas = list(formulas)
        return all(f[0] in self.models(formulas[:i] + formulas[i + 1:])
                   for i, f in enumerate(formulas))

    def saturated(self, formulas) -> bool:
        formulas = list(formulas)
        return all(B == self.least_model(formulas, A) for A, B in formulas)


def brute_models(theory: Theory, budget: int = DEFAULT_BUDGET) -> ModelSet:
    """All models of ``theory``, sorted lexicographically."""
    return tuple(sorted(Oracle.for_theory(theory, budget).models(theory)))


def brute_entailment(theory: Theory, imp, budget: int = DEFAULT_BUDGET) -> int:
    return Oracle.for_theory(theory, budget).entailment(theory, imp)


def brute_equivalent(first: Theory, second: Theory, budget: int = DEFAULT_BUDGET) -> bool:
    return Oracle.for_theory(first, budget).equivalent(first, second)


def brute_minimality(theory: Theory, budget: int = 10**6) -> bool:
    """True iff no equivalent theory has fewer formulas.

    Candidates are restricted to non-trivial formulas valid in every model of
    ``theory``; any smaller equivalent theory stays equivalent after dropping
    its trivial formulas, so the restriction loses nothing.
    """
    size = len(theory.universe)
    count = check_budget(theory.chain, size, budget)
    if count * count > budget:
        raise BudgetExceeded(f"{count}^2 candidate formulas exceed the budget {budget}")
    oracle = Oracle.for_theory(theory, budget)
    target = oracle.models(theory)
    candidates = [
        Implication(A, B)
        for A in oracle.lsets for B in oracle.lsets
        if not is_full_subset(B, A) and target <= oracle.models_of((A, B))
    ]
    examined = 0
    for k in range(len(theory)):
        for combo in combinations(candidates, k):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"more than {budget} candidate theories to examine")
            if oracle.models(combo) == target:
                return False
    return True


def closure_law_violations(close, chain: ResiduatedChain, hedge: Hedge, size: int,
                           budget: int = ORACLE_BUDGET, limit: int = 10) -> list[tuple]:
    """Exhaustively test extensivity, hedge-graded monotony and idempotency.

    ``close`` maps an L-set to its closure.  Returns up to ``limit``
    ``(law, A, B)`` counterexamples (``B`` is ``None`` for unary laws).
    """
    lsets = list(enumerate_lsets(chain, size, budget))
    if len(lsets) ** 2 > budget:
        raise BudgetExceeded(f"{len(lsets)}^2 pairs exceed the budget {budget}")
    closed = {A: close(A) for A in lsets}
    bad = []
    for A in lsets:
        if not is_full_subset(A, closed[A]):
            bad.append(("extensivity", A, None))
        if close(closed[A]) != closed[A]:
            bad.append(("idempotency", A, None))
    for A in lsets:
        for B in lsets:
            if hedge.table[subsethood(chain, A, B)] > subsethood(chain, closed[A], closed[B]):
                bad.append(("monotony", A, B))
                if len(bad) >= limit:
                    return bad
    return bad[:limit]


def reduction_lemma_violations(theory: Theory, oracle: Oracle | None = None) -> list[tuple]:
    """Check every applicable single step of ``theory`` against the oracle.

    A step must keep the model set; keep saturated consequents and
    non-redundancy when the input has them; and a non-redundant irreducible
    input must be witnessed.  Returns ``(lemma, target, source)`` tuples.
    """
    oracle = oracle or Oracle.for_theory(theory)
    formulas = list(theory)
    models = oracle.models(formulas)
    saturated = oracle.saturated(formulas)
    nonredundant = oracle.nonredundant(formulas)
    bad = []
    applicable = 0
    for i, (A, B) in enumerate(formulas):
        for j in range(len(formulas)):
            if i == j:
                continue
            inc = increment(theory, i, j)
            if is_full_subset(inc, A):
                continue
            applicable += 1
            grown = Implication(tuple(max(a, b) for a, b in zip(A, inc)), B)
            step = list(dict.fromkeys(formulas[:i] + [grown] + formulas[i + 1:]))
            if oracle.models(step) != models:
                bad.append(("equivalence", i, j))
            if saturated and not oracle.saturated(step):
                bad.append(("saturation", i, j))
            if nonredundant and not oracle.nonredundant(step):
                bad.append(("non-redundancy", i, j))
    if nonredundant and not applicable and not oracle.witnessed(formulas):
        bad.append(("witness", None, None))
    return bad
