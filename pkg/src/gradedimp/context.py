"""Formal L-contexts, concept-forming operators with a hedge, and bases."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import _kernels
from .chain import Hedge, ResiduatedChain
from .errors import PreconditionError, UniverseMismatch
from .lset import DEFAULT_BUDGET, LSet, Universe, _same, check_budget, enumerate_lsets
from .oracle import brute_models
from .reduce import ReductionTrace, reduce_to_irreducible
from .theory import (
    Implication,
    Theory,
    is_nonredundant,
    is_witnessed,
    remove_redundant,
    saturate,
    truth_degree,
)


@dataclass(frozen=True)
class FormalContext:
    objects: tuple[str, ...]
    universe: Universe
    incidence: tuple[tuple[int, ...], ...]
    chain: ResiduatedChain
    hedge: Hedge

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "incidence", tuple(tuple(int(v) for v in row) for row in self.incidence))
        if not self.objects:
            raise ValueError("a formal context needs at least one object")
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object names")
        if len(self.incidence) != len(self.objects):
            raise UniverseMismatch(f"{len(self.incidence)} rows for {len(self.objects)} objects")
        for row in self.incidence:
            if len(row) != len(self.universe):
                raise UniverseMismatch(f"row {row} does not match {len(self.universe)} attributes")
            if any(not 0 <= v < self.chain.levels for v in row):
                raise ValueError(f"row {row} has degrees outside the chain")

    def row(self, i: int) -> LSet:
        return self.incidence[i]

    def with_logic(self, chain: ResiduatedChain, hedge: Hedge) -> "FormalContext":
        return FormalContext(self.objects, self.universe, self.incidence, chain, hedge)

    def empty_theory(self) -> Theory:
        return Theory(self.chain, self.hedge, self.universe)

    @property
    def incidence_array(self) -> np.ndarray:
        return np.array(self.incidence, dtype=np.int64).reshape(len(self.objects), len(self.universe))


def up(ctx: FormalContext, A: LSet) -> LSet:
    """``A↑(y) = min over x of A(x)* → I(x, y)`` for an L-set ``A`` of objects."""
    if len(A) != len(ctx.objects):
        raise UniverseMismatch(f"expected an L-set over {len(ctx.objects)} objects")
    res, h = ctx.chain.res, ctx.hedge.table
    return tuple(
        min(res[h[a]][row[y]] for a, row in zip(A, ctx.incidence))
        for y in range(len(ctx.universe))
    )


def down(ctx: FormalContext, B: LSet) -> LSet:
    """``B↓(x) = min over y of B(y) → I(x, y)``."""
    _same(B, ctx.universe.empty())
    res = ctx.chain.res
    return tuple(min(res[b][v] for b, v in zip(B, row)) for row in ctx.incidence)


def closure(ctx: FormalContext, B: LSet) -> LSet:
    return up(ctx, down(ctx, B))


def is_intent(ctx: FormalContext, B: LSet) -> bool:
    return closure(ctx, B) == tuple(B)


def truth_in_context(ctx: FormalContext, imp) -> int:
    """Minimum over the rows of the degree to which ``imp`` holds in the row."""
    imp = Implication(*imp)
    return min(truth_degree(ctx.chain, ctx.hedge, imp, row) for row in ctx.incidence)


def density(ctx: FormalContext) -> Fraction:
    """Mean incidence degree as a percentage."""
    total = sum(sum(row) for row in ctx.incidence)
    return Fraction(100 * total, len(ctx.objects) * len(ctx.universe) * ctx.chain.top)


def intents(ctx: FormalContext, budget: int = DEFAULT_BUDGET) -> tuple[LSet, ...]:
    return tuple(B for B in enumerate_lsets(ctx.chain, ctx.universe, budget) if is_intent(ctx, B))


def trivial_complete_set(ctx: FormalContext, budget: int = DEFAULT_BUDGET) -> Theory:
    """``{A ⇒ A↓↑}`` for every L-set ``A``, in lexicographic order of ``A``."""
    return ctx.empty_theory().replace(
        Implication(A, closure(ctx, A)) for A in enumerate_lsets(ctx.chain, ctx.universe, budget)
    )


def is_complete(ctx: FormalContext, theory: Theory, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the models of ``theory`` are exactly the intents of ``ctx``."""
    if not theory.compatible(ctx.empty_theory()):
        raise UniverseMismatch("theory and context use different chains, hedges or universes")
    return brute_models(theory, budget) == intents(ctx, budget)


def _closure_table(ctx: FormalContext, budget: int) -> tuple[np.ndarray, np.ndarray]:
    check_budget(ctx.chain, len(ctx.universe), budget)
    lsets = _kernels.all_lsets(ctx.chain.levels, len(ctx.universe))
    closed = _kernels.batch_closures(lsets, ctx.incidence_array, ctx.chain.res_array, ctx.hedge.array)
    return lsets, closed


def nonredundant_complete_set(ctx: FormalContext, budget: int = DEFAULT_BUDGET,
                              engine: str = "fast") -> Theory:
    """Greedy non-redundant reduct of the trivial complete set.

    ``engine="reference"`` runs saturate and remove_redundant on the full
    trivial complete set.  ``engine="fast"`` gives the same theory: the
    consequents ``A↓↑`` are already saturated (the set is complete), formulas
    ``A ⇒ A`` of intents are redundant and contribute nothing to any least
    model, and one greedy pass equals the rescanning loop.
    """
    if engine == "reference":
        return remove_redundant(saturate(trivial_complete_set(ctx, budget)))
    if engine != "fast":
        raise ValueError(f"unknown engine {engine!r}")
    lsets, closed = _closure_table(ctx, budget)
    proper = ~(closed <= lsets).all(axis=1)
    ante, cons = lsets[proper], closed[proper]
    keep = _kernels.greedy_nonredundant(ante, cons, ctx.chain, ctx.hedge)
    return ctx.empty_theory().replace(
        Implication(tuple(int(v) for v in a), tuple(int(v) for v in b))
        for a, b in zip(ante[keep], cons[keep])
    )


def extract_base(ctx: FormalContext, budget: int = DEFAULT_BUDGET,
                 engine: str = "fast") -> tuple[Theory, ReductionTrace]:
    """Complete, non-redundant, saturated base with witnessed non-redundancy.

    Returns the base and the reduction trace that produced it from the
    greedy non-redundant complete set.
    """
    trace = reduce_to_irreducible(nonredundant_complete_set(ctx, budget, engine))
    return trace.final, trace


@dataclass(frozen=True)
class PseudoIntentSystem:
    members: frozenset
    context: FormalContext

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, P) -> bool:
        return tuple(P) in self.members


def pseudo_intents(ctx: FormalContext, base: Theory, *, check: bool = True,
                   budget: int = DEFAULT_BUDGET) -> PseudoIntentSystem:
    """Antecedents of a witnessed, saturated, non-redundant complete base."""
    if check:
        if any(B != closure(ctx, A) for A, B in base):
            raise PreconditionError("base consequents must be the closures of their antecedents")
        if not is_nonredundant(base):
            raise PreconditionError("base must be non-redundant")
        if not is_witnessed(base):
            raise PreconditionError("base non-redundancy must be witnessed")
        if not is_complete(ctx, base, budget):
            raise PreconditionError("base must be complete in the context")
    return PseudoIntentSystem(frozenset(A for A, _ in base), ctx)


def verify_pseudo_intent_system(ctx: FormalContext, system: PseudoIntentSystem | Iterable[LSet],
                                budget: int = DEFAULT_BUDGET) -> bool:
    """Check the defining condition for every non-intent ``P``.

    ``P`` belongs to the system iff ``Q ⇒ Q↓↑`` is true in ``P`` for every
    other member ``Q``; members must not be intents.
    """
    members = {tuple(P) for P in (system.members if isinstance(system, PseudoIntentSystem) else system)}
    rules = {Q: Implication(Q, closure(ctx, Q)) for Q in members}
    if any(Q == rule.consequent for Q, rule in rules.items()):
        return False
    top = ctx.chain.top
    for P in enumerate_lsets(ctx.chain, ctx.universe, budget):
        if closure(ctx, P) == P:
            continue
        respected = all(
            truth_degree(ctx.chain, ctx.hedge, rule, P) == top
            for Q, rule in rules.items() if Q != P
        )
        if respected != (P in members):
            return False
    return True


def random_context(chain: ResiduatedChain, hedge: Hedge, n_objects: int, n_attributes: int,
                   rng: np.random.Generator) -> FormalContext:
    """Context with independent, uniformly distributed incidence degrees."""
    cells = rng.integers(0, chain.levels, size=(n_objects, n_attributes))
    return FormalContext(
        tuple(f"x{i + 1}" for i in range(n_objects)),
        Universe(tuple(f"y{j + 1}" for j in range(n_attributes))),
        tuple(tuple(int(v) for v in row) for row in cells),
        chain,
        hedge,
    )
