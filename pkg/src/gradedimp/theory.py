"""Graded attribute implications: semantics, least models and redundancy."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .chain import Hedge, ResiduatedChain
from .errors import PreconditionError, UniverseMismatch
from .lset import LSet, Universe, _same, is_full_subset, subsethood


class Implication(NamedTuple):
    antecedent: LSet
    consequent: LSet


@dataclass(frozen=True)
class Theory:
    """Ordered, duplicate-free collection of implications on one universe.

    Duplicates are merged on construction, keeping first occurrences.
    """

    chain: ResiduatedChain
    hedge: Hedge
    universe: Universe
    formulas: tuple[Implication, ...] = ()

    def __post_init__(self):
        size = len(self.universe)
        merged = {}
        for f in self.formulas:
            f = Implication(tuple(f[0]), tuple(f[1]))
            if len(f.antecedent) != size or len(f.consequent) != size:
                raise UniverseMismatch(f"formula {f} does not live on a universe of size {size}")
            merged.setdefault(f, None)
        object.__setattr__(self, "formulas", tuple(merged))
        if len(self.hedge.table) != self.chain.levels:
            raise UniverseMismatch("hedge and chain have different numbers of degrees")

    def __len__(self) -> int:
        return len(self.formulas)

    def __iter__(self) -> Iterator[Implication]:
        return iter(self.formulas)

    def __getitem__(self, i: int) -> Implication:
        return self.formulas[i]

    def replace(self, formulas: Iterable) -> "Theory":
        return Theory(self.chain, self.hedge, self.universe, tuple(formulas))

    def without(self, i: int) -> "Theory":
        return self.replace(self.formulas[:i] + self.formulas[i + 1:])

    def same_formulas(self, other: "Theory") -> bool:
        """Set equality of formulas, ignoring order."""
        return set(self.formulas) == set(other.formulas)

    def compatible(self, other: "Theory") -> bool:
        return (self.chain == other.chain and self.hedge == other.hedge
                and self.universe == other.universe)


def truth_degree(chain: ResiduatedChain, hedge: Hedge, imp: Implication, M: LSet) -> int:
    """Degree to which ``imp`` is true in ``M``: ``S(A, M)* → S(B, M)``."""
    A, B = imp
    return chain.res[hedge.table[subsethood(chain, A, M)]][subsethood(chain, B, M)]


def is_model(theory: Theory, M: LSet) -> bool:
    _same(M, theory.universe.empty())
    top = theory.chain.top
    return all(truth_degree(theory.chain, theory.hedge, f, M) == top for f in theory)


def least_model(theory: Theory, M: LSet) -> LSet:
    """Least model of ``theory`` containing ``M``.

    Iterates ``N := N ∪ S(A, N)* ⊗ B`` over all formulas until nothing grows.
    Updates are applied in place within a pass; the operator is monotone and
    every intermediate ``N`` stays below the least model, so the fixpoint is
    the same as with strictly round-based updates.
    """
    _same(M, theory.universe.empty())
    res, ten, h = theory.chain.res, theory.chain.tnorm, theory.hedge.table
    N = list(M)
    changed = True
    while changed:
        changed = False
        for A, B in theory.formulas:
            s = h[min((res[a][m] for a, m in zip(A, N)), default=theory.chain.top)]
            if not s:
                continue
            row = ten[s]
            for y, b in enumerate(B):
                v = row[b]
                if v > N[y]:
                    N[y] = v
                    changed = True
    return tuple(N)


def entailment_degree(theory: Theory, imp: Implication) -> int:
    """Degree to which ``theory`` semantically entails ``imp``: ``S(B, [A])``."""
    A, B = imp
    return subsethood(theory.chain, B, least_model(theory, A))


def is_entailed(theory: Theory, imp: Implication) -> bool:
    A, B = imp
    return is_full_subset(B, least_model(theory, A))


def saturate(theory: Theory) -> Theory:
    return theory.replace(Implication(A, least_model(theory, A)) for A, _ in theory)


def has_saturated_consequents(theory: Theory) -> bool:
    return all(B == least_model(theory, A) for A, B in theory)


def is_redundant_in(theory: Theory, i: int) -> bool:
    """Whether the ``i``-th formula follows (to degree 1) from the others."""
    return is_entailed(theory.without(i), theory[i])


def is_nonredundant(theory: Theory) -> bool:
    return not any(is_redundant_in(theory, i) for i in range(len(theory)))


def remove_redundant(theory: Theory) -> Theory:
    """Greedily drop formulas entailed by the rest, scanning in list order.

    Dropping a formula only weakens the rest, so formulas kept earlier in a
    pass remain non-redundant; the loop still re-scans until a pass deletes
    nothing.
    """
    while True:
        kept = list(theory.formulas)
        i = 0
        deleted = False
        while i < len(kept):
            rest = theory.replace(kept[:i] + kept[i + 1:])
            if is_entailed(rest, kept[i]):
                del kept[i]
                deleted = True
            else:
                i += 1
        theory = theory.replace(kept)
        if not deleted:
            return theory


def is_witnessed(theory: Theory) -> bool:
    """Every antecedent is a model of the remaining formulas."""
    if not is_nonredundant(theory):
        raise PreconditionError("witnessed non-redundancy is only defined for non-redundant theories")
    return all(is_model(theory.without(i), A) for i, (A, _) in enumerate(theory))


def is_equivalent(first: Theory, second: Theory) -> bool:
    if not first.compatible(second):
        raise UniverseMismatch("theories use different chains, hedges or universes")
    return all(is_entailed(second, f) for f in first) and all(is_entailed(first, f) for f in second)
