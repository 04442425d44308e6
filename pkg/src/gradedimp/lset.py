"""Graded sets over a fixed, ordered, finite universe.

An L-set is a plain tuple of degree indices, one per universe position.
Tuples are hashable and compare lexicographically, which is exactly the
serialization order used everywhere else.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .chain import ResiduatedChain
from .errors import BudgetExceeded, DegreeError, ParseError, UniverseMismatch

LSet = tuple[int, ...]

DEFAULT_BUDGET = 10**7

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("universe must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate names in universe {self.names}")
        for name in self.names:
            if not _NAME.match(name):
                raise ValueError(f"invalid attribute name {name!r}")

    @classmethod
    def of(cls, names) -> "Universe":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UniverseMismatch(f"{name!r} is not in the universe {list(self.names)}") from None

    def empty(self) -> LSet:
        return (0,) * len(self.names)

    def full(self, chain: ResiduatedChain) -> LSet:
        return (chain.top,) * len(self.names)

    def lset(self, chain: ResiduatedChain, degrees: Mapping[str, object]) -> LSet:
        out = [0] * len(self.names)
        for name, value in degrees.items():
            out[self.index(name)] = value if isinstance(value, int) else chain.parse_degree(value)
        return tuple(out)

    # textual form: {0.5/p, q}
    def format(self, A: LSet, chain: ResiduatedChain) -> str:
        _same(A, self.empty())
        items = []
        for name, a in zip(self.names, A):
            if a == chain.top:
                items.append(name)
            elif a:
                items.append(f"{chain.format_degree(a)}/{name}")
        return "{" + ", ".join(items) + "}"

    def parse(self, text: str, chain: ResiduatedChain, *, line=None, column=1) -> LSet:
        """Parse ``{0.5/p, q}``; omitted attributes are 0, a bare name means 1."""
        s = text.strip()
        offset = column + (len(text) - len(text.lstrip()))
        if not (s.startswith("{") and s.endswith("}")):
            raise ParseError("expected an L-set in braces like {0.5/p, q}", line, offset)
        out = [0] * len(self.names)
        seen = set()
        body = s[1:-1]
        pos = offset + 1
        if body.strip():
            for raw in body.split(","):
                item = raw.strip()
                col = pos + (len(raw) - len(raw.lstrip()))
                pos += len(raw) + 1
                if not item:
                    raise ParseError("empty item", line, col)
                degree_text, sep, name = item.rpartition("/")
                name = name.strip()
                if name not in self.names:
                    raise ParseError(f"unknown attribute {name!r}", line, col)
                if name in seen:
                    raise ParseError(f"attribute {name!r} listed twice", line, col)
                seen.add(name)
                try:
                    a = chain.parse_degree(degree_text) if sep else chain.top
                except DegreeError as exc:
                    raise ParseError(str(exc), line, col) from None
                out[self.names.index(name)] = a
        return tuple(out)

    def to_json(self, A: LSet, chain: ResiduatedChain) -> dict[str, str]:
        return {name: chain.format_degree(a) for name, a in zip(self.names, A) if a}

    def from_json(self, obj: Mapping[str, object], chain: ResiduatedChain) -> LSet:
        if not isinstance(obj, Mapping):
            raise ParseError(f"expected an object mapping attributes to degrees, got {obj!r}")
        try:
            return self.lset(chain, {k: str(v) for k, v in obj.items()})
        except (DegreeError, UniverseMismatch) as exc:
            raise ParseError(str(exc)) from None


def _same(A: LSet, B: LSet) -> None:
    if len(A) != len(B):
        raise UniverseMismatch(f"L-sets of size {len(A)} and {len(B)} live on different universes")


def subsethood(chain: ResiduatedChain, A: LSet, B: LSet) -> int:
    """Degree to which ``A`` is included in ``B``: the minimum of ``A(y) → B(y)``."""
    _same(A, B)
    res = chain.res
    return min((res[a][b] for a, b in zip(A, B)), default=chain.top)


def is_full_subset(A: LSet, B: LSet) -> bool:
    _same(A, B)
    return all(a <= b for a, b in zip(A, B))


def union(A: LSet, B: LSet) -> LSet:
    _same(A, B)
    return tuple(max(a, b) for a, b in zip(A, B))


def intersection(A: LSet, B: LSet) -> LSet:
    _same(A, B)
    return tuple(min(a, b) for a, b in zip(A, B))


def multiple(chain: ResiduatedChain, a: int, A: LSet) -> LSet:
    """The ``a``-multiple ``a ⊗ A``."""
    if not 0 <= a < chain.levels:
        raise DegreeError(f"degree index {a!r} outside 0..{chain.top}")
    row = chain.tnorm[a]
    return tuple(row[x] for x in A)


def lset_count(chain: ResiduatedChain, size: int) -> int:
    return chain.levels ** size


def check_budget(chain: ResiduatedChain, size: int, budget: int) -> int:
    count = lset_count(chain, size)
    if count > budget:
        raise BudgetExceeded(
            f"{chain.levels}^{size} = {count} L-sets exceed the enumeration budget {budget}"
        )
    return count


def enumerate_lsets(chain: ResiduatedChain, universe, budget: int = DEFAULT_BUDGET) -> Iterator[LSet]:
    """Yield every L-set on ``universe`` once, in lexicographic order.

    ``universe`` may be a :class:`Universe` or just its size.
    """
    size = universe if isinstance(universe, int) else len(universe)
    check_budget(chain, size, budget)
    return product(range(chain.levels), repeat=size)
