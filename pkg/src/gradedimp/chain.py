"""Finite residuated chains and idempotent truth-stressing hedges.

Truth degrees are represented by their index ``0..n`` in an equidistant
chain with ``n + 1`` levels, so degree ``k`` stands for the rational ``k/n``.
All arithmetic is on indices; nothing in the core touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ChainError, DegreeError

VARIETIES = ("lukasiewicz", "godel")


@dataclass(frozen=True)
class ResiduatedChain:
    """A finite chain ``0 < 1 < ... < n`` with a tensor and its residuum.

    ``tnorm[a][b]`` is ``a ⊗ b`` and ``res[a][b]`` is ``a → b``.
    """

    levels: int
    variety: str
    tnorm: tuple[tuple[int, ...], ...] = field(repr=False)
    res: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def top(self) -> int:
        return self.levels - 1

    @property
    def degrees(self) -> range:
        return range(self.levels)

    def _check(self, a: int) -> None:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.levels:
            raise DegreeError(f"degree index {a!r} outside 0..{self.top}")

    def tensor(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.tnorm[a][b]

    def residuum(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.res[a][b]

    def fraction(self, a: int) -> Fraction:
        self._check(a)
        return Fraction(a, self.top)

    def format_degree(self, a: int) -> str:
        """Render a degree the way it is written by hand: ``0.75``, ``1``, ``1/3``."""
        f = self.fraction(a)
        if f.denominator == 1:
            return str(f.numerator)
        den = f.denominator
        for p in (2, 5):
            while den % p == 0:
                den //= p
        if den != 1:
            return f"{f.numerator}/{f.denominator}"
        digits = 0
        while (f * 10**digits).denominator != 1:
            digits += 1
        return f"{float(f):.{digits}f}"

    def parse_degree(self, text) -> int:
        """Map ``"0.75"``, ``"3/4"`` or ``1`` to its index; reject inexact values."""
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise DegreeError(f"not a truth degree: {text!r}") from None
        scaled = value * self.top
        if scaled.denominator != 1 or not 0 <= scaled <= self.top:
            raise DegreeError(f"{text!r} is not a degree of the {self.levels}-element chain")
        return int(scaled)

    @cached_property
    def tnorm_array(self) -> np.ndarray:
        return np.array(self.tnorm, dtype=np.int64)

    @cached_property
    def res_array(self) -> np.ndarray:
        return np.array(self.res, dtype=np.int64)


def make_chain(variety: str, levels: int) -> ResiduatedChain:
    """Equidistant Łukasiewicz or Gödel chain with ``levels`` elements."""
    if not isinstance(levels, int) or levels < 2:
        raise ChainError(f"a chain needs at least 2 levels, got {levels!r}")
    n = levels - 1
    if variety == "lukasiewicz":
        tnorm = [[max(0, a + b - n) for b in range(levels)] for a in range(levels)]
        res = [[min(n, n - a + b) for b in range(levels)] for a in range(levels)]
    elif variety == "godel":
        tnorm = [[min(a, b) for b in range(levels)] for a in range(levels)]
        res = [[n if a <= b else b for b in range(levels)] for a in range(levels)]
    else:
        raise ChainError(f"unknown variety {variety!r}; expected one of {VARIETIES}")
    return ResiduatedChain(levels, variety, _freeze(tnorm), _freeze(res))


def custom_chain(tnorm: Sequence[Sequence[int]], res: Sequence[Sequence[int]]) -> ResiduatedChain:
    """Chain given by explicit tables. Not validated here; see :func:`verify_chain`."""
    levels = len(tnorm)
    if levels < 2:
        raise ChainError("a chain needs at least 2 levels")
    for name, table in (("tensor", tnorm), ("residuum", res)):
        if len(table) != levels or any(len(row) != levels for row in table):
            raise ChainError(f"{name} table must be {levels}x{levels}")
        if any(not 0 <= v < levels for row in table for v in row):
            raise ChainError(f"{name} table has entries outside 0..{levels - 1}")
    return ResiduatedChain(levels, "custom", _freeze(tnorm), _freeze(res))


def _freeze(table) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class Hedge:
    table: tuple[int, ...]
    kind: str = "custom"

    def __call__(self, a: int) -> int:
        return self.table[a]

    def apply(self, a: int) -> int:
        if not 0 <= a < len(self.table):
            raise DegreeError(f"degree index {a!r} outside 0..{len(self.table) - 1}")
        return self.table[a]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)


def identity(chain: ResiduatedChain) -> Hedge:
    return Hedge(tuple(chain.degrees), "identity")


def globalization(chain: ResiduatedChain) -> Hedge:
    n = chain.top
    return Hedge(tuple(n if a == n else 0 for a in chain.degrees), "globalization")


def custom_hedge(chain: ResiduatedChain, table: Sequence[int]) -> Hedge:
    if len(table) != chain.levels:
        raise ChainError(f"hedge table must have {chain.levels} entries")
    if any(not 0 <= int(v) < chain.levels for v in table):
        raise ChainError("hedge table has entries outside the chain")
    return Hedge(tuple(int(v) for v in table), "custom")


def make_hedge(chain: ResiduatedChain, kind: str) -> Hedge:
    if kind == "identity":
        return identity(chain)
    if kind == "globalization":
        return globalization(chain)
    raise ChainError(f"unknown hedge {kind!r}; expected 'identity' or 'globalization'")


class LawCheck(NamedTuple):
    law: str
    passed: bool
    witness: tuple | None = None


class LawReport(tuple):
    """Tuple of :class:`LawCheck`; truthy attribute ``ok`` when all pass."""

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self)

    def failures(self) -> list[LawCheck]:
        return [c for c in self if not c.passed]

    def __str__(self) -> str:
        lines = []
        for c in self:
            status = "pass" if c.passed else f"FAIL at {c.witness}"
            lines.append(f"{c.law}: {status}")
        return "\n".join(lines)


def _first(law, candidates, violated) -> LawCheck:
    for w in candidates:
        if violated(*w):
            return LawCheck(law, False, w)
    return LawCheck(law, True)


def verify_chain(chain: ResiduatedChain) -> LawReport:
    """Exhaustively check the residuated-chain axioms on every degree triple."""
    L = chain.degrees
    n = chain.top
    t, r = chain.tnorm, chain.res
    pairs = list(product(L, repeat=2))
    triples = list(product(L, repeat=3))
    return LawReport([
        _first("commutativity", pairs, lambda a, b: t[a][b] != t[b][a]),
        _first("associativity", triples, lambda a, b, c: t[t[a][b]][c] != t[a][t[b][c]]),
        _first("unit", [(a,) for a in L], lambda a: t[a][n] != a),
        _first("adjointness", triples, lambda a, b, c: (t[a][b] <= c) != (a <= r[b][c])),
    ])


def verify_hedge(chain: ResiduatedChain, hedge: Hedge) -> LawReport:
    """Check ``1* = 1``, ``a* <= a``, ``(a→b)* <= a*→b*`` and ``a** = a*``."""
    L = chain.degrees
    n = chain.top
    h, r = hedge.table, chain.res
    if len(h) != chain.levels:
        raise ChainError("hedge and chain have different numbers of degrees")
    return LawReport([
        _first("top", [(n,)], lambda a: h[a] != n),
        _first("subdiagonal", [(a,) for a in L], lambda a: h[a] > a),
        _first("implication", list(product(L, repeat=2)), lambda a, b: h[r[a][b]] > r[h[a]][h[b]]),
        _first("idempotency", [(a,) for a in L], lambda a: h[h[a]] != h[a]),
    ])
