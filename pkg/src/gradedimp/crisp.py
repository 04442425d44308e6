"""Classic (two-valued) closure and Duquenne-Guigues pseudo-intents.

A deliberately independent implementation on frozensets, used to
cross-check the graded machinery on crisp data.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable


def crisp_closure(B: frozenset, rows: list[frozenset], attributes: frozenset) -> frozenset:
    """``B''``: attributes shared by every object having all of ``B``."""
    extent = [row for row in rows if B <= row]
    out = attributes
    for row in extent:
        out = out & row
    return out


def pseudo_intents(rows: Iterable[Iterable], attributes: Iterable) -> list[frozenset]:
    """All pseudo-intents, by increasing size.

    ``P`` is a pseudo-intent iff ``P != P''`` and ``Q'' ⊆ P`` for every
    pseudo-intent ``Q ⊊ P``.
    """
    rows = [frozenset(r) for r in rows]
    attributes = frozenset(attributes)
    found: list[frozenset] = []
    for k in range(len(attributes) + 1):
        for P in map(frozenset, combinations(sorted(attributes), k)):
            if crisp_closure(P, rows, attributes) == P:
                continue
            if all(crisp_closure(Q, rows, attributes) <= P for Q in found if Q < P):
                found.append(P)
    return found


def canonical_base(rows, attributes) -> list[tuple[frozenset, frozenset]]:
    rows = [frozenset(r) for r in rows]
    attributes = frozenset(attributes)
    return [(P, crisp_closure(P, rows, attributes)) for P in pseudo_intents(rows, attributes)]


def context_rows(ctx) -> tuple[list[frozenset], frozenset]:
    """Rows of a two-valued :class:`FormalContext` as attribute-name sets."""
    if ctx.chain.levels != 2:
        raise ValueError("crisp view requires a two-element chain")
    names = ctx.universe.names
    rows = [frozenset(n for n, v in zip(names, row) if v) for row in ctx.incidence]
    return rows, frozenset(names)
