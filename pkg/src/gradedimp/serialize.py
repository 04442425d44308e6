"""JSON and text formats for chains, theories, contexts and traces."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .chain import (
    ChainError,
    Hedge,
    ResiduatedChain,
    custom_chain,
    custom_hedge,
    make_chain,
    make_hedge,
    verify_chain,
    verify_hedge,
)
from .context import FormalContext
from .errors import DegreeError, ParseError, UniverseMismatch
from .lset import _NAME, Universe
from .reduce import ReductionTrace, replay_trace
from .theory import Implication, Theory

ARROW = "=>"


# chain and hedge

def chain_to_json(chain: ResiduatedChain) -> dict:
    if chain.variety == "custom":
        return {"levels": chain.levels, "tensor": [list(r) for r in chain.tnorm],
                "residuum": [list(r) for r in chain.res]}
    return {"variety": chain.variety, "levels": chain.levels}


def chain_from_json(obj) -> ResiduatedChain:
    if not isinstance(obj, dict):
        raise ParseError(f"chain must be an object, got {obj!r}")
    try:
        if "tensor" in obj or "residuum" in obj:
            chain = custom_chain(obj["tensor"], obj["residuum"])
            report = verify_chain(chain)
            if not report.ok:
                raise ChainError(f"custom chain violates its laws:\n{report}")
            return chain
        return make_chain(obj.get("variety", "lukasiewicz"), obj["levels"])
    except KeyError as exc:
        raise ParseError(f"chain is missing field {exc}") from None
    except ChainError as exc:
        raise ParseError(str(exc)) from None


def hedge_to_json(hedge: Hedge):
    if hedge.kind in ("identity", "globalization"):
        return hedge.kind
    return {"table": list(hedge.table)}


def hedge_from_json(obj, chain: ResiduatedChain) -> Hedge:
    try:
        if isinstance(obj, str):
            return make_hedge(chain, obj)
        if isinstance(obj, dict) and "table" in obj:
            hedge = custom_hedge(chain, obj["table"])
            report = verify_hedge(chain, hedge)
            if not report.ok:
                raise ChainError(f"custom hedge violates its laws:\n{report}")
            return hedge
    except ChainError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"hedge must be 'identity', 'globalization' or {{'table': [...]}}, got {obj!r}")


def _logic_from_json(data):
    chain = chain_from_json(data.get("chain", {}))
    hedge = hedge_from_json(data.get("hedge", "identity"), chain)
    return chain, hedge


def _universe(names, what="attributes") -> Universe:
    try:
        return Universe.of(names)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad {what}: {exc}") from None


# theories

def theory_to_json(theory: Theory) -> dict:
    U, c = theory.universe, theory.chain
    return {
        "chain": chain_to_json(c),
        "hedge": hedge_to_json(theory.hedge),
        "attributes": list(U.names),
        "formulas": [{"if": U.to_json(A, c), "then": U.to_json(B, c)} for A, B in theory],
    }


def theory_from_json(data) -> Theory:
    if not isinstance(data, dict):
        raise ParseError("theory JSON must be an object")
    chain, hedge = _logic_from_json(data)
    U = _universe(data.get("attributes"))
    formulas = []
    for k, f in enumerate(data.get("formulas", [])):
        try:
            formulas.append(Implication(U.from_json(f["if"], chain), U.from_json(f["then"], chain)))
        except (KeyError, TypeError):
            raise ParseError(f"formula {k} needs 'if' and 'then' objects") from None
        except ParseError as exc:
            raise ParseError(f"formula {k}: {exc}") from None
    return Theory(chain, hedge, U, tuple(formulas))


def implication_to_text(imp, universe: Universe, chain: ResiduatedChain) -> str:
    return f"{universe.format(imp[0], chain)} {ARROW} {universe.format(imp[1], chain)}"


def parse_implication(text: str, universe: Universe, chain: ResiduatedChain, line=None) -> Implication:
    left, sep, right = text.partition(ARROW)
    if not sep:
        raise ParseError(f"expected '{{...}} {ARROW} {{...}}'", line, 1)
    A = universe.parse(left, chain, line=line, column=1)
    B = universe.parse(right, chain, line=line, column=len(left) + len(ARROW) + 1)
    return Implication(A, B)


def theory_to_text(theory: Theory) -> str:
    c = theory.chain
    if c.variety == "custom":
        raise ValueError("custom chains can only be written as JSON")
    h = theory.hedge
    hedge = h.kind if h.kind != "custom" else "table " + " ".join(map(str, h.table))
    lines = [
        f"@chain {c.variety} {c.levels}",
        f"@hedge {hedge}",
        "@attributes " + ", ".join(theory.universe.names),
    ]
    lines += [implication_to_text(f, theory.universe, c) for f in theory]
    return "\n".join(lines) + "\n"


def _names_in_order(bodies) -> list[str]:
    # malformed lines and names are skipped here and reported, with their
    # position, when the formulas are parsed
    names = []
    for _, body in bodies:
        for side in body.split(ARROW):
            for item in side.strip().strip("{}").split(","):
                name = item.rpartition("/")[2].strip()
                if _NAME.match(name) and name not in names:
                    names.append(name)
    return names


def theory_from_text(text: str, chain: ResiduatedChain | None = None, hedge: Hedge | str | None = None,
                     universe: Universe | None = None, source=None) -> Theory:
    """Parse one implication per line.

    Optional directives ``@chain <variety> <levels>``, ``@hedge <kind>`` and
    ``@attributes p, q, r`` may precede the formulas; explicit arguments
    override them.  Without ``@attributes`` the universe is every name used,
    in order of first appearance.  ``#`` starts a comment.
    """
    directives = {}
    bodies = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith("@"):
            key, _, value = line.strip()[1:].partition(" ")
            if key not in ("chain", "hedge", "attributes"):
                raise ParseError(f"unknown directive @{key}", lineno, 1, source)
            directives[key] = (lineno, value.strip())
            continue
        bodies.append((lineno, line))

    if chain is None:
        if "chain" not in directives:
            raise ParseError("no chain given (use @chain or --chain/--levels)", source=source)
        lineno, value = directives["chain"]
        parts = value.split()
        try:
            chain = make_chain(parts[0], int(parts[1]))
        except (IndexError, ValueError, ChainError) as exc:
            raise ParseError(f"bad @chain: {exc}", lineno, 1, source) from None
    if hedge is None:
        lineno, value = directives.get("hedge", (None, "identity"))
        if value.startswith("table"):
            hedge_obj = {"table": [int(v) for v in value.split()[1:]]}
        else:
            hedge_obj = value
        try:
            hedge = hedge_from_json(hedge_obj, chain)
        except ParseError as exc:
            raise ParseError(str(exc), lineno, 1, source) from None
    elif isinstance(hedge, str):
        hedge = make_hedge(chain, hedge)
    if universe is None:
        if "attributes" in directives:
            lineno, value = directives["attributes"]
            try:
                universe = Universe.of(n.strip() for n in value.replace(",", " ").split())
            except ValueError as exc:
                raise ParseError(f"bad @attributes: {exc}", lineno, 1, source) from None
        else:
            try:
                universe = Universe.of(_names_in_order(bodies))
            except ValueError as exc:
                raise ParseError(f"cannot infer attributes: {exc}", source=source) from None
    formulas = []
    for lineno, body in bodies:
        try:
            formulas.append(parse_implication(body, universe, chain, lineno))
        except ParseError as exc:
            raise exc.located(source) from None
    return Theory(chain, hedge, universe, tuple(formulas))


# contexts

def context_to_json(ctx: FormalContext) -> dict:
    fmt = ctx.chain.format_degree
    return {
        "chain": chain_to_json(ctx.chain),
        "hedge": hedge_to_json(ctx.hedge),
        "objects": list(ctx.objects),
        "attributes": list(ctx.universe.names),
        "incidence": [[fmt(v) for v in row] for row in ctx.incidence],
    }


def context_from_json(data) -> FormalContext:
    if not isinstance(data, dict):
        raise ParseError("context JSON must be an object")
    chain, hedge = _logic_from_json(data)
    U = _universe(data.get("attributes"))
    try:
        rows = tuple(tuple(chain.parse_degree(v) for v in row) for row in data["incidence"])
        return FormalContext(tuple(data["objects"]), U, rows, chain, hedge)
    except KeyError as exc:
        raise ParseError(f"context is missing field {exc}") from None
    except (DegreeError, UniverseMismatch, ValueError, TypeError) as exc:
        raise ParseError(f"bad incidence: {exc}") from None


def context_to_csv(ctx: FormalContext) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["object", *ctx.universe.names])
    for name, row in zip(ctx.objects, ctx.incidence):
        writer.writerow([name, *(ctx.chain.format_degree(v) for v in row)])
    return buf.getvalue()


# traces

def trace_to_json(trace: ReductionTrace) -> list[dict]:
    U, c = trace.initial.universe, trace.initial.chain
    return [
        {"target": s.target, "source": s.source,
         "increment": U.to_json(s.increment, c), "antecedent": U.to_json(s.antecedent, c)}
        for s in trace.steps
    ]


def steps_from_json(data) -> list[tuple[int, int]]:
    """Accept ``[[t, s], ...]`` or a serialized trace."""
    if not isinstance(data, list):
        raise ParseError("steps must be a JSON list")
    pairs = []
    for k, item in enumerate(data):
        try:
            if isinstance(item, dict):
                pairs.append((int(item["target"]), int(item["source"])))
            else:
                t, s = item
                pairs.append((int(t), int(s)))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"step {k} must be [target, source] or {{'target':..,'source':..}}") from None
    return pairs


def trace_from_json(data, initial: Theory) -> ReductionTrace:
    """Rebuild a trace by replaying it, checking recorded sets where present."""
    trace = replay_trace(initial, steps_from_json(data))
    U, c = initial.universe, initial.chain
    for k, (item, step) in enumerate(zip(data, trace.steps)):
        if not isinstance(item, dict):
            continue
        for key in ("increment", "antecedent"):
            if key in item and U.from_json(item[key], c) != getattr(step, key):
                raise ParseError(f"step {k}: recorded {key} does not match the replay")
    return trace


# files

def read_json(path) -> object:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, str(path)) from None


def load_theory(path, chain=None, hedge=None, universe=None) -> Theory:
    path = Path(path)
    if path.suffix == ".json":
        try:
            return theory_from_json(read_json(path))
        except ParseError as exc:
            raise exc.located(str(path)) from None
    return theory_from_text(path.read_text(), chain, hedge, universe, source=str(path))


def load_context(path) -> FormalContext:
    try:
        return context_from_json(read_json(path))
    except ParseError as exc:
        raise exc.located(str(path)) from None


def dump_theory(theory: Theory, path=None) -> str:
    if path is not None and Path(path).suffix == ".json":
        text = json.dumps(theory_to_json(theory), indent=2) + "\n"
    else:
        text = theory_to_text(theory)
    if path is not None:
        Path(path).write_text(text)
    return text
