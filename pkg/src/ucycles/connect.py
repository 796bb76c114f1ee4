"""Explicit paths between vertices of the onto and 1-inequitable graphs.

Both graphs have two vertex kinds. "Free" vertices (onto words, resp.
equitable words) accept any next symbol. "Forced" vertices (almost-onto,
resp. 2-inequitable words) have exactly one in-edge and one out-edge, and
the symbol on both is the same: the missing letter, resp. the minority
bit. The path builder only needs those two facts, so one engine serves
both graphs.

Free -> free paths grow the target word at the tail one symbol at a time.
When a step lands on a forced vertex whose forced symbol is not the next
target symbol, the walk follows the forced run until it reaches a free
word, then rotates that word until the already-built target prefix is
back at the tail, and resumes. Forced endpoints are reduced to free ones:
a forced source runs forward to a free word, a forced target is traced
backwards to a free word whose forward chain ends at the target.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .classes import ClassSpec
from .errors import ConsistencyError, InvalidArgument, UnsupportedSpec
from .graph import TransitionGraph
from .words import Word

PHASES = ("build-target", "forced-run", "rotation", "reintroduce-missing", "backtrack-derived")


@dataclass(frozen=True)
class PathTrace:
    spec: ClassSpec
    steps: list[Word]
    phases: list[str | None]  # how each step was reached; None for the source

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class _Rules:
    free: Callable[[tuple], bool]
    forced: Callable[[tuple], int]  # the single legal symbol at a forced vertex
    valid: Callable[[tuple], bool]


def _onto_rules(n: int) -> _Rules:
    full = frozenset(range(n))

    def forced(w):
        (m,) = full.difference(w)
        return m

    return _Rules(
        free=lambda w: len(set(w)) == n,
        forced=forced,
        valid=lambda w: len(set(w)) >= n - 1,
    )


def _inequitable_rules(length: int) -> _Rules:
    half = length // 2
    return _Rules(
        free=lambda w: sum(w) == half,
        forced=lambda w: 0 if sum(w) > half else 1,
        valid=lambda w: abs(length - 2 * sum(w)) in (0, 2),
    )


class _Walk:
    def __init__(self, start: tuple):
        self.steps = [start]
        self.phases: list[str | None] = [None]

    @property
    def cur(self) -> tuple:
        return self.steps[-1]

    def push(self, symbol: int, phase: str):
        self.steps.append(self.cur[1:] + (symbol,))
        self.phases.append(phase)


def _run_forced(walk: _Walk, rules: _Rules, phase: str):
    """Follow out-degree-1 vertices until a free word is reached."""
    visited = set()
    while not rules.free(walk.cur):
        if walk.cur in visited:
            raise ConsistencyError(f"forced run revisited {walk.cur} without reaching a free vertex")
        visited.add(walk.cur)
        walk.push(rules.forced(walk.cur), phase)


def _build_to(walk: _Walk, target: tuple, rules: _Rules):
    """Free current vertex -> free target."""
    M = len(target)
    # target[:r] sits at the tail of the current word
    r = max(j for j in range(M) if walk.cur[M - j:] == target[:j])
    while walk.cur != target:
        w = walk.cur
        if rules.free(w) or rules.forced(w) == target[r]:
            walk.push(target[r], "build-target")
            r += 1
            continue
        built = target[:r]
        _run_forced(walk, rules, "forced-run")
        for _ in range(M):
            if walk.cur[M - r:] == built:
                break
            walk.push(walk.cur[0], "rotation")
        else:
            raise ConsistencyError(f"target prefix {built} lost during forced run ending at {walk.cur}")


def _backtrack(target: tuple, rules: _Rules) -> list[tuple]:
    """Chain [c, ..., target] where c is free and every later word is forced."""
    chain = [target]
    while not rules.free(chain[-1]):
        w = chain[-1]
        if len(chain) > len(target) + 1:
            raise ConsistencyError(f"backtrack from {target} did not reach a free vertex")
        chain.append((rules.forced(w),) + w[:-1])
    chain.reverse()
    return chain


def _connect(spec: ClassSpec, source: Word, target: Word, rules: _Rules) -> PathTrace:
    M = spec.k - 1
    for label, w in (("source", source), ("target", target)):
        if w.length != M or w.n != spec.n or not rules.valid(w.symbols):
            raise InvalidArgument(f"{label} {spec.format(w)} is not a vertex of the {spec} graph")
    a, b = source.symbols, target.symbols
    walk = _Walk(a)
    if a != b:
        if not rules.free(a):
            _run_forced(walk, rules, "forced-run")
            if len(walk.steps) > 1:
                walk.phases[-1] = "reintroduce-missing"
        chain = _backtrack(b, rules)
        _build_to(walk, chain[0], rules)
        for w in chain[1:]:
            walk.push(w[-1], "backtrack-derived")
    return PathTrace(spec, [Word(s, spec.n) for s in walk.steps], walk.phases)


def connect_onto(source: Word, target: Word, spec: ClassSpec) -> PathTrace:
    if spec.class_name != "onto":
        raise UnsupportedSpec(f"connect_onto needs an onto spec, got {spec}")
    if spec.k <= spec.n:
        raise UnsupportedSpec(f"onto graph is only connected for k > n ({spec})")
    return _connect(spec, source, target, _onto_rules(spec.n))


def connect_inequitable(source: Word, target: Word, spec: ClassSpec) -> PathTrace:
    if spec.class_name != "one-inequitable":
        raise UnsupportedSpec(f"connect_inequitable needs a one-inequitable spec (odd k), got {spec}")
    return _connect(spec, source, target, _inequitable_rules(spec.k - 1))


def connect(source: Word, target: Word, spec: ClassSpec) -> PathTrace:
    if spec.class_name == "onto":
        return connect_onto(source, target, spec)
    if spec.class_name == "one-inequitable":
        return connect_inequitable(source, target, spec)
    raise UnsupportedSpec(f"no constructive path procedure for {spec.class_name}")


def validate_trace(t: PathTrace, g: TransitionGraph) -> bool:
    if t.spec != g.spec or not t.steps:
        return False
    if len(t.steps) == 1:
        return g.index_of(t.steps[0]) is not None
    return all(g.has_edge(u, v) for u, v in zip(t.steps, t.steps[1:]))


def format_trace(t: PathTrace) -> str:
    width = t.spec.k
    lines = []
    for w, phase in zip(t.steps, t.phases):
        lines.append(f"{t.spec.format(w):<{width}}  {phase or 'source'}")
    return "\n".join(lines)


def trace_records(t: PathTrace) -> list[dict]:
    return [{"word": t.spec.format(w), "phase": p} for w, p in zip(t.steps, t.phases)]


def trace_json(t: PathTrace) -> str:
    return json.dumps(trace_records(t))
