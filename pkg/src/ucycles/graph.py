"""Overlap digraphs whose edges are the members of a function class.

Words are encoded as base-n integers (most significant symbol first), so
numeric order on codes is lexicographic order on words. A vertex is a
length-(k-1) word; the edge labelled by class member w runs from w's
prefix to w's suffix. Adjacency is stored CSR-style over edge codes, which
keeps the million-edge equitable graphs cheap to build and traverse.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .classes import ClassSpec, ExistenceVerdict, cardinality, enumerate_class, is_member
from .errors import EmptyClass, InvalidArgument, PreconditionViolation
from .words import Word, cyclic_windows

_CHUNK = 1 << 22
_ORACLE_LIMIT = 10**6


def encode(symbols, n: int) -> int:
    code = 0
    for s in symbols:
        code = code * n + s
    return code


def decode(code: int, length: int, n: int) -> tuple[int, ...]:
    out = [0] * length
    for i in range(length - 1, -1, -1):
        code, out[i] = divmod(code, n)
    return tuple(out)


def _symbol_stats(codes: np.ndarray, length: int, n: int):
    """Per code: (number of distinct symbols, number of 1 symbols)."""
    if n == 2:
        ones = np.bitwise_count(codes.astype(np.uint64)).astype(np.int64)
        distinct = (ones > 0).astype(np.int64) + (ones < length)
        return distinct, ones
    present = np.zeros(codes.shape, dtype=np.uint64)
    ones = np.zeros(codes.shape, dtype=np.int64)
    rest = codes.copy()
    for _ in range(length):
        digit = rest % n
        rest //= n
        present |= np.left_shift(np.uint64(1), digit.astype(np.uint64))
        ones += digit == 1
    return np.bitwise_count(present).astype(np.int64), ones


def _member_mask(name: str, k: int, n: int, codes: np.ndarray) -> np.ndarray:
    if name == "all-words":
        return np.ones(codes.shape, dtype=bool)
    distinct, ones = _symbol_stats(codes, k, n)
    if name == "injective":
        return distinct == k
    if name == "onto":
        return distinct == n
    if name == "almost-onto":
        return distinct == n - 1
    diff = np.abs(k - 2 * ones)
    return diff == {"equitable": 0, "one-inequitable": 1, "two-inequitable": 2}[name]


def member_codes(spec: ClassSpec) -> np.ndarray:
    """Sorted integer codes of all class members."""
    name, k, n = spec.class_name, spec.k, spec.n
    total = n**k
    if total >= 2**62:
        raise InvalidArgument(f"{spec}: n^k too large to encode")
    if name == "injective" and total > 64 * cardinality(spec):
        codes = [encode(p, n) for p in itertools.permutations(range(n), k)]
        return np.array(codes, dtype=np.int64)
    parts = []
    for lo in range(0, total, _CHUNK):
        block = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        parts.append(block[_member_mask(name, k, n, block)])
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    spec: ClassSpec
    vertex_codes: np.ndarray  # sorted; index = vertex id
    edge_codes: np.ndarray  # sorted; index = edge id
    edge_src: np.ndarray
    edge_dst: np.ndarray
    out_start: np.ndarray  # edges of vertex v are out_start[v]:out_start[v+1]

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_codes)

    @property
    def edge_count(self) -> int:
        return len(self.edge_codes)

    @property
    def vertex_length(self) -> int:
        return self.spec.k - 1

    def vertex(self, i: int) -> Word:
        return Word._make(decode(int(self.vertex_codes[i]), self.vertex_length, self.spec.n), self.spec.n)

    @cached_property
    def vertices(self) -> list[Word]:
        return [self.vertex(i) for i in range(self.vertex_count)]

    def edge_label(self, e: int) -> Word:
        return Word._make(decode(int(self.edge_codes[e]), self.spec.k, self.spec.n), self.spec.n)

    def index_of(self, w: Word) -> int | None:
        if w.length != self.vertex_length or w.n != self.spec.n:
            return None
        code = encode(w.symbols, self.spec.n)
        i = int(np.searchsorted(self.vertex_codes, code))
        if i < self.vertex_count and self.vertex_codes[i] == code:
            return i
        return None

    def out_edges(self, i: int) -> list[tuple[int, int]]:
        """(appended symbol, target vertex id) pairs, symbol-ascending."""
        lo, hi = self.out_start[i], self.out_start[i + 1]
        n = self.spec.n
        return [(int(c % n), int(t)) for c, t in zip(self.edge_codes[lo:hi], self.edge_dst[lo:hi])]

    @cached_property
    def out_degree(self) -> np.ndarray:
        return np.diff(self.out_start)

    @cached_property
    def in_degree(self) -> np.ndarray:
        return np.bincount(self.edge_dst, minlength=self.vertex_count)

    @cached_property
    def _edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_codes.tolist())

    def has_edge(self, u: Word, v: Word) -> bool:
        """True iff u -> v is an edge, i.e. u + v[-1] is a class member."""
        n = self.spec.n
        if u.n != n or v.n != n or u.length != self.vertex_length or v.length != self.vertex_length:
            return False
        if u.symbols[1:] != v.symbols[:-1]:
            return False
        return encode(u.symbols, n) * n + v.symbols[-1] in self._edge_set


def build(spec: ClassSpec) -> TransitionGraph:
    if spec.k < 2:
        raise InvalidArgument("transition graphs need k >= 2")
    n = spec.n
    edges = member_codes(spec)
    if len(edges) == 0:
        raise EmptyClass(f"{spec} has no members")
    tail = n ** (spec.k - 1)
    prefix = edges // n
    suffix = edges % tail
    vertices = np.unique(np.concatenate([prefix, suffix]))
    src = np.searchsorted(vertices, prefix)
    dst = np.searchsorted(vertices, suffix)
    out_start = np.searchsorted(src, np.arange(len(vertices) + 1))
    return TransitionGraph(spec, vertices, edges, src, dst, out_start)


# -- degree audit ---------------------------------------------------------


def vertex_kinds(spec: ClassSpec, codes: np.ndarray) -> np.ndarray:
    """Class name of each vertex word (length k-1) as seen by the edge class."""
    name, length, n = spec.class_name, spec.k - 1, spec.n
    if name in ("all-words", "injective"):
        return np.full(codes.shape, name, dtype=object)
    if name == "equitable":
        return np.full(codes.shape, "one-inequitable", dtype=object)
    distinct, ones = _symbol_stats(codes, length, n)
    if name in ("onto", "almost-onto"):
        labels = {n: "onto", n - 1: "almost-onto", n - 2: "two-missing"}
        return np.array([labels.get(int(d), "other") for d in distinct], dtype=object)
    diff = np.abs(length - 2 * ones)
    labels = {0: "equitable", 1: "one-inequitable", 2: "two-inequitable", 3: "three-inequitable"}
    return np.array([labels.get(int(d), "other") for d in diff], dtype=object)


def expected_degrees(spec: ClassSpec) -> dict[str, int]:
    """In/out degree each vertex kind must have for the class's graph."""
    name, k, n = spec.class_name, spec.k, spec.n
    if name == "all-words":
        return {"all-words": n}
    if name == "injective":
        return {"injective": n - (k - 1)}
    if name == "onto":
        return {"onto": n, "almost-onto": 1}
    if name == "equitable":
        return {"one-inequitable": 1}
    if name == "one-inequitable":
        return {"equitable": 2, "two-inequitable": 1}
    return {}


@dataclass(frozen=True)
class DegreeRange:
    in_range: tuple[int, int]
    out_range: tuple[int, int]
    count: int

    @property
    def constant(self) -> tuple[int, int] | None:
        """(in, out) when both degrees are the same for every vertex of the kind."""
        (a, b), (c, d) = self.in_range, self.out_range
        return (a, c) if a == b and c == d else None


@dataclass(frozen=True)
class DegreeAudit:
    balanced: bool
    summary: dict[str, DegreeRange]
    offenders: list[Word] = field(default_factory=list)
    dichotomy_holds: bool = True


def audit_degrees(g: TransitionGraph) -> DegreeAudit:
    ins, outs = g.in_degree, g.out_degree
    bad = np.nonzero(ins != outs)[0]
    kinds = vertex_kinds(g.spec, g.vertex_codes)
    summary = {}
    for kind in sorted(set(kinds)):
        sel = kinds == kind
        i, o = ins[sel], outs[sel]
        summary[kind] = DegreeRange((int(i.min()), int(i.max())), (int(o.min()), int(o.max())), int(sel.sum()))
    expected = expected_degrees(g.spec)
    dichotomy = bool(expected) and set(summary) <= set(expected) and all(
        summary[kind].constant == (expected[kind], expected[kind]) for kind in summary
    )
    return DegreeAudit(
        balanced=len(bad) == 0,
        summary=summary,
        offenders=[g.vertex(int(v)) for v in bad],
        dichotomy_holds=dichotomy,
    )


# -- connectivity ---------------------------------------------------------


class Connectivity(NamedTuple):
    connected: bool
    witness: tuple[Word, Word] | None
    components: int


def component_labels(g: TransitionGraph) -> tuple[int, np.ndarray]:
    """Weakly connected components of the vertex set."""
    V = g.vertex_count
    adj = coo_matrix((np.ones(g.edge_count, dtype=np.int8), (g.edge_src, g.edge_dst)), shape=(V, V))
    return connected_components(adj, directed=True, connection="weak")


def is_connected(g: TransitionGraph) -> Connectivity:
    count, labels = component_labels(g)
    if count <= 1:
        return Connectivity(True, None, count)
    other = int(np.argmax(labels != labels[0]))
    return Connectivity(False, (g.vertex(0), g.vertex(other)), count)


# -- Eulerian circuits and U-cycles ---------------------------------------


@dataclass(frozen=True)
class UCycle:
    spec: ClassSpec
    symbols: Word

    @property
    def length(self) -> int:
        return self.symbols.length

    def __str__(self):
        return self.spec.format(self.symbols)


def circuit_edges(g: TransitionGraph, start: int = 0) -> list[int]:
    """Hierholzer's algorithm; edge ids in circuit order starting at ``start``."""
    ptr = g.out_start[:-1].tolist()
    end = g.out_start[1:].tolist()
    dst = g.edge_dst.tolist()
    vstack = [start]
    estack: list[int] = []
    circuit: list[int] = []
    while vstack:
        v = vstack[-1]
        if ptr[v] < end[v]:
            e = ptr[v]
            ptr[v] += 1
            vstack.append(dst[e])
            estack.append(e)
        else:
            vstack.pop()
            if estack:
                circuit.append(estack.pop())
    circuit.reverse()
    return circuit


def eulerian_circuit(g: TransitionGraph) -> UCycle:
    audit = audit_degrees(g)
    if not audit.balanced:
        raise PreconditionViolation(f"{g.spec}: unbalanced vertices", audit)
    conn = is_connected(g)
    if not conn.connected:
        raise PreconditionViolation(f"{g.spec}: graph is disconnected", conn)
    circuit = circuit_edges(g)
    if len(circuit) != g.edge_count:
        raise PreconditionViolation(f"{g.spec}: circuit used {len(circuit)} of {g.edge_count} edges")
    lead = g.spec.n ** (g.spec.k - 1)
    first = (g.edge_codes[circuit] // lead).tolist()
    return UCycle(g.spec, Word(tuple(first), g.spec.n))


def generate(spec: ClassSpec) -> UCycle:
    return eulerian_circuit(build(spec))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    expected_length: int
    actual_length: int
    duplicated: list[Word]
    foreign: list[Word]  # windows that are not class members
    missing: list[Word]


def verify_ucycle(spec: ClassSpec, candidate: Word) -> VerifyReport:
    """Check that the cyclic k-windows of ``candidate`` list the class exactly once."""
    expected = cardinality(spec)
    if candidate.n != spec.n:
        return VerifyReport(False, expected, candidate.length, [], [], [])
    counts = Counter(cyclic_windows(candidate.symbols, spec.k))
    duplicated = [Word(t, spec.n) for t, c in sorted(counts.items()) if c > 1]
    foreign = [Word(t, spec.n) for t in sorted(counts) if not is_member(spec, Word(t, spec.n))]
    ok = candidate.length == expected and not duplicated and not foreign
    missing = []
    if not ok and expected <= _ORACLE_LIMIT:
        missing = [w for w in enumerate_class(spec) if w.symbols not in counts]
    return VerifyReport(ok, expected, candidate.length, duplicated, foreign, missing)


def existence(spec: ClassSpec) -> ExistenceVerdict:
    try:
        g = build(spec)
    except EmptyClass:
        return ExistenceVerdict(False, "empty-class")
    audit = audit_degrees(g)
    if not audit.balanced:
        return ExistenceVerdict(False, "degree-imbalance", (audit.offenders[0],))
    conn = is_connected(g)
    if not conn.connected:
        return ExistenceVerdict(False, "disconnected", conn.witness)
    return ExistenceVerdict(True, "eulerian-connected")


# -- cycle decomposition of 1-regular graphs ------------------------------


@dataclass(frozen=True, eq=False)
class CycleDecomposition:
    graph: TransitionGraph
    order: np.ndarray  # edge ids, cycle after cycle, each in traversal order
    offsets: np.ndarray  # cycle i is order[offsets[i]:offsets[i+1]]

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.diff(self.offsets)

    @property
    def total_cycles(self) -> int:
        return len(self.offsets) - 1

    @cached_property
    def length_histogram(self) -> dict[int, int]:
        values, counts = np.unique(self.lengths, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}

    def cycle(self, i: int) -> list[Word]:
        return [self.graph.edge_label(int(e)) for e in self.order[self.offsets[i]:self.offsets[i + 1]]]

    @cached_property
    def cycles(self) -> list[list[Word]]:
        return [self.cycle(i) for i in range(self.total_cycles)]

    @cached_property
    def vertex_cycles(self) -> list[list[Word]]:
        """The same cycles written as the vertices each edge leaves."""
        g = self.graph
        return [
            [g.vertex(int(g.edge_src[e])) for e in self.order[self.offsets[i]:self.offsets[i + 1]]]
            for i in range(self.total_cycles)
        ]


def decompose_cycles(g: TransitionGraph) -> CycleDecomposition:
    bad = np.nonzero((g.in_degree != 1) | (g.out_degree != 1))[0]
    if len(bad):
        raise PreconditionViolation(
            f"{g.spec}: {len(bad)} vertices do not have in = out = 1", [g.vertex(int(v)) for v in bad[:10]]
        )
    succ = g.out_start[g.edge_dst].tolist()
    seen = bytearray(g.edge_count)
    order: list[int] = []
    offsets = [0]
    for e0 in range(g.edge_count):
        if seen[e0]:
            continue
        e = e0
        while not seen[e]:
            seen[e] = 1
            order.append(e)
            e = succ[e]
        offsets.append(len(order))
    return CycleDecomposition(g, np.array(order, dtype=np.int64), np.array(offsets, dtype=np.int64))


# -- export ---------------------------------------------------------------


def to_dot(g: TransitionGraph) -> str:
    fmt = g.spec.format
    lines = [f'digraph "{g.spec.class_name} k={g.spec.k} n={g.spec.n}" {{']
    for v in g.vertices:
        lines.append(f'  "{fmt(v)}";')
    for e in range(g.edge_count):
        u = g.vertex(int(g.edge_src[e]))
        v = g.vertex(int(g.edge_dst[e]))
        lines.append(f'  "{fmt(u)}" -> "{fmt(v)}" [label="{fmt(g.edge_label(e))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
