import itertools
from collections import Counter

import networkx as nx
import pytest

from ucycles.classes import ClassSpec


def brute_member(name, k, n, t):
    """Independent restatement of the class definitions via symbol counts."""
    c = Counter(t)
    if name == "all-words":
        return True
    if name == "injective":
        return all(v == 1 for v in c.values())
    if name == "onto":
        return len(c) == n
    if name == "almost-onto":
        return len(c) == n - 1
    zeros, ones = c[0], c[1]
    return abs(zeros - ones) == {"equitable": 0, "one-inequitable": 1, "two-inequitable": 2}[name]


def brute_class(spec):
    return [
        t for t in itertools.product(range(spec.n), repeat=spec.k)
        if brute_member(spec.class_name, spec.k, spec.n, t)
    ]


def nx_graph(spec):
    """Overlap digraph built directly from the brute-force class, with networkx."""
    G = nx.MultiDiGraph()
    for t in brute_class(spec):
        G.add_edge(t[:-1], t[1:], label=t)
    return G


def valid_specs(names, max_n=10, max_k=20, limit=10**6):
    out = []
    for name in names:
        for n in range(1, max_n + 1):
            for k in range(1, max_k + 1):
                if n**k > limit:
                    break
                try:
                    out.append(ClassSpec(name, k, n))
                except ValueError:
                    pass
    return out


@pytest.fixture
def onto65():
    return ClassSpec("onto", 6, 5)
