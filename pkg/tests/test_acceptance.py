"""Exit criteria. Each test prints one PASS/FAIL line with its runtime."""

import itertools
import random
import time
from contextlib import contextmanager
from math import comb

import numpy as np
import pytest

from conftest import brute_class, valid_specs
from ucycles import cli
from ucycles.census import census_table, cross_check
from ucycles.classes import CLASS_NAMES, ClassSpec, cardinality, enumerate_class
from ucycles.connect import PathTrace, connect_inequitable, connect_onto, validate_trace
from ucycles.graph import audit_degrees, build, decompose_cycles, existence, generate, verify_ucycle
from ucycles.words import Word, minimal_period

A_SEQ = [1, 2, 4, 10, 26, 80, 246, 810, 2704, 9252, 32066, 112720]
B_SEQ = [1, 1, 3, 8, 25, 75, 245, 800, 2700, 9225, 32065, 112632]
WORKED_ROUTE = "13425 34254 42541 25413 54132 41325 13254 32541 25412 54123 41235".split()


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None:
                assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n[criterion {number}] FAIL  {title} ({elapsed:.2f}s): {exc}")
            raise
        with capsys.disabled():
            bound = f", limit {limit}s" if limit is not None else ""
            print(f"\n[criterion {number}] PASS  {title} ({elapsed:.2f}s{bound})")

    return run


def surjections(k, n):
    """Inclusion-exclusion count, restated here independently of the library."""
    return sum((-1) ** i * comb(n, i) * (n - i) ** k for i in range(n + 1))


def test_c1_debruijn_baseline(criterion, tmp_path):
    spec = ClassSpec("all-words", 3, 2)
    generate(spec)  # warm caches so the timed run measures the algorithm
    with criterion(1, "de Bruijn k=3 n=2 cycle of length 8; 11100010 verifies", 0.1):
        cycle = generate(spec)
        assert cycle.length == 8 and verify_ucycle(spec, cycle.symbols).ok
        assert verify_ucycle(spec, Word((1, 1, 1, 0, 0, 0, 1, 0), 2)).ok
    out = tmp_path / "c.txt"
    assert cli.main(["generate", "--class", "all-words", "--k", "3", "--n", "2", "--out", str(out)]) == 0
    assert verify_ucycle(spec, spec.parse(out.read_text())).ok


def test_c2_onto_existence(criterion):
    with criterion(2, "onto U-cycles for 2 <= n < k <= 7; disconnected at k = n in {3,4,5}", 30):
        for n in range(2, 7):
            for k in range(n + 1, 8):
                spec = ClassSpec("onto", k, n)
                cycle = generate(spec)
                assert cycle.length == surjections(k, n), spec
                assert verify_ucycle(spec, cycle.symbols).ok, spec
        assert surjections(4, 3) == len(brute_class(ClassSpec("onto", 4, 3))) == 36
        for n in (3, 4, 5):
            v = existence(ClassSpec("onto", n, n))
            assert (v.exists, v.reason) == (False, "disconnected") and len(v.witness) == 2


def test_c3_injective_dichotomy(criterion):
    with criterion(3, "injective U-cycles for n > k; n = k = 3 splits into the two 3-cycles", 5):
        for k, n in [(2, 3), (2, 4), (3, 4), (3, 5)]:
            spec = ClassSpec("injective", k, n)
            cycle = generate(spec)
            assert cycle.length == len(brute_class(spec))
            assert verify_ucycle(spec, cycle.symbols).ok
        spec = ClassSpec("injective", 3, 3)
        dec = decompose_cycles(build(spec))
        found = sorted(tuple(spec.format(v) for v in c) for c in dec.vertex_cycles)

        def canonical(cycle):
            i = cycle.index(min(cycle))
            return tuple(cycle[i:] + cycle[:i])

        expected = sorted(canonical(c) for c in (["12", "23", "31"], ["21", "13", "32"]))
        assert found == expected


def test_c4_one_inequitable(criterion):
    with criterion(4, "1-inequitable U-cycles for k in {3,5,7,9,11}", 30):
        lengths = []
        for k in (3, 5, 7, 9, 11):
            spec = ClassSpec("one-inequitable", k, 2)
            cycle = generate(spec)
            assert cycle.length == 2 * comb(k, k // 2) == len(brute_class(spec))
            assert verify_ucycle(spec, cycle.symbols).ok
            lengths.append(cycle.length)
        assert lengths == [6, 20, 70, 252, 924]


def test_c5_census(criterion):
    with criterion(5, "census matches both published sequences; cross_check k <= 16 and k = 24", 60):
        table = census_table(24)
        assert [r.a_k for r in table] == A_SEQ
        assert [r.b_k for r in table] == B_SEQ
        for k in list(range(2, 17, 2)) + [24]:
            ok, predicted, observed = cross_check(k)
            assert ok, (k, predicted, observed)


def test_c6_constructive_connectivity(criterion):
    with criterion(6, "worked 13425->41235 route validates; connect_onto/connect_inequitable over all required pairs", 60):
        spec = ClassSpec("onto", 6, 5)
        g = build(spec)
        route = [spec.parse(x) for x in WORKED_ROUTE]
        assert validate_trace(PathTrace(spec, route, [None] * len(route)), g)
        checked = 0
        for k, n in [(5, 3), (5, 4)]:
            s = ClassSpec("onto", k, n)
            h = build(s)
            for a, b in itertools.product(h.vertices, repeat=2):
                t = connect_onto(a, b, s)
                assert t.steps[0] == a and t.steps[-1] == b and validate_trace(t, h)
                checked += 1
        rng = random.Random(2024)
        for _ in range(1000):
            a, b = rng.choice(g.vertices), rng.choice(g.vertices)
            t = connect_onto(a, b, spec)
            assert t.steps[0] == a and t.steps[-1] == b and validate_trace(t, g)
        for k in (3, 5, 7):
            s = ClassSpec("one-inequitable", k, 2)
            h = build(s)
            for a, b in itertools.product(h.vertices, repeat=2):
                t = connect_inequitable(a, b, s)
                assert t.steps[0] == a and t.steps[-1] == b and validate_trace(t, h)
                checked += 1
        assert checked == 78**2 + 168**2 + 4**2 + 14**2 + 50**2


def _periods(codes, k):
    """Minimal rotation period of k-bit codes, vectorized."""
    mask = (1 << k) - 1
    out = np.zeros(codes.shape, dtype=np.int64)
    for d in range(1, k + 1):
        if k % d:
            continue
        rot = ((codes << d) | (codes >> (k - d))) & mask
        out[(out == 0) & (rot == codes)] = d
    return out


def test_c7_property_suites(criterion):
    with criterion(7, "degree dichotomy, period/cycle length, census identities, oracle agreement", None):
        for n in range(2, 7):
            for k in range(n + 1, 8):
                a = audit_degrees(build(ClassSpec("onto", k, n)))
                assert a.balanced and a.dichotomy_holds
                assert a.summary["onto"].constant == (n, n)
                if "almost-onto" in a.summary:
                    assert a.summary["almost-onto"].constant == (1, 1)
        for k in (3, 5, 7, 9, 11, 13):
            a = audit_degrees(build(ClassSpec("one-inequitable", k, 2)))
            assert a.balanced and a.dichotomy_holds
            assert a.summary["equitable"].constant == (2, 2)
            assert a.summary["two-inequitable"].constant == (1, 1)

        for k in list(range(2, 17, 2)) + [24]:
            dec = decompose_cycles(build(ClassSpec("equitable", k, 2)))
            if k <= 16:
                for cycle in dec.cycles:
                    assert all(minimal_period(w) == len(cycle) for w in cycle)
            codes = dec.graph.edge_codes[dec.order].astype(np.int64)
            assert np.array_equal(_periods(codes, k), np.repeat(dec.lengths, dec.lengths))

        for r in census_table(24):
            assert r.a_k == sum(r.divisor_detail.values())
            assert sum(d * b for d, b in r.divisor_detail.items()) == comb(r.k, r.k // 2)

        specs = valid_specs(CLASS_NAMES, max_n=10, max_k=20, limit=10**6)
        specs += [ClassSpec(c, k, n) for c in ("all-words", "injective") for k, n in [(2, 1000), (3, 100), (4, 31)]]
        specs += [ClassSpec("almost-onto", 2, 1000), ClassSpec("almost-onto", 3, 100)]
        for spec in specs:
            assert sum(1 for _ in enumerate_class(spec)) == cardinality(spec), spec
