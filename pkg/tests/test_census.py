from math import comb

import pytest

from ucycles.census import census, census_table, cross_check, even_divisors, format_table
from ucycles.errors import InvalidArgument

A_SEQ = [1, 2, 4, 10, 26, 80, 246, 810, 2704, 9252, 32066, 112720]
B_SEQ = [1, 1, 3, 8, 25, 75, 245, 800, 2700, 9225, 32065, 112632]


def brute_cycle_lengths(k):
    """Count rotation classes of balanced binary k-words by their size."""
    seen, hist = set(), {}
    for x in range(2**k):
        if bin(x).count("1") != k // 2 or x in seen:
            continue
        s = format(x, f"0{k}b")
        orbit = {int(s[i:] + s[:i], 2) for i in range(k)}
        seen |= orbit
        hist[len(orbit)] = hist.get(len(orbit), 0) + 1
    return hist


def test_census_examples():
    r = census(4)
    assert (r.a_k, r.b_k, r.divisor_detail) == (2, 1, {2: 1, 4: 1})
    r = census(2)
    assert (r.a_k, r.b_k) == (1, 1)
    r = census(24)
    assert (r.a_k, r.b_k) == (112720, 112632)


def test_table_examples():
    assert [r.a_k for r in census_table(8)] == [1, 2, 4, 10]
    t = census_table(2)
    assert len(t) == 1 and t[0].a_k == t[0].b_k == 1
    assert [r.b_k for r in census_table(12)] == [1, 1, 3, 8, 25, 75]


def test_published_sequences():
    table = census_table(24)
    assert [r.a_k for r in table] == A_SEQ
    assert [r.b_k for r in table] == B_SEQ


@pytest.mark.parametrize("k", range(2, 19, 2))
def test_recursion_matches_orbit_enumeration(k):
    report = census(k)
    hist = brute_cycle_lengths(k)
    assert {d: b for d, b in report.divisor_detail.items() if b} == hist


@pytest.mark.parametrize("k", range(2, 81, 2))
def test_report_identities(k):
    r = census(k)
    assert set(r.divisor_detail) == set(d for d in range(2, k + 1, 2) if k % d == 0)
    assert r.a_k == sum(r.divisor_detail.values())
    assert sum(d * b for d, b in r.divisor_detail.items()) == comb(k, k // 2) == r.equitable_count
    assert all(b >= 0 for b in r.divisor_detail.values())


@pytest.mark.parametrize("bad", [0, 3, -4, 2.0, True, "4"])
def test_census_rejects(bad):
    with pytest.raises(InvalidArgument):
        census(bad)


@pytest.mark.parametrize("k,a", [(4, 2), (6, 4), (10, 26)])
def test_cross_check_examples(k, a):
    ok, predicted, observed = cross_check(k)
    assert ok and sum(observed.values()) == a
    if k == 4:
        assert observed == {4: 1, 2: 1}


def test_even_divisors():
    assert even_divisors(24) == [2, 4, 6, 8, 12, 24]
    assert even_divisors(2) == [2]


def test_format_table_columns():
    lines = format_table(census_table(6)).splitlines()
    assert lines[0].split() == ["k", "C(k,k/2)", "a_k", "b_k"]
    assert lines[-1].split() == ["6", "20", "4", "3"]
    assert len({len(ln) for ln in lines}) == 1
