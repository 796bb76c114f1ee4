"""Function classes: membership predicates, enumerators, closed-form counts.

This layer is deliberately naive (plain Python over tuples) so that it can
serve as the brute-force oracle for the graph and cycle machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator

from .errors import InvalidArgument
from .words import Word, format_word, parse_word

CLASS_NAMES = (
    "all-words",
    "injective",
    "onto",
    "almost-onto",
    "equitable",
    "one-inequitable",
    "two-inequitable",
)
# classes that may be requested as U-cycle targets from the CLI
TARGET_CLASSES = ("all-words", "injective", "onto", "equitable", "one-inequitable")
BINARY_CLASSES = ("equitable", "one-inequitable", "two-inequitable")
# classes over [n] = {1..n} display 1-based
ONE_BASED_CLASSES = ("injective", "onto", "almost-onto")


@dataclass(frozen=True)
class ClassSpec:
    class_name: str
    k: int
    n: int

    def __post_init__(self):
        name, k, n = self.class_name, self.k, self.n
        if name not in CLASS_NAMES:
            raise InvalidArgument(f"unknown class {name!r}; expected one of {', '.join(CLASS_NAMES)}")
        if k < 1 or n < 1:
            raise InvalidArgument(f"k and n must be positive (k={k}, n={n})")
        if name in BINARY_CLASSES and n != 2:
            raise InvalidArgument(f"{name} words are binary; n must be 2")
        if name == "equitable" and (k % 2 or k < 2):
            raise InvalidArgument("equitable requires even k >= 2")
        if name == "one-inequitable" and (k % 2 == 0 or k < 3):
            raise InvalidArgument("one-inequitable requires odd k >= 3")
        if name == "two-inequitable" and k % 2:
            raise InvalidArgument("two-inequitable requires even k")
        if name == "injective" and k > n:
            raise InvalidArgument(f"injective requires k <= n (k={k}, n={n})")
        if name == "onto" and k < n:
            raise InvalidArgument(f"onto requires k >= n (k={k}, n={n})")

    @property
    def offset(self) -> int:
        """Display value of internal symbol 0."""
        return 1 if self.class_name in ONE_BASED_CLASSES else 0

    def parse(self, text: str) -> Word:
        return parse_word(text, self.n, self.offset)

    def format(self, w: Word) -> str:
        return format_word(w, self.offset)

    def __str__(self):
        return f"{self.class_name} k={self.k} n={self.n}"


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    reason: str  # eulerian-connected | degree-imbalance | disconnected | empty-class
    witness: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        if self.exists != (self.reason == "eulerian-connected"):
            raise InvalidArgument(f"inconsistent verdict: exists={self.exists}, reason={self.reason}")


def _member_symbols(name: str, k: int, n: int, symbols) -> bool:
    if name == "all-words":
        return True
    distinct = len(set(symbols))
    if name == "injective":
        return distinct == k
    if name == "onto":
        return distinct == n
    if name == "almost-onto":
        return distinct == n - 1
    ones = sum(symbols)
    diff = abs(k - 2 * ones)
    if name == "equitable":
        return diff == 0
    if name == "one-inequitable":
        return diff == 1
    return diff == 2  # two-inequitable


def is_member(spec: ClassSpec, w: Word) -> bool:
    if w.length != spec.k:
        raise InvalidArgument(f"word length {w.length} != k={spec.k}")
    if w.n != spec.n:
        raise InvalidArgument(f"word alphabet {w.n} != n={spec.n}")
    return _member_symbols(spec.class_name, spec.k, spec.n, w.symbols)


def enumerate_class(spec: ClassSpec) -> Iterator[Word]:
    """Every member exactly once, in lexicographic order."""
    name, k, n = spec.class_name, spec.k, spec.n
    if name == "injective":
        source = itertools.permutations(range(n), k)
    else:
        source = (
            t for t in itertools.product(range(n), repeat=k)
            if _member_symbols(name, k, n, t)
        )
    for t in source:
        yield Word._make(t, n)


def onto_count(k: int, n: int) -> int:
    """Surjections [k] -> [n] by inclusion-exclusion."""
    return sum((-1) ** i * comb(n, i) * (n - i) ** k for i in range(n + 1))


def cardinality(spec: ClassSpec) -> int:
    name, k, n = spec.class_name, spec.k, spec.n
    if name == "all-words":
        return n**k
    if name == "injective":
        return factorial(n) // factorial(n - k)
    if name == "onto":
        return onto_count(k, n)
    if name == "almost-onto":
        return n * onto_count(k, n - 1)
    if name == "equitable":
        return comb(k, k // 2)
    if name == "one-inequitable":
        return 2 * comb(k, k // 2)
    return 2 * comb(k, k // 2 - 1)
