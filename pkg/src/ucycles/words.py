"""Fixed-length words over the alphabet {0, ..., n-1}.

Symbols are stored 0-based. Rendering takes an ``offset`` so that classes
over {1, ..., n} display as 1-based digits while binary classes show 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArgument


@dataclass(frozen=True, slots=True)
class Word:
    symbols: tuple[int, ...]
    n: int

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.n < 1:
            raise InvalidArgument(f"alphabet size must be positive, got {self.n}")
        if not self.symbols:
            raise InvalidArgument("words have length >= 1")
        for s in self.symbols:
            if not 0 <= s < self.n:
                raise InvalidArgument(f"symbol {s} outside alphabet of size {self.n}")

    @classmethod
    def _make(cls, symbols: tuple[int, ...], n: int) -> Word:
        """Construct without validation; callers guarantee the invariants."""
        w = object.__new__(cls)
        object.__setattr__(w, "symbols", symbols)
        object.__setattr__(w, "n", n)
        return w

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __lt__(self, other: Word) -> bool:
        return self.symbols < other.symbols

    def __str__(self):
        return format_word(self)

    def counts(self) -> list[int]:
        """Occurrences of each alphabet symbol."""
        out = [0] * self.n
        for s in self.symbols:
            out[s] += 1
        return out


def word(symbols: Iterable[int], n: int) -> Word:
    return Word(tuple(symbols), n)


def window(w: Word, start: int, size: int) -> Word:
    """Read ``size`` symbols of ``w`` cyclically, beginning at ``start``."""
    if not 1 <= size <= w.length:
        raise InvalidArgument(f"window size {size} not in [1, {w.length}]")
    if not 0 <= start < w.length:
        raise InvalidArgument(f"start {start} not in [0, {w.length})")
    s = w.symbols
    end = start + size
    if end <= len(s):
        return Word._make(s[start:end], w.n)
    return Word._make(s[start:] + s[: end - len(s)], w.n)


def rotate(w: Word, shift: int) -> Word:
    """Cyclic left shift by ``shift`` (negative shifts rotate right)."""
    t = shift % w.length
    if t == 0:
        return w
    return Word._make(w.symbols[t:] + w.symbols[:t], w.n)


def minimal_period(w: Word) -> int:
    length = w.length
    s = w.symbols
    for p in range(1, length + 1):
        if length % p == 0 and s[p:] + s[:p] == s:
            return p
    return length  # unreachable: p = length always matches


def cyclic_windows(symbols: Sequence[int], size: int) -> list[tuple[int, ...]]:
    """All ``len(symbols)`` cyclic windows of ``size``; size may exceed the length."""
    m = len(symbols)
    return [tuple(symbols[(i + j) % m] for j in range(size)) for i in range(m)]


def format_word(w: Word, offset: int = 1) -> str:
    """Digit string when every symbol displays as one digit, else comma-separated."""
    if w.n - 1 + offset <= 9:
        return "".join(str(s + offset) for s in w.symbols)
    return ",".join(str(s + offset) for s in w.symbols)


def parse_word(text: str, n: int, offset: int = 1) -> Word:
    text = text.strip()
    if not text:
        raise InvalidArgument("empty word")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        values = [int(p) - offset for p in parts]
    except ValueError:
        raise InvalidArgument(f"cannot parse word {text!r}") from None
    return Word(tuple(values), n)
