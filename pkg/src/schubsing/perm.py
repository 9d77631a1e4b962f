"""
Permutations of ``{1, ..., n}`` in one-line notation, their rank tables,
inversion length, Bruhat order and transposition moves.

Everything here is 1-based: ``w(i)`` is the value at position ``i`` and
row 1 is the top of the permutation diagram.

>>> w = parse_permutation("4231")
>>> length(w), str(w)
(5, '4,2,3,1')
>>> rank_table(w)[2, 3]
1
>>> bruhat_leq(parse_permutation("2413"), w)
True
"""

from __future__ import annotations

import functools
import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .exceptions import (
    OracleCapError,
    PermutationError,
    PreconditionError,
    SizeMismatchError,
)

__all__ = [
    "Permutation", "RankTable", "Transposition", "SnTables",
    "make_permutation", "parse_permutation", "identity", "longest",
    "rank_table", "rank_array", "length", "bruhat_leq",
    "apply_transposition", "interval_below", "covers_down",
    "diagonal_symmetries", "inverse", "rotate180", "all_permutations",
    "sn_tables", "oracle_cap", "check_cap",
    "INTERVAL_CAP", "DEFAULT_ORACLE_CAP", "ORACLE_CAP_ENV",
]

# interval_below refuses sizes above this unless told otherwise
INTERVAL_CAP = 8

DEFAULT_ORACLE_CAP = 7
ORACLE_CAP_ENV = "SCHUBSING_ORACLE_CAP"


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n, stored as its one-line word.

    Ordering is lexicographic on the word, which is the canonical order used
    for every sorted output in the package.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.word, tuple):
            object.__setattr__(self, "word", tuple(self.word))
        _validate(self.word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"

    def position_of(self, value: int) -> int:
        """1-based position holding ``value`` (i.e. ``w^{-1}(value)``)."""
        return self.word.index(value) + 1


def _validate(word: tuple[int, ...]) -> None:
    if len(word) == 0:
        raise PermutationError("empty permutation")
    n = len(word)
    seen = set()
    for x in word:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise PermutationError(f"non-integer entry {x!r}")
        if not 1 <= x <= n:
            raise PermutationError(f"value {x} out of range 1..{n}")
        if x in seen:
            raise PermutationError(f"duplicate value {x}")
        seen.add(x)


def make_permutation(word: Iterable[int] | Permutation) -> Permutation:
    """Validate ``word`` and wrap it as a :class:`Permutation`."""
    if isinstance(word, Permutation):
        return word
    return Permutation(tuple(int(x) if isinstance(x, np.integer) else x for x in word))


_COMPACT = re.compile(r"^[1-9]+$")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"4231"`` (n <= 9 only), ``"4, 2, 3, 1"`` or ``"[4,2,3,1]"``.

    >>> parse_permutation(" 3 , 1,2 ")
    Permutation([3, 1, 2])
    """
    s = text.strip()
    if len(s) >= 2 and s[0] + s[-1] in ("[]", "()"):
        s = s[1:-1].strip()
    if not s:
        raise PermutationError("empty permutation text")
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
        if any(not p.isdigit() for p in parts):
            raise PermutationError(f"malformed permutation text {text!r}")
        return make_permutation(int(p) for p in parts)
    if _COMPACT.match(s):
        return make_permutation(int(c) for c in s)
    raise PermutationError(f"malformed permutation text {text!r}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def _same_size(v: Permutation, w: Permutation) -> None:
    if v.n != w.n:
        raise SizeMismatchError(f"sizes differ: {v.n} vs {w.n}")


# ---------------------------------------------------------------------------
# rank tables

def rank_array(word: Sequence[int]) -> np.ndarray:
    """Padded rank array ``r`` of shape (n+1, n+1) with ``r[p, q]`` the count
    of ``i <= p`` with ``word[i] <= q``; row 0 and column 0 are zero."""
    n = len(word)
    m = np.zeros((n + 1, n + 1), dtype=np.int16)
    m[np.arange(1, n + 1), np.asarray(word, dtype=np.intp)] = 1
    return m.cumsum(0).cumsum(1).astype(np.int16)


@dataclass(frozen=True, eq=False)
class RankTable:
    """Rank function of a permutation, indexed 1-based as ``table[p, q]``."""

    n: int
    r: np.ndarray  # padded (n+1, n+1); r[0, :] = r[:, 0] = 0

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if not (1 <= p <= self.n and 1 <= q <= self.n):
            raise IndexError(f"cell {pq} outside 1..{self.n}")
        return int(self.r[p, q])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.r, other.r)

    def __hash__(self):
        return hash((self.n, self.r.tobytes()))

    @property
    def values(self) -> np.ndarray:
        """Unpadded n x n view; ``values[p-1, q-1] == table[p, q]``."""
        return self.r[1:, 1:]


@functools.lru_cache(maxsize=65536)
def _cached_rank(word: tuple[int, ...]) -> np.ndarray:
    arr = rank_array(word)
    arr.flags.writeable = False
    return arr


def rank_table(w: Permutation) -> RankTable:
    """The table ``r_w(p, q) = #{i <= p : w(i) <= q}``; O(n^2)."""
    return RankTable(w.n, _cached_rank(w.word))


def length(w: Permutation | Sequence[int]) -> int:
    """Number of inversions ``i < j`` with ``w(i) > w(j)``."""
    word = w.word if isinstance(w, Permutation) else tuple(w)
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """``v <= w`` in Bruhat order, tested as ``r_v >= r_w`` everywhere."""
    _same_size(v, w)
    return bool((_cached_rank(v.word) >= _cached_rank(w.word)).all())


# ---------------------------------------------------------------------------
# transpositions and moves

@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition ``t_ij`` acting on positions, ``1 <= i < j``."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise PreconditionError(f"transposition needs 1 <= i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def apply_transposition(v: Permutation, t: Transposition) -> Permutation:
    """``v * t``: swap the entries at positions ``t.i`` and ``t.j``."""
    if t.j > v.n:
        raise PreconditionError(f"transposition {t} out of range for n={v.n}")
    word = list(v.word)
    word[t.i - 1], word[t.j - 1] = word[t.j - 1], word[t.i - 1]
    return Permutation(tuple(word))


def covers_down(w: Permutation) -> list[tuple[Permutation, Transposition]]:
    """All ``(w*t, t)`` with ``length(w*t) == length(w) - 1``.

    A swap of an inversion ``(i, j)`` drops the length by exactly one iff no
    position strictly between holds a value strictly between ``w(j)`` and ``w(i)``.
    """
    word = w.word
    n = w.n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            hi, lo = word[i], word[j]
            if hi < lo:
                continue
            if any(lo < word[k] < hi for k in range(i + 1, j)):
                continue
            t = Transposition(i + 1, j + 1)
            out.append((apply_transposition(w, t), t))
    return out


def inverse(w: Permutation) -> Permutation:
    word = [0] * w.n
    for i, x in enumerate(w.word, start=1):
        word[x - 1] = i
    return Permutation(tuple(word))


def rotate180(w: Permutation) -> Permutation:
    """``w0 * w * w0``: the diagram turned half a turn."""
    n = w.n
    return Permutation(tuple(n + 1 - w.word[n - i] for i in range(1, n + 1)))


def diagonal_symmetries(w: Permutation) -> tuple[Permutation, Permutation]:
    """``(w^{-1}, w0 w w0)``; both preserve Bruhat order and tangent dimensions."""
    return inverse(w), rotate180(w)


# ---------------------------------------------------------------------------
# exhaustive support

def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def oracle_cap() -> int:
    """Largest n accepted by the exhaustive oracle (env override)."""
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise OracleCapError(f"{ORACLE_CAP_ENV}={raw!r} is not an integer") from None


def check_cap(n: int, cap: int | None = None, what: str = "oracle") -> None:
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        hint = f" (set {ORACLE_CAP_ENV} to raise it)" if what == "oracle" else ""
        raise OracleCapError(f"n={n} exceeds the {what} cap of {cap}{hint}")


class SnTables:
    """Read-only precomputed data for all of S_n.

    Built once per n and shared by every exhaustive query: the permutation
    list in lexicographic order, flattened rank tables, lengths, and the
    index of ``v * t_ij`` for every ``v`` and every pair ``i < j``.
    """

    def __init__(self, n: int):
        self.n = n
        self.words = list(itertools.permutations(range(1, n + 1)))
        self.index = {p: k for k, p in enumerate(self.words)}
        size = len(self.words)
        self.ranks = np.empty((size, n + 1, n + 1), dtype=np.int8)
        for k, p in enumerate(self.words):
            self.ranks[k] = rank_array(p)
        self.flat = self.ranks[:, 1:, 1:].reshape(size, n * n)
        self.lengths = np.array([length(p) for p in self.words], dtype=np.int32)
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.swap = np.empty((size, len(self.pairs)), dtype=np.int32)
        for k, p in enumerate(self.words):
            for c, (i, j) in enumerate(self.pairs):
                q = list(p)
                q[i], q[j] = q[j], q[i]
                self.swap[k, c] = self.index[tuple(q)]
        for arr in (self.ranks, self.flat, self.lengths, self.swap):
            arr.flags.writeable = False

    def __len__(self):
        return len(self.words)

    def below_mask(self, k: int) -> np.ndarray:
        """Boolean mask of all v with v <= words[k]."""
        return (self.flat >= self.flat[k]).all(axis=1)

    def tangent_dims(self, k: int, below: np.ndarray | None = None) -> np.ndarray:
        """``m(w, v)`` for w = words[k] and every v (meaningful for v <= w)."""
        if below is None:
            below = self.below_mask(k)
        return below[self.swap].sum(axis=1)


@functools.lru_cache(maxsize=None)
def sn_tables(n: int) -> SnTables:
    return SnTables(n)


def interval_below(w: Permutation, cap: int = INTERVAL_CAP) -> set[Permutation]:
    """``{v : v <= w}``, by filtering all of S_n through rank domination."""
    if w.n > cap:
        raise OracleCapError(f"interval_below refuses n={w.n} above cap {cap}")
    tab = sn_tables(w.n)
    mask = tab.below_mask(tab.index[w.word])
    return {Permutation(tab.words[k]) for k in np.flatnonzero(mask)}
