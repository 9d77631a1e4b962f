"""
Pattern occurrences, the pattern smoothness criterion, minimal
configurations and the diagram surgery producing the set C(w).

A diagram point is ``(r, w(r))`` with rows numbered top-down. "SW-NE"
chains therefore list increasing positions with *decreasing* values.

Minimal configurations come in three kinds:

``M4231``
    Corners ``i < l`` with ``w(i) > w(l)``. The points strictly inside the
    rectangle they span must split as ``D`` then ``U``, every point of ``D``
    north-west of every point of ``U``. The NW arrow is the north-east
    frontier of ``D`` (its maximal points), the SE arrow the south-west
    frontier of ``U``. Any other point of ``D`` or ``U`` lies behind an
    arrow, outside the surgery zone.
``M3412_I``
    A 3412 occurrence whose rectangle holds points only in the NW and SE
    corner cells (plus, freely, the NE and SW corner cells, which the zone
    never reaches). The arrows are the frontiers of those two cells facing
    the center; each may be empty.
``M3412_II``
    A 3412 occurrence whose rectangle holds, apart from the NE and SW corner
    cells, only a nonempty SW-NE chain in the central cell.

The surgery is performed as the sequence of elementary moves (each a
Bruhat cover) that realizes it, and the zone is the sum of the boxes of
those moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

import numpy as np

from .config import RegionMask, transposition_region
from .exceptions import SurgeryError
from .perm import Permutation, Transposition, _cached_rank, apply_transposition

__all__ = [
    "PatternOccurrence", "MinimalConfiguration", "SurgeryResult",
    "find_occurrences", "is_smooth_LS", "smoothness_witness",
    "minimal_configurations", "surgery", "components_C",
    "P4231", "P3412", "M4231", "M3412_I", "M3412_II",
]

P4231 = "P4231"
P3412 = "P3412"
M4231 = "M4231"
M3412_I = "M3412_I"
M3412_II = "M3412_II"

PatternKind = Literal["P4231", "P3412"]
ConfigKind = Literal["M4231", "M3412_I", "M3412_II"]


@dataclass(frozen=True, order=True)
class PatternOccurrence:
    positions: tuple[int, int, int, int]
    kind: str

    def __str__(self) -> str:
        return f"{self.kind[1:]} at positions {','.join(map(str, self.positions))}"


def _matches(kind: str, a: int, b: int, c: int, d: int) -> bool:
    if kind == P4231:
        return d < b < c < a
    if kind == P3412:
        return c < d < a < b
    raise ValueError(f"unknown pattern kind {kind!r}")


def find_occurrences(w: Permutation, kind: str) -> list[PatternOccurrence]:
    """All quadruples ``i < j < k < l`` realizing ``kind``, lexicographically."""
    word = w.word
    return [
        PatternOccurrence(tuple(p + 1 for p in q), kind)
        for q in combinations(range(w.n), 4)
        if _matches(kind, *(word[p] for p in q))
    ]


def smoothness_witness(w: Permutation) -> PatternOccurrence | None:
    """Lexicographically first 4231 or 3412 occurrence, or None if smooth."""
    word = w.word
    for q in combinations(range(w.n), 4):
        vals = [word[p] for p in q]
        for kind in (P4231, P3412):
            if _matches(kind, *vals):
                return PatternOccurrence(tuple(p + 1 for p in q), kind)
    return None


def is_smooth_LS(w: Permutation) -> bool:
    """X_w is smooth iff w avoids both 4231 and 3412."""
    return smoothness_witness(w) is None


# ---------------------------------------------------------------------------
# minimal configurations

@dataclass(frozen=True)
class MinimalConfiguration:
    """A minimal configuration together with the moves of its surgery.

    Chains hold positions in increasing order (values decreasing). For
    ``M4231`` the chains exclude the pivot points, so ``len(nw_chain) + 1``
    points sit on the NW arrow.
    """

    kind: str
    pivots: PatternOccurrence
    nw_chain: tuple[int, ...]
    se_chain: tuple[int, ...]
    central_chain: tuple[int, ...]
    moves: tuple[Transposition, ...]
    zone: RegionMask

    @property
    def chain_sizes(self) -> tuple[int, int]:
        if self.kind == M3412_II:
            return len(self.central_chain), 0
        return len(self.nw_chain), len(self.se_chain)

    def expected_jump(self) -> int:
        """``m(w, u) - l(w)`` predicted for the surgery result."""
        p, q = self.chain_sizes
        if self.kind == M4231:
            return (p + 1) * (q + 1)
        if self.kind == M3412_I:
            return p + q + 1
        return 1


@dataclass(frozen=True)
class SurgeryResult:
    u: Permutation
    zone: RegionMask


def _frontier_max(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Points not north-west of another point of the list (rows ascending)."""
    out = []
    best = 0
    for r, v in reversed(points):
        if v > best:
            out.append((r, v))
            best = v
    return out[::-1]


def _frontier_min(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Points with no other point of the list to their north-west."""
    out = []
    best = None
    for r, v in points:
        if best is None or v < best:
            out.append((r, v))
            best = v
    return out


def _zone_of(word: tuple[int, ...], moves: list[Transposition]) -> RegionMask:
    n = len(word)
    x = Permutation(word)
    acc = np.zeros((n + 1, n + 1), dtype=np.int16)
    for t in moves:
        for p, q in transposition_region(x, t).cells:
            acc[p, q] += 1
        x = apply_transposition(x, t)
    if acc.max() > 1:
        raise SurgeryError(f"move sequence {moves} on {word} overlaps itself")
    return RegionMask.from_array(acc)


def _moves_4231(i, nw, se, l):
    # lower the top-right corner along the NW arrow, walk it left across the
    # SE arrow, then exchange with the bottom-left corner
    moves = []
    cur = i
    for r in nw:
        moves.append(Transposition(cur, r))
        cur = r
    for r in se:
        moves.append(Transposition(cur, r))
    moves.append(Transposition(cur, l))
    return moves


def _moves_3412_I(i, j, k, l, nw, se):
    moves = []
    cur = i
    for r in list(nw) + [k]:
        moves.append(Transposition(cur, r))
        cur = r
    moves.append(Transposition(j, k))
    for r in se:
        moves.append(Transposition(k, r))
    moves.append(Transposition(k, l))
    return moves


def _moves_3412_II(i, j, k, l, central):
    moves = [Transposition(i, r) for r in list(central) + [k]]
    moves.append(Transposition(k, l))
    moves.extend(Transposition(r, l) for r in reversed(central))
    moves.append(Transposition(j, l))
    return moves


def _is_sw_ne(points) -> bool:
    return all(points[s][1] > points[s + 1][1] for s in range(len(points) - 1))


def _configs_4231(word: tuple[int, ...]):
    n = len(word)
    for i in range(1, n + 1):
        a = word[i - 1]
        for l in range(i + 1, n + 1):
            d = word[l - 1]
            if a < d:
                continue
            inside = [(r, word[r - 1]) for r in range(i + 1, l) if d < word[r - 1] < a]
            for s in range(1, len(inside)):
                lower, upper = inside[:s], inside[s:]
                if max(v for _, v in lower) > min(v for _, v in upper):
                    continue
                arrow_nw = _frontier_max(lower)
                arrow_se = _frontier_min(upper)
                nw_rows = tuple(r for r, _ in arrow_nw)
                se_rows = tuple(r for r, _ in arrow_se)
                piv = PatternOccurrence((i, nw_rows[0], se_rows[0], l), P4231)
                moves = _moves_4231(i, nw_rows, se_rows, l)
                yield M4231, piv, nw_rows[1:], se_rows[1:], (), moves


def _configs_3412(word: tuple[int, ...]):
    n = len(word)
    for q in combinations(range(1, n + 1), 4):
        i, j, k, l = q
        a, b, c, d = (word[p - 1] for p in q)
        if not c < d < a < b:
            continue
        inner = [
            (r, word[r - 1]) for r in range(i + 1, l)
            if c < word[r - 1] < b
            and not (r < j and word[r - 1] > a)  # NE cell, outside every zone
            and not (r > k and word[r - 1] < d)  # SW cell
        ]
        piv = PatternOccurrence(q, P3412)
        nw_cell = [(r, v) for r, v in inner if r < j and v < d]
        se_cell = [(r, v) for r, v in inner if r > k and v > a]
        if len(nw_cell) + len(se_cell) == len(inner):
            nw_rows = tuple(r for r, _ in _frontier_max(nw_cell))
            se_rows = tuple(r for r, _ in _frontier_min(se_cell))
            yield M3412_I, piv, nw_rows, se_rows, (), _moves_3412_I(i, j, k, l, nw_rows, se_rows)
        center = [(r, v) for r, v in inner if j < r < k and d < v < a]
        # an empty rectangle is already reported as M3412_I
        if center and len(center) == len(inner) and _is_sw_ne(center):
            rows = tuple(r for r, _ in center)
            yield M3412_II, piv, (), (), rows, _moves_3412_II(i, j, k, l, rows)


def minimal_configurations(w: Permutation) -> list[MinimalConfiguration]:
    """Every minimal 4231 / 3412 configuration of ``w``, sorted by pivots then kind.

    Empty exactly when ``w`` avoids both patterns.
    """
    out = []
    for gen in (_configs_4231, _configs_3412):
        for kind, piv, nw, se, central, moves in gen(w.word):
            out.append(MinimalConfiguration(
                kind, piv, nw, se, central, tuple(moves), _zone_of(w.word, moves),
            ))
    out.sort(key=lambda c: (c.pivots.positions, c.kind, c.nw_chain, c.se_chain))
    return out


def surgery(w: Permutation, cfg: MinimalConfiguration) -> SurgeryResult:
    """Apply the configuration's moves and confirm ``r_u = r_w + chi_zone``."""
    u = w
    for t in cfg.moves:
        u = apply_transposition(u, t)
    delta = _cached_rank(u.word).astype(np.int16) - _cached_rank(w.word)
    if not np.array_equal(delta, cfg.zone.array()):
        raise SurgeryError(f"rank change of {w} -> {u} does not match the zone of {cfg.kind}")
    if u == w:
        raise SurgeryError(f"surgery on {w} left it unchanged")
    return SurgeryResult(u, cfg.zone)


def components_C(w: Permutation) -> list[Permutation]:
    """The set C(w), deduplicated and sorted lexicographically."""
    return sorted({surgery(w, cfg).u for cfg in minimal_configurations(w)})
