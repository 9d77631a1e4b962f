"""Type A and type B configurations along a lowering transposition.

For ``u = v * t_kl`` with ``v(k) > v(l)`` and ``v <= w`` the jump
``m(w, u) - m(w, v)`` equals the number of type A plus type B
configurations found here.

Rectangles are half-open boxes: the rectangle spanned by the diagram points
``(i, v(i))`` and ``(j, v(j))`` is rows ``[i, j-1]`` x columns
``[min, max-1]``, which is exactly where ``r_{v t_ij}`` differs from ``r_v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import PreconditionError
from .perm import (
    Permutation,
    Transposition,
    _cached_rank,
    _same_size,
    apply_transposition,
    bruhat_leq,
    rotate180,
)
from .tangent import tangent_dim

__all__ = [
    "RegionMask", "TypeAConfig", "TypeBConfig", "transposition_region",
    "type_A_configs", "type_B_configs", "configuration_count", "check_prop2",
]


@dataclass(frozen=True)
class RegionMask:
    """A set of lattice cells ``(p, q)`` in ``[1, n]^2``."""

    n: int
    cells: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @classmethod
    def box(cls, n: int, r0: int, r1: int, c0: int, c1: int) -> "RegionMask":
        """Closed index ranges ``[r0, r1] x [c0, c1]``; empty if reversed."""
        return cls(n, frozenset((p, q) for p in range(r0, r1 + 1) for q in range(c0, c1 + 1)))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "RegionMask":
        """From a padded (n+1, n+1) boolean/0-1 array."""
        n = arr.shape[0] - 1
        ps, qs = np.nonzero(arr[1:, 1:])
        return cls(n, frozenset((int(p) + 1, int(q) + 1) for p, q in zip(ps, qs)))

    def __contains__(self, pq) -> bool:
        return pq in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def __or__(self, other: "RegionMask") -> "RegionMask":
        return RegionMask(self.n, self.cells | other.cells)

    def __and__(self, other: "RegionMask") -> "RegionMask":
        return RegionMask(self.n, self.cells & other.cells)

    def __sub__(self, other: "RegionMask") -> "RegionMask":
        return RegionMask(self.n, self.cells - other.cells)

    def issubset(self, other: "RegionMask") -> bool:
        return self.cells <= other.cells

    def array(self) -> np.ndarray:
        """Padded (n+1, n+1) int8 indicator."""
        a = np.zeros((self.n + 1, self.n + 1), dtype=np.int8)
        for p, q in self.cells:
            a[p, q] = 1
        return a

    def rotated(self) -> "RegionMask":
        """Image under the half-turn of the diagram: ``(p, q) -> (n-p, n-q)``."""
        n = self.n
        return RegionMask(n, frozenset((n - p, n - q) for p, q in self.cells))


def transposition_region(v: Permutation, t: Transposition) -> RegionMask:
    """Support of ``r_{v t} - r_v``: rows ``[i, j-1]`` x cols ``[lo, hi-1]``."""
    a, b = v(t.i), v(t.j)
    return RegionMask.box(v.n, t.i, t.j - 1, min(a, b), max(a, b) - 1)


@dataclass(frozen=True)
class TypeAConfig:
    i: int
    j: int
    R1: RegionMask
    R2: RegionMask


@dataclass(frozen=True)
class TypeBConfig:
    """A type B triple. ``triple`` lists the positions ``(i, k, l)``.

    In the direct orientation ``i < k < l`` and ``v(i) < v(l) < v(k)``; in the
    mirrored one (SW-NE diagonal image, equivalently ``k < l < i``) the third
    point sits below both and ``v(l) < v(k) < v(i)``.
    """

    triple: tuple[int, int, int]
    mirrored: bool
    R1: RegionMask
    R2: RegionMask
    R2prime: RegionMask

    @property
    def i(self) -> int:
        return self.triple[0]


def _check_lowering(w: Permutation, v: Permutation, t: Transposition) -> None:
    _same_size(v, w)
    if t.j > v.n:
        raise PreconditionError(f"transposition {t} out of range for n={v.n}")
    if v(t.i) < v(t.j):
        raise PreconditionError(f"t={t} does not lower v={v} (needs v(k) > v(l))")


def _diff(v: Permutation, w: Permutation) -> np.ndarray:
    return _cached_rank(v.word).astype(np.int16) - _cached_rank(w.word)


def _type_A_pairs(diff: np.ndarray, word: tuple[int, ...], k: int, l: int):
    n = len(word)
    vk, vl = word[k - 1], word[l - 1]
    # R2 = rows [k, l) x cols [vl, vk)
    for i in range(1, n + 1):
        if i == k or i == l:
            continue
        vi = word[i - 1]
        for j in range(i + 1, n + 1):
            if j == k or j == l:
                continue
            vj = word[j - 1]
            if vi > vj:
                continue
            # intersection of R1 = [i, j) x [vi, vj) with R2
            p0, p1 = max(i, k), min(j, l)
            q0, q1 = max(vi, vl), min(vj, vk)
            if p0 >= p1 or q0 >= q1:
                continue  # R1 & R2 empty: no vanishing cell
            box = diff[i:j, vi:vj]
            if not (box[p0 - i:p1 - i, q0 - vi:q1 - vi] == 0).any():
                continue
            strict = box > 0
            strict[p0 - i:p1 - i, q0 - vi:q1 - vi] = True
            if strict.all():
                yield i, j


def type_A_configs(w: Permutation, v: Permutation, t: Transposition) -> list[TypeAConfig]:
    """Pairs ``i < j`` disjoint from ``{k, l}`` with ``v(i) < v(j)``,
    ``r_v > r_w`` on ``R1 \\ R2`` and ``r_v = r_w`` somewhere on ``R1 & R2``."""
    _check_lowering(w, v, t)
    diff = _diff(v, w)
    n = v.n
    R2 = transposition_region(v, t)
    return [
        TypeAConfig(i, j, RegionMask.box(n, i, j - 1, v(i), v(j) - 1), R2)
        for i, j in _type_A_pairs(diff, v.word, t.i, t.j)
    ]


def _type_B_direct(diff: np.ndarray, word: tuple[int, ...], k: int, l: int):
    vk, vl = word[k - 1], word[l - 1]
    for i in range(1, k):
        vi = word[i - 1]
        if not vi < vl:
            continue
        # R1 = [i, k) x [vi, vl), R2 = [i, k) x [vl, vk), R2' = [k, l) x [vi, vl)
        if not (diff[i:k, vi:vl] > 0).all():
            continue
        if not (diff[i:k, vl:vk] == 0).any():
            continue
        if not (diff[k:l, vi:vl] == 0).any():
            continue
        yield i


def _direct_regions(n: int, word: tuple[int, ...], i: int, k: int, l: int):
    vi, vk, vl = word[i - 1], word[k - 1], word[l - 1]
    return (
        RegionMask.box(n, i, k - 1, vi, vl - 1),
        RegionMask.box(n, i, k - 1, vl, vk - 1),
        RegionMask.box(n, k, l - 1, vi, vl - 1),
    )


def type_B_configs(w: Permutation, v: Permutation, t: Transposition) -> list[TypeBConfig]:
    """Type B triples in both orientations, sorted by position triple.

    The mirrored orientation is found by running the direct search on the
    half-turned diagrams and mapping the result back.
    """
    _check_lowering(w, v, t)
    n = v.n
    k, l = t.i, t.j
    out = []
    diff = _diff(v, w)
    for i in _type_B_direct(diff, v.word, k, l):
        out.append(TypeBConfig((i, k, l), False, *_direct_regions(n, v.word, i, k, l)))
    vr, wr = rotate180(v), rotate180(w)
    kr, lr = n + 1 - l, n + 1 - k
    diff_r = _diff(vr, wr)
    for ir in _type_B_direct(diff_r, vr.word, kr, lr):
        regions = [r.rotated() for r in _direct_regions(n, vr.word, ir, kr, lr)]
        out.append(TypeBConfig((n + 1 - ir, k, l), True, *regions))
    out.sort(key=lambda c: (c.triple, c.mirrored))
    return out


def configuration_count(w: Permutation, v: Permutation, t: Transposition) -> int:
    """Number of type A plus type B configurations for ``(w, v, t)``."""
    _check_lowering(w, v, t)
    n = v.n
    k, l = t.i, t.j
    diff = _diff(v, w)
    count = sum(1 for _ in _type_A_pairs(diff, v.word, k, l))
    count += sum(1 for _ in _type_B_direct(diff, v.word, k, l))
    vr, wr = rotate180(v), rotate180(w)
    count += sum(1 for _ in _type_B_direct(_diff(vr, wr), vr.word, n + 1 - l, n + 1 - k))
    return count


def check_prop2(w: Permutation, v: Permutation, t: Transposition) -> tuple[int, int, bool]:
    """``(m(w, v t) - m(w, v), configuration count, equal?)`` for ``v <= w``.

    Outside ``v <= w`` the fixed point of ``v`` is not on X_w and the identity
    does not hold, so that case is rejected.
    """
    _check_lowering(w, v, t)
    if not bruhat_leq(v, w):
        raise PreconditionError(f"{v} is not below {w} in Bruhat order")
    lhs = tangent_dim(w, apply_transposition(v, t)) - tangent_dim(w, v)
    rhs = configuration_count(w, v, t)
    return lhs, rhs, lhs == rhs
