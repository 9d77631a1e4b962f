"""Zariski tangent dimension ``m(w, v)`` at torus-fixed points of X_w.

``m(w, v)`` counts the transpositions ``t_ij`` with ``v * t_ij <= w``. For a
candidate ``v * t_ij`` the rank table differs from ``r_v`` by one on a single
half-open box, so each test only inspects ``r_v - r_w`` rather than building
a fresh table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import PreconditionError
from .perm import (
    Permutation,
    Transposition,
    _cached_rank,
    _same_size,
    bruhat_leq,
    check_cap,
    length,
    sn_tables,
)

__all__ = [
    "TangentReport", "tangent_set", "tangent_dim", "is_singular_at",
    "is_smooth_tangent", "swap_is_below",
]


@dataclass(frozen=True)
class TangentReport:
    w: Permutation
    v: Permutation
    pairs: frozenset[Transposition]
    dim: int

    def sorted_pairs(self) -> list[Transposition]:
        return sorted(self.pairs)


def swap_is_below(diff: np.ndarray, word: tuple[int, ...], i: int, j: int) -> bool:
    """Whether ``v * t_ij <= w`` given the padded ``diff = r_v - r_w``.

    ``i < j`` are 1-based. If ``v(i) < v(j)`` the swap removes one from the
    box, so the box must have slack; otherwise it adds one on the box and
    ``v`` itself must already dominate outside it.
    """
    a, b = word[i - 1], word[j - 1]
    lo, hi = (a, b) if a < b else (b, a)
    box = diff[i:j, lo:hi]
    if a < b:
        return bool((box >= 1).all()) and bool((diff >= 0).all())
    if (box >= -1).all():
        # cells outside the box need diff >= 0
        neg = diff < 0
        if not neg.any():
            return True
        outside = neg.copy()
        outside[i:j, lo:hi] = False
        return not outside.any()
    return False


def tangent_set(w: Permutation, v: Permutation) -> TangentReport:
    """``S(w, v)`` and its size; total in ``v`` (no ``v <= w`` requirement)."""
    _same_size(v, w)
    diff = _cached_rank(v.word).astype(np.int16) - _cached_rank(w.word)
    n = w.n
    pairs = frozenset(
        Transposition(i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if swap_is_below(diff, v.word, i, j)
    )
    return TangentReport(w, v, pairs, len(pairs))


def tangent_dim(w: Permutation, v: Permutation) -> int:
    return tangent_set(w, v).dim


def is_singular_at(w: Permutation, v: Permutation) -> bool:
    """True iff the fixed point of ``v`` is singular on X_w (``m(w,v) > l(w)``)."""
    if not bruhat_leq(v, w):
        raise PreconditionError(f"{v} is not below {w} in Bruhat order")
    return tangent_dim(w, v) > length(w)


def is_smooth_tangent(w: Permutation, cap: int | None = None) -> bool:
    """Smoothness of X_w by checking every fixed point of the interval [e, w]."""
    check_cap(w.n, cap)
    tab = sn_tables(w.n)
    k = tab.index[w.word]
    below = tab.below_mask(k)
    dims = tab.tangent_dims(k, below)
    return not bool((dims[below] > tab.lengths[k]).any())
