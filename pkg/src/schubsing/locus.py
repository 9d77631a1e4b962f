"""Brute-force singular locus and the candidate set Z(w).

The oracle enumerates the whole Bruhat interval below ``w`` and keeps the
maximal fixed points where the tangent dimension jumps. Z(w) is built from
each 4231 / 3412 occurrence by a rank sandwich
``r_w + chi_B <= r_v <= r_w + chi_A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .config import RegionMask
from .exceptions import PreconditionError
from .patterns import P3412, P4231, PatternOccurrence, components_C, find_occurrences
from .perm import Permutation, _cached_rank, bruhat_leq, check_cap, sn_tables

__all__ = [
    "SingularLocus", "ZMembershipCertificate", "singular_locus_oracle",
    "singular_locus", "straighten", "unstraighten", "z_set", "z_members",
    "maximal_elements", "is_component_maximal", "STRAIGHT_PATTERN",
]

# relative order a pattern occurrence is straightened into
STRAIGHT_PATTERN = {P3412: (1, 3, 2, 4), P4231: (2, 1, 4, 3)}
_BENT = {(1, 3, 2, 4): (3, 4, 1, 2), (2, 1, 4, 3): (4, 2, 3, 1), (2, 4, 1, 3): (4, 2, 3, 1)}


@dataclass(frozen=True)
class SingularLocus:
    w: Permutation
    components: list[Permutation]
    provenance: dict[Permutation, str] = field(default_factory=dict)

    @property
    def smooth(self) -> bool:
        return not self.components


@dataclass(frozen=True)
class ZMembershipCertificate:
    v: Permutation
    occurrence: PatternOccurrence
    regionA: RegionMask
    regionB: RegionMask


def _maximal_indices(flat: np.ndarray) -> list[int]:
    """Rows of ``flat`` (rank tables) not strictly below another row."""
    keep = []
    for a in range(len(flat)):
        # another row with pointwise smaller-or-equal ranks is Bruhat-above
        above = (flat <= flat[a]).all(axis=1)
        above[a] = False
        if not above.any():
            keep.append(a)
    return keep


def maximal_elements(vs: Iterable[Permutation]) -> list[Permutation]:
    """Elements not strictly below another element, sorted lexicographically."""
    items = sorted(set(vs))
    if not items:
        return []
    flat = np.stack([_cached_rank(v.word)[1:, 1:].ravel() for v in items])
    return [items[a] for a in _maximal_indices(flat)]


def singular_locus_oracle(w: Permutation, cap: int | None = None) -> SingularLocus:
    """Maximal ``v <= w`` with ``m(w, v) > l(w)``, by full enumeration."""
    check_cap(w.n, cap)
    tab = sn_tables(w.n)
    k = tab.index[w.word]
    below = tab.below_mask(k)
    dims = tab.tangent_dims(k, below)
    sing = np.flatnonzero(below & (dims > tab.lengths[k]))
    comps = [Permutation(tab.words[sing[a]]) for a in _maximal_indices(tab.flat[sing])]
    comps.sort()
    return SingularLocus(w, comps, {u: "oracle" for u in comps})


def singular_locus(w: Permutation, method: str = "config", cap: int | None = None) -> SingularLocus:
    """Components by ``config`` (C(w)), ``oracle``, or ``both`` with provenance."""
    if method == "config":
        comps = components_C(w)
        return SingularLocus(w, comps, {u: "configuration" for u in comps})
    if method == "oracle":
        return singular_locus_oracle(w, cap)
    if method == "both":
        conf = set(components_C(w))
        orc = set(singular_locus_oracle(w, cap).components)
        prov = {}
        for u in conf | orc:
            prov[u] = "both" if u in conf and u in orc else ("configuration" if u in conf else "oracle")
        return SingularLocus(w, sorted(prov), prov)
    raise ValueError(f"unknown method {method!r}")


def _pattern(vals) -> tuple[int, ...]:
    s = sorted(vals)
    return tuple(s.index(x) + 1 for x in vals)


def _rearrange(word: tuple[int, ...], positions, pattern) -> tuple[int, ...]:
    vals = sorted(word[p - 1] for p in positions)
    out = list(word)
    for p, c in zip(positions, pattern):
        out[p - 1] = vals[c - 1]
    return tuple(out)


def _delta(upper: tuple[int, ...], lower: tuple[int, ...]) -> np.ndarray:
    return _cached_rank(upper).astype(np.int16) - _cached_rank(lower)


def straighten(w: Permutation, occ: PatternOccurrence, pattern=None) -> tuple[Permutation, RegionMask]:
    """Rearrange the occurrence's four values into the straight order.

    The default order is 1324 for a 3412 occurrence and 2143 for a 4231
    occurrence; ``pattern`` overrides it. Returns the new permutation and
    the region A where its rank exceeds ``r_w`` (by exactly one).
    """
    vals = [w(p) for p in occ.positions]
    kind_pat = {P3412: (3, 4, 1, 2), P4231: (4, 2, 3, 1)}[occ.kind]
    if _pattern(vals) != kind_pat:
        raise PreconditionError(f"{occ} does not occur in {w}")
    pat = tuple(pattern) if pattern is not None else STRAIGHT_PATTERN[occ.kind]
    vp = _rearrange(w.word, occ.positions, pat)
    delta = _delta(vp, w.word)
    if delta.min() < 0 or delta.max() > 1:
        raise PreconditionError(f"straightening {occ} in {w} does not raise ranks by 0/1")
    return Permutation(vp), RegionMask.from_array(delta)


def unstraighten(v: Permutation, columns) -> tuple[Permutation, RegionMask]:
    """Bend the points of ``v`` on the given value-columns back into 3412 / 4231.

    ``v``'s points on those columns, read by position, must form 1324 (giving
    3412), 2143 or 2413 (giving 4231). Returns the bent permutation and the
    region B where ``r_v`` exceeds its rank.
    """
    cols = set(columns)
    if len(cols) != 4 or not all(1 <= c <= v.n for c in cols):
        raise PreconditionError(f"need four distinct columns in 1..{v.n}, got {columns!r}")
    positions = sorted(v.position_of(c) for c in cols)
    pat = _pattern([v(p) for p in positions])
    if pat not in _BENT:
        raise PreconditionError(f"points of {v} on columns {sorted(cols)} form {pat}, not 1324/2143/2413")
    wp = _rearrange(v.word, positions, _BENT[pat])
    return Permutation(wp), RegionMask.from_array(_delta(v.word, wp))


def _certificates(w: Permutation, below_words: list[tuple[int, ...]]):
    rw = _cached_rank(w.word)
    for kind in (P3412, P4231):
        need = STRAIGHT_PATTERN[kind]
        bent = _BENT[need]
        for occ in find_occurrences(w, kind):
            vp, region_a = straighten(w, occ)
            upper = rw + region_a.array()
            cols = {w(p) for p in occ.positions}
            for word in below_words:
                positions = [p for p in range(1, w.n + 1) if word[p - 1] in cols]
                if _pattern([word[p - 1] for p in positions]) != need:
                    continue
                rv = _cached_rank(word)
                if (rv > upper).any():
                    continue
                wp = _rearrange(word, positions, bent)
                delta_b = _delta(word, wp)
                if ((rw + delta_b) > rv).any():
                    continue
                yield ZMembershipCertificate(
                    Permutation(word), occ, region_a, RegionMask.from_array(delta_b),
                )


def z_set(w: Permutation, cap: int | None = None) -> list[ZMembershipCertificate]:
    """One certificate per (v, occurrence) with v in Z(w); sorted by v then occurrence."""
    check_cap(w.n, cap)
    tab = sn_tables(w.n)
    below = tab.below_mask(tab.index[w.word])
    words = [tab.words[k] for k in np.flatnonzero(below)]
    certs = list(_certificates(w, words))
    certs.sort(key=lambda c: (c.v, c.occurrence))
    return certs


def z_members(w: Permutation, cap: int | None = None) -> list[Permutation]:
    """The distinct members of Z(w), sorted."""
    return sorted({c.v for c in z_set(w, cap)})


def is_component_maximal(w: Permutation, u: Permutation) -> bool:
    """Self-check used by tests: u is singular and covers above u in [e, w] are smooth."""
    from .perm import covers_down, length
    from .tangent import tangent_dim

    lw = length(w)
    if tangent_dim(w, u) <= lw:
        return False
    tab = sn_tables(w.n)
    for x in map(Permutation, tab.words):
        if not bruhat_leq(x, w) or length(x) != length(u) + 1:
            continue
        if any(y == u for y, _ in covers_down(x)) and tangent_dim(w, x) != lw:
            return False
    return True
