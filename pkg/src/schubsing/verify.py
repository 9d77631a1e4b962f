"""Exhaustive and sampled checks of the theorems over S_n.

Each checker takes one ``w`` (by index into :func:`sn_tables`) and returns
how many instances it examined plus any counterexamples. ``verify`` maps a
checker over all of S_n, optionally across worker processes, and merges the
results in lexicographic order of ``w``.
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import configuration_count
from .locus import maximal_elements, singular_locus_oracle, z_set
from .patterns import components_C, is_smooth_LS, minimal_configurations, surgery
from .perm import Permutation, Transposition, apply_transposition, check_cap, sn_tables
from .tangent import is_smooth_tangent

__all__ = ["VerifyReport", "THEOREMS", "verify", "sample_prop2", "sample_semicontinuity"]


@dataclass
class VerifyReport:
    n: int
    theorem: str
    permutations: int = 0
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "theorem": self.theorem,
            "permutations": self.permutations,
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def _fmt(word) -> str:
    return ",".join(map(str, word))


def _check_LS(n, k):
    w = Permutation(sn_tables(n).words[k])
    a, b = is_smooth_LS(w), is_smooth_tangent(w, cap=n)
    return 1, [] if a == b else [{"w": str(w), "patterns": a, "tangent": b}]


def _check_prop2(n, k):
    tab = sn_tables(n)
    w = Permutation(tab.words[k])
    below = tab.below_mask(k)
    dims = tab.tangent_dims(k, below)
    bad, count = [], 0
    for vi in np.flatnonzero(below):
        vw = tab.words[vi]
        v = Permutation(vw)
        for c, (i, j) in enumerate(tab.pairs):
            if vw[i] < vw[j]:
                continue
            count += 1
            jump = int(dims[tab.swap[vi, c]] - dims[vi])
            got = configuration_count(w, v, Transposition(i + 1, j + 1))
            if jump != got:
                bad.append({"w": str(w), "v": str(v), "t": [i + 1, j + 1], "jump": jump, "configs": got})
    return count, bad


def _check_thm1(n, k):
    w = Permutation(sn_tables(n).words[k])
    conf = components_C(w)
    orc = singular_locus_oracle(w, cap=n).components
    if conf == orc:
        return 1, []
    return 1, [{"w": str(w), "configuration": [str(u) for u in conf], "oracle": [str(u) for u in orc]}]


def _check_lemma6(n, k):
    tab = sn_tables(n)
    w = Permutation(tab.words[k])
    dims = tab.tangent_dims(k)
    members = {c.v for c in z_set(w, cap=n)}
    bad = [
        {"w": str(w), "v": str(v), "m": int(dims[tab.index[v.word]]), "l": int(tab.lengths[k])}
        for v in sorted(members)
        if dims[tab.index[v.word]] <= tab.lengths[k]
    ]
    return len(members), bad


def _check_lemma7(n, k):
    w = Permutation(sn_tables(n).words[k])
    members = {c.v for c in z_set(w, cap=n)}
    missing = [str(u) for u in components_C(w) if u not in members]
    return 1, [{"w": str(w), "missing": missing}] if missing else []


def _check_thm8(n, k):
    w = Permutation(sn_tables(n).words[k])
    zmax = maximal_elements(c.v for c in z_set(w, cap=n))
    conf = components_C(w)
    orc = singular_locus_oracle(w, cap=n).components
    if zmax == conf == orc:
        return 1, []
    return 1, [{
        "w": str(w),
        "z_max": [str(u) for u in zmax],
        "configuration": [str(u) for u in conf],
        "oracle": [str(u) for u in orc],
    }]


def _check_semicontinuity(n, k):
    tab = sn_tables(n)
    below = tab.below_mask(k)
    dims = tab.tangent_dims(k, below)
    bad, count = [], 0
    for vi in np.flatnonzero(below):
        under = tab.below_mask(vi)
        count += int(under.sum())
        low = np.flatnonzero(under & (dims < dims[vi]))
        for ui in low[:3]:
            bad.append({"w": _fmt(tab.words[k]), "v": _fmt(tab.words[vi]), "u": _fmt(tab.words[ui])})
    return count, bad


def _check_prop5(n, k):
    tab = sn_tables(n)
    w = Permutation(tab.words[k])
    below = tab.below_mask(k)
    dims = tab.tangent_dims(k, below)
    sing = np.flatnonzero(below & (dims > tab.lengths[k]))
    comps = components_C(w)
    if not comps:
        return len(sing), [{"w": str(w), "x": _fmt(tab.words[x])} for x in sing[:3]]
    covered = np.zeros(len(tab), dtype=bool)
    for u in comps:
        covered |= tab.below_mask(tab.index[u.word])
    return len(sing), [{"w": str(w), "x": _fmt(tab.words[x])} for x in sing if not covered[x]]


def _check_counting(n, k):
    tab = sn_tables(n)
    w = Permutation(tab.words[k])
    dims = tab.tangent_dims(k)
    lw = int(tab.lengths[k])
    bad = []
    cfgs = minimal_configurations(w)
    for cfg in cfgs:
        u = surgery(w, cfg).u
        jump = int(dims[tab.index[u.word]]) - lw
        # the permutation just before the last move is a smooth point
        v = w
        for t in cfg.moves[:-1]:
            v = apply_transposition(v, t)
        before = int(dims[tab.index[v.word]])
        if jump != cfg.expected_jump() or before != lw:
            bad.append({
                "w": str(w), "kind": cfg.kind, "pivots": list(cfg.pivots.positions),
                "jump": jump, "expected": cfg.expected_jump(), "m_before_last_move": before, "l": lw,
            })
    return len(cfgs), bad


THEOREMS = {
    "LS": _check_LS,
    "prop2": _check_prop2,
    "thm1": _check_thm1,
    "lemma6": _check_lemma6,
    "lemma7": _check_lemma7,
    "thm8": _check_thm8,
    "semicontinuity": _check_semicontinuity,
    "prop5": _check_prop5,
    "counting": _check_counting,
}


def _run_chunk(args):
    n, theorem, ks = args
    check = THEOREMS[theorem]
    total, bad = 0, []
    for k in ks:
        c, b = check(n, k)
        total += c
        bad.extend(b)
    return total, bad


def verify(n: int, theorem: str, jobs: int = 1, cap: int | None = None) -> VerifyReport:
    """Run one exhaustive check over S_n; the report's counterexamples must be empty."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap)
    start = time.perf_counter()
    tab = sn_tables(n)  # built before any fork so workers inherit it
    size = len(tab)
    report = VerifyReport(n, theorem, permutations=size)
    if jobs <= 1 or size < 2 * jobs:
        report.instances, report.counterexamples = _run_chunk((n, theorem, range(size)))
    else:
        bounds = np.linspace(0, size, 4 * jobs + 1).astype(int)
        chunks = [(n, theorem, range(a, b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        ctx = multiprocessing.get_context("fork") if "fork" in multiprocessing.get_all_start_methods() else None
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
            for count, bad in pool.map(_run_chunk, chunks):
                report.instances += count
                report.counterexamples.extend(bad)
    report.seconds = time.perf_counter() - start
    return report


def _random_lowering(rng, word) -> tuple[int, int] | None:
    n = len(word)
    inv = [(i, j) for i in range(n) for j in range(i + 1, n) if word[i] > word[j]]
    if not inv:
        return None
    return inv[rng.integers(len(inv))]


def sample_prop2(n: int, count: int, seed: int = 0) -> VerifyReport:
    """``count`` random triples (w, v <= w, t lowering v) checked against the identity."""
    rng = np.random.default_rng(seed)
    tab = sn_tables(n)
    start = time.perf_counter()
    report = VerifyReport(n, "prop2-sampled", permutations=len(tab))
    cache = {}
    while report.instances < count:
        k = int(rng.integers(len(tab)))
        if k not in cache:
            below = tab.below_mask(k)
            cache[k] = (np.flatnonzero(below), tab.tangent_dims(k, below))
        members, dims = cache[k]
        vi = int(members[rng.integers(len(members))])
        pair = _random_lowering(rng, tab.words[vi])
        if pair is None:
            continue
        i, j = pair
        ui = tab.index[tuple(apply_transposition(Permutation(tab.words[vi]), Transposition(i + 1, j + 1)).word)]
        jump = int(dims[ui] - dims[vi])
        got = configuration_count(Permutation(tab.words[k]), Permutation(tab.words[vi]), Transposition(i + 1, j + 1))
        report.instances += 1
        if jump != got:
            report.counterexamples.append({
                "w": _fmt(tab.words[k]), "v": _fmt(tab.words[vi]), "t": [i + 1, j + 1],
                "jump": jump, "configs": got,
            })
    report.seconds = time.perf_counter() - start
    return report


def sample_semicontinuity(n: int, count: int, seed: int = 0) -> VerifyReport:
    """``count`` random chains u <= v <= w checked for m(w, u) >= m(w, v)."""
    rng = np.random.default_rng(seed)
    tab = sn_tables(n)
    start = time.perf_counter()
    report = VerifyReport(n, "semicontinuity-sampled", permutations=len(tab))
    cache = {}
    for _ in range(count):
        k = int(rng.integers(len(tab)))
        if k not in cache:
            below = tab.below_mask(k)
            cache[k] = (np.flatnonzero(below), tab.tangent_dims(k, below))
        members, dims = cache[k]
        vi = int(members[rng.integers(len(members))])
        under = np.flatnonzero(tab.below_mask(vi))
        ui = int(under[rng.integers(len(under))])
        report.instances += 1
        if dims[ui] < dims[vi]:
            report.counterexamples.append({
                "w": _fmt(tab.words[k]), "v": _fmt(tab.words[vi]), "u": _fmt(tab.words[ui]),
            })
    report.seconds = time.perf_counter() - start
    return report
