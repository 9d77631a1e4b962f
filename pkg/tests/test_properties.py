import numpy as np
from hypothesis import given, settings, strategies as st

from schubsing import (
    Permutation,
    Transposition,
    apply_transposition,
    bruhat_leq,
    components_C,
    covers_down,
    is_smooth_LS,
    length,
    minimal_configurations,
    parse_permutation,
    rank_table,
    surgery,
    tangent_dim,
    tangent_set,
)
from schubsing.perm import inverse, rotate180

import naive


@st.composite
def perms(draw, lo=1, hi=8):
    n = draw(st.integers(lo, hi))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def pair_below(draw, lo=2, hi=7):
    """(w, v) with v <= w, reached by a random walk down Bruhat covers."""
    w = draw(perms(lo, hi))
    v = w
    for _ in range(draw(st.integers(0, length(w)))):
        down = covers_down(v)
        if not down:
            break
        v = draw(st.sampled_from(down))[0]
    return w, v


@given(perms())
def test_rank_table_shape(w):
    r = rank_table(w).values.astype(int)
    n = w.n
    assert (np.diff(r, axis=0) >= 0).all() and (np.diff(r, axis=1) >= 0).all()
    assert set(np.diff(np.vstack([np.zeros(n, int), r]), axis=0).ravel()) <= {0, 1}
    assert r[-1].tolist() == list(range(1, n + 1))
    assert r[:, -1].tolist() == list(range(1, n + 1))


@given(perms())
def test_rank_table_definition(w):
    assert rank_table(w).values.tolist() == naive.rank_matrix(w.word)


@given(perms())
def test_text_round_trip(w):
    assert parse_permutation(str(w)) == w


@given(perms())
def test_symmetries_preserve_length_and_smoothness(w):
    for s in (inverse(w), rotate180(w)):
        assert length(s) == length(w)
        assert is_smooth_LS(s) == is_smooth_LS(w)
    assert inverse(inverse(w)) == w and rotate180(rotate180(w)) == w


@given(perms(2, 8), st.data())
def test_transposition_involution_and_parity(w, data):
    i = data.draw(st.integers(1, w.n - 1))
    j = data.draw(st.integers(i + 1, w.n))
    t = Transposition(i, j)
    u = apply_transposition(w, t)
    assert apply_transposition(u, t) == w
    assert (length(u) - length(w)) % 2 == 1
    assert bruhat_leq(u, w) == (w(i) > w(j))


@given(perms(1, 7))
def test_m_at_w_is_length(w):
    assert tangent_dim(w, w) == length(w)


@given(pair_below())
def test_m_at_least_length_below(wv):
    w, v = wv
    assert bruhat_leq(v, w)
    assert tangent_dim(w, v) >= length(w)


@given(pair_below(2, 6))
def test_tangent_pairs_are_below(wv):
    w, v = wv
    rep = tangent_set(w, v)
    assert rep.dim == len(rep.pairs)
    for t in rep.pairs:
        assert naive.leq(apply_transposition(v, t).word, w.word)


@given(pair_below(2, 7), st.data())
def test_semicontinuity_along_covers(wv, data):
    w, v = wv
    down = covers_down(v)
    if down:
        u = data.draw(st.sampled_from(down))[0]
        assert tangent_dim(w, u) >= tangent_dim(w, v)


@settings(max_examples=60)
@given(perms(4, 8))
def test_surgery_postconditions(w):
    for cfg in minimal_configurations(w):
        u = surgery(w, cfg).u
        delta = rank_table(u).r.astype(int) - rank_table(w).r
        assert set(np.unique(delta).tolist()) <= {0, 1}
        assert bruhat_leq(u, w) and u != w
        assert tangent_dim(w, u) - length(w) == cfg.expected_jump()


@settings(max_examples=60)
@given(perms(1, 8))
def test_components_shape(w):
    comps = components_C(w)
    assert (not comps) == is_smooth_LS(w)
    assert comps == sorted(set(comps))
    lw = length(w)
    for u in comps:
        assert tangent_dim(w, u) > lw
    for a in comps:
        for b in comps:
            assert a == b or not bruhat_leq(a, b)


@settings(max_examples=60)
@given(perms(1, 8))
def test_components_equivariant(w):
    # both diagonal symmetries are Bruhat automorphisms, so they carry C(w) along
    for s in (inverse, rotate180):
        assert components_C(s(w)) == sorted(s(u) for u in components_C(w))
