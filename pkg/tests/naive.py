"""Slow, dependency-free reference implementations used as test oracles.

Everything is computed straight from the definitions on plain tuples, with
no shared code from the package.
"""

from itertools import permutations


def rank(word, p, q):
    return sum(1 for i in range(p) if word[i] <= q)


def rank_matrix(word):
    n = len(word)
    return [[rank(word, p, q) for q in range(1, n + 1)] for p in range(1, n + 1)]


def length(word):
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def leq(v, w):
    rv, rw = rank_matrix(v), rank_matrix(w)
    return all(a >= b for ra, rb in zip(rv, rw) for a, b in zip(ra, rb))


def swap(word, i, j):
    out = list(word)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def tangent_pairs(w, v):
    n = len(w)
    return {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if leq(swap(v, i, j), w)}


def m(w, v):
    return len(tangent_pairs(w, v))


def sn(n):
    return list(permutations(range(1, n + 1)))


def below(w):
    return [v for v in sn(len(w)) if leq(v, w)]


def singular_components(w):
    lw = length(w)
    sing = [v for v in below(w) if m(w, v) > lw]
    return sorted(v for v in sing if not any(x != v and leq(v, x) for x in sing))


def contains(word, pattern):
    k = len(pattern)
    from itertools import combinations

    for pos in combinations(range(len(word)), k):
        vals = [word[p] for p in pos]
        order = sorted(vals)
        if tuple(order.index(x) + 1 for x in vals) == tuple(pattern):
            return True
    return False
