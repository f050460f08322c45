"""Independent oracles used by the tests.

These deliberately avoid the package's own recursions: interleavings are
enumerated by choosing position subsets, and the truncated sums are plain
nested loops.  Slow but definitionally correct.
"""

import itertools
from collections import Counter


def brute_shuffle(a, b):
    """Multiset of all interleavings, one per choice of slots for ``a``."""
    n = len(a) + len(b)
    out = Counter()
    for slots in itertools.combinations(range(n), len(a)):
        chosen = set(slots)
        word = []
        ai = iter(a)
        bi = iter(b)
        for i in range(n):
            word.append(next(ai) if i in chosen else next(bi))
        out[tuple(word)] += 1
    return out


def brute_zeta(exponents, cutoff):
    """Direct sum over strictly decreasing chains; small inputs only."""
    k = len(exponents)
    total = 0.0
    terms = []

    def rec(depth, upper, partial):
        if depth == k:
            terms.append(partial)
            return
        for n in range(k - depth, upper + 1):
            rec(depth + 1, n - 1, partial * float(n) ** (-exponents[depth]))

    rec(0, cutoff, 1.0)
    for t in sorted(terms):
        total += t
    return total


def brute_fraction_sum(exponents, cutoff):
    """Direct sum over the full box [1, cutoff]^k; small inputs only."""
    k = len(exponents)
    total = 0.0
    terms = []
    for u in itertools.product(range(1, cutoff + 1), repeat=k):
        value = 1.0
        tail = 0
        for s, x in zip(reversed(exponents), reversed(u)):
            tail += x
            value /= float(tail) ** s
        terms.append(value)
    for t in sorted(terms):
        total += t
    return total
