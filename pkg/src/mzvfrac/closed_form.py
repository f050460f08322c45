"""Closed-form product of fraction terms.

The product of two terms of depths k and l expands over all order-preserving
interleavings of their k+l denominator slots and all splits of the combined
weight into k+l positive exponents.  Each (interleaving, split, slot) cell
contributes one binomial factor; the closed form multiplies the factors and
collects the surviving terms.  Binomials outside the range 0 <= lower <=
upper evaluate to 0, which is what prunes the impossible splits.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from .errors import VariableCollision
from .words import FracTerm, LinComb


class Interleaving(NamedTuple):
    """Where the left and right factors' slots land in the merged term.

    ``left`` and ``right`` are strictly increasing 1-based positions; they
    are disjoint and together cover 1..k+l.
    """

    left: tuple
    right: tuple


def interleavings(k: int, l: int) -> list:
    """All C(k+l, k) interleavings, ordered lexicographically by ``left``."""
    if k < 1 or l < 1:
        raise ValueError("both depths must be >= 1")
    slots = range(1, k + l + 1)
    out = []
    for left in itertools.combinations(slots, k):
        chosen = set(left)
        right = tuple(i for i in slots if i not in chosen)
        out.append(Interleaving(left, right))
    return out


def merge_variables(u: tuple, v: tuple, pat: Interleaving) -> tuple:
    """Route the two variable vectors into their slots."""
    merged = [None] * (len(u) + len(v))
    for j, i in enumerate(pat.left):
        merged[i - 1] = u[j]
    for j, i in enumerate(pat.right):
        merged[i - 1] = v[j]
    return tuple(merged)


def slot_exponent(pat: Interleaving, left_exps, right_exps, i: int) -> int:
    """The source exponent routed into slot i (1-based)."""
    if i in pat.left:
        return left_exps[pat.left.index(i)]
    return right_exps[pat.right.index(i)]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside 0 <= k <= n."""
    if 0 <= k <= n:
        return math.comb(n, k)
    return 0


def slot_coefficient(pat: Interleaving, left_exps, right_exps, split, i: int) -> int:
    """The binomial factor attached to slot i of one exponent split.

    Slot 1, and any slot whose predecessor came from the same factor, pays
    binom(t_i - 1, e - 1) against its own source exponent e.  A slot whose
    predecessor came from the other factor pays binom(t_i - 1, d) where d is
    the excess of the split's prefix sum over the prefix sums of both source
    exponent vectors up to slot i.
    """
    same_side = i > 1 and (
        (i - 1 in pat.left and i in pat.left)
        or (i - 1 in pat.right and i in pat.right)
    )
    if i == 1 or same_side:
        e = slot_exponent(pat, left_exps, right_exps, i)
        return binomial(split[i - 1] - 1, e - 1)
    t_prefix = sum(split[:i])
    n_left = sum(1 for s in pat.left if s <= i)
    n_right = sum(1 for s in pat.right if s <= i)
    excess = t_prefix - sum(left_exps[:n_left]) - sum(right_exps[:n_right])
    return binomial(split[i - 1] - 1, excess)


def compositions(total: int, parts: int):
    """All ``parts``-tuples of positive integers summing to ``total``,
    generated with the last part varying slowest (colexicographic)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for last in range(1, total - parts + 2):
        for head in compositions(total - last, parts - 1):
            yield head + (last,)


def closed_form_product(p: FracTerm, q: FracTerm) -> LinComb:
    """Product of two nonempty fraction terms by direct enumeration.

    Agrees term-for-term with the transported shuffle product; the two are
    compared exhaustively in the test suite.
    """
    if not p.exponents or not q.exponents:
        raise ValueError("closed-form product needs two nonempty terms")
    shared = set(p.variables) & set(q.variables)
    if shared:
        raise VariableCollision(
            "factors share variable(s) %s" % ", ".join(sorted(shared))
        )
    k, l = p.depth, q.depth
    total = p.weight + q.weight
    acc = {}
    for pat in interleavings(k, l):
        merged = merge_variables(p.variables, q.variables, pat)
        for split in compositions(total, k + l):
            coef = 1
            for i in range(1, k + l + 1):
                coef *= slot_coefficient(pat, p.exponents, q.exponents, split, i)
                if not coef:
                    break
            if coef:
                t = FracTerm(split, merged)
                acc[t] = acc.get(t, 0) + coef
    return LinComb(acc)


def euler_decomposition(i: int, j: int) -> LinComb:
    """Product of two depth-one terms over the reserved variables m, n.

    Expands 1/m^i * 1/n^j into depth-two terms with binomial coefficients;
    summing both sides over the positive integers turns it into the classic
    decomposition of zeta(i)*zeta(j) when i, j >= 2.
    """
    if i < 1 or j < 1:
        raise ValueError("exponents must be >= 1")
    return closed_form_product(FracTerm((i,), ("m",)), FracTerm((j,), ("n",)))
