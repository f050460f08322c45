"""Truncated nested series: zeta-style sums and fraction-orthant sums.

Both sums are computed in binary64 with all indices cut off at a fixed N.
With leading exponent 2 the discarded tail is O(1/N), so identities between
convergent sums are only ever asserted up to a stated tolerance.  All terms
are positive; summation runs over the innermost index first, ascending, so
ordering affects rounding only.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotAdmissible
from .words import FracTerm, as_lincomb


def _validate(exponents):
    exponents = tuple(exponents)
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(s < 1 for s in exponents):
        raise ValueError("exponents must be >= 1")
    if exponents[0] < 2:
        raise NotAdmissible("leading exponent must be >= 2 for convergence")
    return exponents


def zeta_truncated(exponents, cutoff: int) -> float:
    """Sum over cutoff >= n_1 > n_2 > ... > n_k >= 1 of prod n_i^(-s_i).

    Computed depth by depth with running prefix sums, O(k*cutoff) total:
    the partial sums over the inner indices below n are accumulated while n
    ascends.
    """
    exponents = _validate(exponents)
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    # g[n] = n^(-s_j) * (sum of the deeper nested product over indices < n)
    g = [0.0] * (cutoff + 1)
    for n in range(1, cutoff + 1):
        g[n] = float(n) ** (-exponents[-1])
    for s in exponents[-2::-1]:
        h = [0.0] * (cutoff + 1)
        running = 0.0
        for n in range(1, cutoff + 1):
            h[n] = float(n) ** (-s) * running
            running += g[n]
        g = h
    total = 0.0
    for n in range(1, cutoff + 1):
        total += g[n]
    return total


def fraction_sum_truncated(term: FracTerm, cutoff: int) -> float:
    """Sum of the term's fraction over all u in [1, cutoff]^k.

    In the tail-sum variables v_j = u_j + ... + u_k the orthant becomes the
    set of chains with consecutive gaps in [1, cutoff], so the sum is a
    bounded-gap convolution: level j is reached from level j+1 through a
    sliding window of width cutoff, maintained with prefix sums.  This is
    O(k^2 * cutoff) and sums the exact same terms as the k-fold loop.
    """
    exponents = _validate(term.exponents)
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    k = len(exponents)
    # level[v] = sum, over gap vectors reaching tail value v, of the partial
    # product for the blocks processed so far; the innermost block alone
    # gives level[v] = v^(-s_k) on [1, cutoff].
    level = [0.0] * (cutoff + 1)
    for v in range(1, cutoff + 1):
        level[v] = float(v) ** (-exponents[-1])
    for j in range(k - 2, -1, -1):
        vars_below = k - 1 - j  # variables already accumulated in `level`
        prefix = [0.0] * (len(level) + 1)
        for v in range(len(level)):
            prefix[v + 1] = prefix[v] + level[v]
        nxt = [0.0] * ((vars_below + 1) * cutoff + 1)
        s = exponents[j]
        for v in range(vars_below + 1, len(nxt)):
            a = max(1, v - cutoff)  # gap u_j = v - w must lie in [1, cutoff]
            b = min(v - 1, len(level) - 1)
            if a > b:
                continue
            nxt[v] = float(v) ** (-s) * (prefix[b + 1] - prefix[a])
        level = nxt
    total = 0.0
    for v in range(1, len(level)):
        total += level[v]
    return total


class IdentityCheck(NamedTuple):
    passed: bool
    lhs: float
    rhs: float
    gap: float


def check_summed_identity(p: FracTerm, q: FracTerm, rhs, cutoff=10000, tol=1e-3) -> IdentityCheck:
    """Compare truncated zeta sums of a product against its expansion.

    Summing a term over the whole positive orthant does not depend on its
    variable labels, so only exponent vectors enter.  Every leading exponent
    (of p, q and each expansion term) must be >= 2 so all series converge.
    """
    lhs = zeta_truncated(_validate(p.exponents), cutoff) * zeta_truncated(
        _validate(q.exponents), cutoff
    )
    rhs_value = 0.0
    for term, coef in as_lincomb(rhs):
        rhs_value += coef * zeta_truncated(_validate(term.exponents), cutoff)
    gap = abs(lhs - rhs_value)
    return IdentityCheck(gap <= tol, lhs, rhs_value, gap)
