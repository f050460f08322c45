"""Exact evaluation of fraction terms at positive rational points.

Identities between products and their expansions are rational-function
identities, so they either hold everywhere or fail on a dense open set.
Evaluating both sides exactly at a handful of random rational points is
therefore a sound (and cheap) verification strategy: a single mismatch is a
disproof, and repeated exact matches at generic points leave no realistic
room for a bounded-degree discrepancy.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import UnboundVariable
from .words import FracTerm, LinComb, as_lincomb


def fraction_value(exponents, values) -> Fraction:
    """The fraction prod_i (v_i + ... + v_k)^(-s_i) at exact rationals."""
    denom = Fraction(1)
    tail = Fraction(0)
    for s, v in zip(reversed(exponents), reversed(values)):
        tail += v
        denom *= tail**s
    return 1 / denom


def eval_fraction(term: FracTerm, assignment) -> Fraction:
    """Evaluate one term; every variable must map to a positive rational."""
    values = []
    for u in term.variables:
        try:
            v = Fraction(assignment[u])
        except KeyError:
            raise UnboundVariable("no value for variable %r" % u) from None
        if v <= 0:
            raise ValueError("assignment must be positive, got %s=%s" % (u, v))
        values.append(v)
    return fraction_value(term.exponents, values)


def eval_lincomb(xi, assignment) -> Fraction:
    total = Fraction(0)
    for term, coef in as_lincomb(xi):
        total += coef * eval_fraction(term, assignment)
    return total


class Verdict(NamedTuple):
    verified: bool
    counterexample: Optional[dict]


def sample_assignment(rng, names) -> dict:
    """Pairwise-distinct positive rationals with numerator and denominator
    in [1, 1000], drawn from the given generator."""
    used = set()
    out = {}
    for name in names:
        while True:
            v = Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
            if v not in used:
                used.add(v)
                out[name] = v
                break
    return out


def verify_identity(p: FracTerm, q: FracTerm, rhs, samples=25, seed=0) -> Verdict:
    """Check eval(p)*eval(q) == eval(rhs) at seeded random rational points.

    Deterministic for fixed inputs and seed.  Returns the first failing
    assignment as a counterexample, in sample order.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    names = set(p.variables) | set(q.variables)
    for term, _ in as_lincomb(rhs):
        names.update(term.variables)
    names = sorted(names)
    rng = random.Random(seed)
    for _ in range(samples):
        assignment = sample_assignment(rng, names)
        lhs = eval_fraction(p, assignment) * eval_fraction(q, assignment)
        if lhs != eval_lincomb(rhs, assignment):
            return Verdict(False, assignment)
    return Verdict(True, None)
