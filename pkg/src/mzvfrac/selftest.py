"""Built-in verification suites behind the ``selftest`` CLI command.

Each suite checks one family of engine guarantees end to end:

* ``closed-form``        exhaustive agreement of the two product routes
* ``oracle``             rational-point verification of random products
* ``worked-examples``    longhand reference expansions for small shapes
* ``integral``           iterated integrals reproduce fraction values
* ``operator-identities`` integration by parts and the letter-operator rule
* ``exp-homomorphism``   exponential realization is multiplicative
* ``counts``             interleaving and unit-coefficient term counts
* ``numeric-euler``      truncated zeta sums of the depth-one expansions

All randomized suites run from fixed seeds and report the first few
mismatches in their detail string.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from typing import NamedTuple

from .closed_form import (
    binomial,
    closed_form_product,
    compositions,
    euler_decomposition,
    interleavings,
)
from .expsum import ExpSum, as_exp_sum, eval_at_zero, integral_representation
from .expsum import integrate
from .nested_sums import check_summed_identity
from .rational_eval import fraction_value, sample_assignment, verify_identity
from .shuffle import prepend_letter, shuffle_product
from .words import X0, UNIT, FracTerm, LinComb


class SuiteResult(NamedTuple):
    name: str
    passed: bool
    duration: float
    detail: str


# ---------------------------------------------------------------------------
# shared enumeration and sampling helpers

def bounded_compositions(max_weight, max_depth):
    """All compositions with weight <= max_weight and 1 <= depth <= max_depth."""
    out = []
    for w in range(1, max_weight + 1):
        for d in range(1, min(w, max_depth) + 1):
            out.extend(compositions(w, d))
    return out


def random_composition(rng, weight, depth):
    if depth == 1:
        return (weight,)
    cuts = sorted(rng.sample(range(1, weight), depth - 1))
    edges = [0] + cuts + [weight]
    return tuple(edges[i + 1] - edges[i] for i in range(depth))


def _pool(prefix, n):
    return tuple("%s%d" % (prefix, i) for i in range(1, n + 1))


def random_term(rng, prefix, max_weight, max_depth=3):
    weight = rng.randint(1, max_weight)
    depth = rng.randint(1, min(weight, max_depth))
    return FracTerm(random_composition(rng, weight, depth), _pool(prefix, depth))


def random_lincomb(rng, prefix, max_weight, allow_unit):
    terms = []
    for _ in range(rng.randint(1, 2)):
        if allow_unit and rng.random() < 0.2:
            term = UNIT
        else:
            term = random_term(rng, prefix, max_weight)
        coef = rng.choice((-3, -2, -1, 1, 2, 3))
        terms.append((term, coef))
    return LinComb(terms)


# ---------------------------------------------------------------------------
# reference expansions written longhand for the small product shapes

def two_singles_reference(i, j):
    """Depth 1 x depth 1 over (m, n): binomial split of the combined weight."""
    terms = []
    for r in range(1, i + j):
        s = i + j - r
        c = binomial(r - 1, i - 1)
        if c:
            terms.append((FracTerm((r, s), ("m", "n")), c))
        c = binomial(r - 1, j - 1)
        if c:
            terms.append((FracTerm((r, s), ("n", "m")), c))
    return LinComb(terms)


def depth_1_2_reference(r1, s1, s2):
    """Depth 1 x depth 2 over (u1) and (v1, v2): the three merge orders."""
    u1, v1, v2 = "u1", "v1", "v2"
    terms = []
    for t1, t2 in compositions(r1 + s1, 2):
        c = binomial(t1 - 1, r1 - 1)
        if c:
            terms.append((FracTerm((t1, t2, s2), (u1, v1, v2)), c))
    for t1, t2, t3 in compositions(r1 + s1 + s2, 3):
        c = binomial(t1 - 1, s1 - 1) * binomial(t2 - 1, s2 - t3)
        if c:
            terms.append((FracTerm((t1, t2, t3), (v1, u1, v2)), c))
        c = binomial(t1 - 1, s1 - 1) * binomial(t2 - 1, s2 - 1)
        if c:
            terms.append((FracTerm((t1, t2, t3), (v1, v2, u1)), c))
    return LinComb(terms)


def depth_2_2_reference(r1, r2, s1, s2):
    """Depth 2 x depth 2 over (u1, u2) and (v1, v2): six merge orders.

    The two block-adjacent orders pin the last exponent and sum over three
    components; the four alternating orders sum over all four.
    """
    u1, u2, v1, v2 = "u1", "u2", "v1", "v2"
    terms = []
    for t1, t2, t3 in compositions(r1 + r2 + s1, 3):
        c = binomial(t1 - 1, r1 - 1) * binomial(t2 - 1, r2 - 1)
        if c:
            terms.append((FracTerm((t1, t2, t3, s2), (u1, u2, v1, v2)), c))
    for t1, t2, t3 in compositions(r1 + s1 + s2, 3):
        c = binomial(t1 - 1, s1 - 1) * binomial(t2 - 1, s2 - 1)
        if c:
            terms.append((FracTerm((t1, t2, t3, r2), (v1, v2, u1, u2)), c))
    for t1, t2, t3, t4 in compositions(r1 + r2 + s1 + s2, 4):
        mid = binomial(t2 - 1, t1 + t2 - r1 - s1)
        if not mid:
            continue
        c = binomial(t1 - 1, r1 - 1) * mid * binomial(t3 - 1, s2 - t4)
        if c:
            terms.append((FracTerm((t1, t2, t3, t4), (u1, v1, u2, v2)), c))
        c = binomial(t1 - 1, s1 - 1) * mid * binomial(t3 - 1, r2 - t4)
        if c:
            terms.append((FracTerm((t1, t2, t3, t4), (v1, u1, v2, u2)), c))
        c = binomial(t1 - 1, r1 - 1) * mid * binomial(t3 - 1, s2 - 1)
        if c:
            terms.append((FracTerm((t1, t2, t3, t4), (u1, v1, v2, u2)), c))
        c = binomial(t1 - 1, s1 - 1) * mid * binomial(t3 - 1, r2 - 1)
        if c:
            terms.append((FracTerm((t1, t2, t3, t4), (v1, u1, u2, v2)), c))
    return LinComb(terms)


# ---------------------------------------------------------------------------
# suites

def _suite_closed_form():
    """Both product routes agree exactly: depths <= 3, combined weight <= 8."""
    comps = bounded_compositions(7, 3)
    pairs = 0
    bad = []
    for pc in comps:
        for qc in comps:
            if sum(pc) + sum(qc) > 8:
                continue
            p = FracTerm(pc, _pool("a", len(pc)))
            q = FracTerm(qc, _pool("b", len(qc)))
            pairs += 1
            if shuffle_product(p, q) != closed_form_product(p, q):
                bad.append((pc, qc))
    if bad:
        return False, "%d/%d pairs disagree, first %s" % (len(bad), pairs, bad[:3])
    return True, "%d composition pairs, exact agreement" % pairs


def _suite_oracle():
    """verify_identity at 25 rational points, both product routes, 100 pairs."""
    rng = random.Random(1201)
    bad = []
    for case in range(100):
        dp, dq = rng.randint(1, 3), rng.randint(1, 3)
        wp = rng.randint(dp, 8 - dq)
        wq = rng.randint(dq, 8 - wp)
        p = FracTerm(random_composition(rng, wp, dp), _pool("a", dp))
        q = FracTerm(random_composition(rng, wq, dq), _pool("b", dq))
        seed = rng.randrange(2**30)
        for route, rhs in (
            ("recursive", shuffle_product(p, q)),
            ("closed", closed_form_product(p, q)),
        ):
            verdict = verify_identity(p, q, rhs, samples=25, seed=seed)
            if not verdict.verified:
                bad.append((case, route, p, q, verdict.counterexample))
    if bad:
        return False, "%d failures, first %s" % (len(bad), bad[:1])
    return True, "100 random pairs x 2 routes x 25 samples, all verified"


def _suite_worked_examples():
    checks = 0
    bad = []

    for i in range(1, 10):
        for j in range(1, 11 - i):
            checks += 1
            if euler_decomposition(i, j) != two_singles_reference(i, j):
                bad.append(("singles", i, j))

    for r1 in range(1, 7):
        for s1 in range(1, 8 - r1):
            for s2 in range(1, 9 - r1 - s1):
                checks += 1
                got = closed_form_product(
                    FracTerm((r1,), ("u1",)), FracTerm((s1, s2), ("v1", "v2"))
                )
                if got != depth_1_2_reference(r1, s1, s2):
                    bad.append(("depth12", r1, s1, s2))

    # all-unit depth 1 x depth 2 case: three distinct unit-coefficient terms,
    # not the variant with the middle term doubled and the third one missing
    expansion = closed_form_product(
        FracTerm((1,), ("u1",)), FracTerm((1, 1), ("v1", "v2"))
    )
    expected = LinComb(
        [
            (FracTerm((1, 1, 1), ("u1", "v1", "v2")), 1),
            (FracTerm((1, 1, 1), ("v1", "u1", "v2")), 1),
            (FracTerm((1, 1, 1), ("v1", "v2", "u1")), 1),
        ]
    )
    doubled_variant = LinComb(
        [
            (FracTerm((1, 1, 1), ("u1", "v1", "v2")), 1),
            (FracTerm((1, 1, 1), ("v1", "u1", "v2")), 2),
        ]
    )
    checks += 1
    if expansion != expected or expansion == doubled_variant:
        bad.append(("unit-exponent three-term case",))

    for r1 in range(1, 6):
        for r2 in range(1, 7 - r1):
            for s1 in range(1, 8 - r1 - r2):
                for s2 in range(1, 9 - r1 - r2 - s1):
                    checks += 1
                    got = closed_form_product(
                        FracTerm((r1, r2), ("u1", "u2")),
                        FracTerm((s1, s2), ("v1", "v2")),
                    )
                    if got != depth_2_2_reference(r1, r2, s1, s2):
                        bad.append(("depth22", r1, r2, s1, s2))

    if bad:
        return False, "%d/%d reference mismatches, first %s" % (len(bad), checks, bad[:3])
    return True, "%d reference expansions matched exactly" % checks


def _suite_integral():
    """Iterated integrals equal fraction value times the full-rate exponential."""
    rng = random.Random(7041)
    checks = 0
    bad = []
    for s_vec in bounded_compositions(6, 6):
        for _ in range(5):
            rates = [
                Fraction(rng.randint(1, 40), rng.randint(1, 40))
                for _ in range(len(s_vec))
            ]
            f = integral_representation(s_vec, rates)
            value = fraction_value(s_vec, rates)
            expected = ExpSum(((sum(rates), value),))
            checks += 1
            if f != expected or eval_at_zero(f) != value:
                bad.append((s_vec, rates))
    if bad:
        return False, "%d/%d mismatches, first %s" % (len(bad), checks, bad[:2])
    return True, "%d exponent/rate cases, exact" % checks


def _random_expsum(rng, strictly_positive):
    terms = []
    for _ in range(rng.randint(1, 4)):
        num = rng.randint(1, 30) if strictly_positive else rng.randint(0, 30)
        rate = Fraction(num, rng.randint(1, 8))
        coef = Fraction(rng.choice((-5, -3, -2, -1, 1, 2, 3, 5)), rng.randint(1, 6))
        terms.append((rate, coef))
    return ExpSum(terms)


def _suite_operator_identities():
    rng = random.Random(333)
    bad = []

    # integration by parts on exponential sums, 500 cases
    for case in range(500):
        lam1 = Fraction(0) if rng.random() < 0.4 else Fraction(rng.randint(1, 20), rng.randint(1, 6))
        lam2 = Fraction(0) if rng.random() < 0.4 else Fraction(rng.randint(1, 20), rng.randint(1, 6))
        h1 = _random_expsum(rng, strictly_positive=(lam1 == 0))
        h2 = _random_expsum(rng, strictly_positive=(lam2 == 0))
        lhs = integrate(h1, lam1) * integrate(h2, lam2)
        rhs = integrate(h1 * integrate(h2, lam2), lam1) + integrate(
            integrate(h1, lam1) * h2, lam2
        )
        if lhs != rhs:
            bad.append(("integral", case))

    # letter-prepending rule on term combinations, 200 cases of weight <= 5
    for case in range(200):
        a = X0 if rng.random() < 0.5 else "p"
        b = X0 if rng.random() < 0.5 else "q"
        xi1 = random_lincomb(rng, "a", 5, allow_unit=(a != X0))
        xi2 = random_lincomb(rng, "b", 5, allow_unit=(b != X0))
        lhs = shuffle_product(prepend_letter(a, xi1), prepend_letter(b, xi2))
        rhs = prepend_letter(a, shuffle_product(xi1, prepend_letter(b, xi2))) + prepend_letter(
            b, shuffle_product(prepend_letter(a, xi1), xi2)
        )
        if lhs != rhs:
            bad.append(("letters", case))

    if bad:
        return False, "%d failures, first %s" % (len(bad), bad[:3])
    return True, "500 integral + 200 letter-operator cases, exact"


def _suite_exp_homomorphism():
    """Exponential realization turns the symbolic product into the function
    product, at distinct random rational rates; 200 cases of weight <= 5."""
    rng = random.Random(505)
    bad = []
    for case in range(200):
        p = random_term(rng, "a", 5)
        q = random_term(rng, "b", 5)
        rates = sample_assignment(rng, sorted(set(p.variables) | set(q.variables)))
        lhs = as_exp_sum(shuffle_product(p, q), rates)
        rhs = as_exp_sum(p, rates) * as_exp_sum(q, rates)
        if lhs != rhs:
            bad.append((case, p, q, rates))
    if bad:
        return False, "%d failures, first %s" % (len(bad), bad[:1])
    return True, "200 random rate cases, exact"


def _suite_counts():
    bad = []
    for k in range(1, 7):
        for l in range(1, 7):
            pats = interleavings(k, l)
            if len(pats) != math.comb(k + l, k) or len(set(pats)) != len(pats):
                bad.append(("patterns", k, l))
            for pat in pats:
                covered = set(pat.left) | set(pat.right)
                if set(pat.left) & set(pat.right) or covered != set(range(1, k + l + 1)):
                    bad.append(("disjointness", k, l, pat))
    for k in range(1, 5):
        for l in range(1, 5):
            p = FracTerm((1,) * k, _pool("a", k))
            q = FracTerm((1,) * l, _pool("b", l))
            for route, product in (
                ("closed", closed_form_product(p, q)),
                ("recursive", shuffle_product(p, q)),
            ):
                coefs = [c for _, c in product]
                if len(product) != math.comb(k + l, k) or any(c != 1 for c in coefs):
                    bad.append(("all-ones", route, k, l))
    if bad:
        return False, "failures: %s" % bad[:3]
    return True, "pattern counts for k,l <= 6 and all-ones products for k,l <= 4"


def _suite_numeric_euler():
    results = []
    for i, j in ((2, 2), (2, 3)):
        check = check_summed_identity(
            FracTerm((i,), ("m",)),
            FracTerm((j,), ("n",)),
            euler_decomposition(i, j),
            cutoff=10000,
            tol=1e-3,
        )
        results.append(((i, j), check))
    passed = all(c.passed for _, c in results)
    detail = "; ".join(
        "zeta(%d)*zeta(%d) gap %.2e" % (ij[0], ij[1], c.gap) for ij, c in results
    )
    return passed, detail + " at cutoff 10000, tol 1e-3"


SUITES = {
    "closed-form": _suite_closed_form,
    "oracle": _suite_oracle,
    "worked-examples": _suite_worked_examples,
    "integral": _suite_integral,
    "operator-identities": _suite_operator_identities,
    "exp-homomorphism": _suite_exp_homomorphism,
    "counts": _suite_counts,
    "numeric-euler": _suite_numeric_euler,
}


def run_suite(name) -> SuiteResult:
    fn = SUITES[name]
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crashed suite is a failed suite
        passed, detail = False, "raised %r" % exc
    return SuiteResult(name, passed, time.perf_counter() - start, detail)


def run_suites(names=None):
    if names is None:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError("unknown suite(s): %s" % ", ".join(unknown))
    return [run_suite(n) for n in names]
