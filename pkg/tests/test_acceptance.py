"""Acceptance gate: every criterion runs at its stated scale and tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion; the same suites back the ``mzvfrac selftest`` command.

Criteria and their scales:

1. closed-form          both product routes agree exactly for all composition
                        pairs with depths <= 3 and combined weight <= 8
2. oracle               100 seeded random pairs verified at 25 distinct
                        rational points per route, exact
3. worked-examples      longhand reference expansions: depth 1x1 for weight
                        <= 10, depth 1x2 and 2x2 for weight <= 8, and the
                        all-unit three-term case with distinct terms
4. integral             iterated integrals equal fraction values for all
                        compositions of weight <= 6, 5 random rate vectors
5. operator-identities  500 integration-by-parts cases and 200
                        letter-operator cases of weight <= 5, exact
6. exp-homomorphism     200 random rational-rate product cases, exact
7. counts               C(k+l, k) interleavings for k,l <= 6; all-ones
                        products have C(k+l, k) unit terms for k,l <= 4
8. numeric-euler        truncated depth-one decompositions at cutoff 10000
                        within 1e-3
"""

import pytest

from mzvfrac.selftest import SUITES, run_suite

TIME_BUDGETS = {
    "closed-form": 60.0,
    "oracle": 30.0,
    "integral": 10.0,
    "numeric-euler": 10.0,
}


@pytest.mark.parametrize("name", list(SUITES))
def test_acceptance_criterion(name):
    result = run_suite(name)
    status = "PASS" if result.passed else "FAIL"
    print("%s: %s (%.2fs) %s" % (name, status, result.duration, result.detail))
    assert result.passed, "%s failed: %s" % (name, result.detail)
    budget = TIME_BUDGETS.get(name)
    if budget is not None:
        assert result.duration < budget, "%s took %.1fs, budget %.0fs" % (
            name,
            result.duration,
            budget,
        )
