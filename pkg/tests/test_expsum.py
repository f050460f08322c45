import random
from fractions import Fraction

import pytest

from mzvfrac import (
    ONE,
    UNIT,
    ExpSum,
    FracTerm,
    LinComb,
    NotInDomain,
    UnboundVariable,
    as_exp_sum,
    eval_at_zero,
    fraction_value,
    integral_representation,
    integrate,
    shuffle_product,
)


def E(rate, coef=1):
    return ExpSum.exponential(Fraction(rate), Fraction(coef))


def test_multiplication():
    assert ONE * E(3) == E(3)
    assert E(1, 2) * E(2, 3) == E(3, 6)
    assert (E(1) + E(2)) * (E(1) - E(2)) == E(2) - E(4)


def test_canonical_form():
    assert E(1) - E(1) == ExpSum()
    assert not (E(1) - E(1))
    assert ExpSum([(Fraction(1, 2), 1), (Fraction(1, 2), -1)]) == ExpSum()
    with pytest.raises(ValueError):
        ExpSum([(Fraction(-1), 1)])


def test_integrate_rules():
    assert integrate(ONE, 3) == E(3, Fraction(1, 3))
    assert integrate(E(3)) == E(3, Fraction(1, 3))
    with pytest.raises(NotInDomain):
        integrate(ONE)
    with pytest.raises(NotInDomain):
        integrate(E(0, 5) + E(2))
    with pytest.raises(ValueError):
        integrate(ONE, -1)


def test_integrate_output_strictly_positive():
    f = E(0, 2) + E(3)
    assert not f.strictly_positive
    assert integrate(f, Fraction(1, 2)).strictly_positive
    assert integrate(E(3)).strictly_positive


def test_integral_representation_examples():
    for b in (Fraction(1), Fraction(7, 3), Fraction(2, 5)):
        assert integral_representation((1,), (b,)) == E(b, 1 / b)
    assert integral_representation((2,), (3,)) == E(3, Fraction(1, 9))
    assert integral_representation((1, 1), (1, 2)) == E(3, Fraction(1, 6))


def test_integral_representation_validation():
    with pytest.raises(ValueError):
        integral_representation((), ())
    with pytest.raises(ValueError):
        integral_representation((1, 1), (1,))
    with pytest.raises(ValueError):
        integral_representation((1,), (0,))
    with pytest.raises(ValueError):
        integral_representation((0,), (1,))


def test_integral_representation_matches_fraction_value():
    # every composition of weight <= 4, several random positive rational rates
    rng = random.Random(11)

    def comps(total, parts):
        if parts == 0:
            return [()] if total == 0 else []
        return [
            (first,) + rest
            for first in range(1, total - parts + 2)
            for rest in comps(total - first, parts - 1)
        ]

    for w in range(1, 5):
        for d in range(1, w + 1):
            for s_vec in comps(w, d):
                for _ in range(3):
                    rates = [
                        Fraction(rng.randint(1, 30), rng.randint(1, 30))
                        for _ in range(d)
                    ]
                    f = integral_representation(s_vec, rates)
                    value = fraction_value(s_vec, rates)
                    assert f == ExpSum([(sum(rates), value)])
                    assert eval_at_zero(f) == value


def test_as_exp_sum():
    assert as_exp_sum(FracTerm((1,), ("b",)), {"b": 2}) == E(2, Fraction(1, 2))
    assert as_exp_sum(UNIT, {}) == ONE
    # coincident rates are fine here
    got = as_exp_sum(FracTerm((2, 1), ("x", "y")), {"x": 1, "y": 1})
    assert got == E(2, Fraction(1, 4))
    with pytest.raises(UnboundVariable):
        as_exp_sum(FracTerm((1,), ("b",)), {})
    with pytest.raises(ValueError):
        as_exp_sum(FracTerm((1,), ("b",)), {"b": 0})


def test_as_exp_sum_is_linear():
    xi = LinComb([(FracTerm((1,), ("x",)), 2), (FracTerm((2,), ("y",)), -3)])
    rates = {"x": Fraction(1, 2), "y": Fraction(2)}
    got = as_exp_sum(xi, rates)
    assert got == E(Fraction(1, 2), 4) + E(2, Fraction(-3, 4))


def test_eval_at_zero():
    assert eval_at_zero(E(3, Fraction(1, 9))) == Fraction(1, 9)
    assert eval_at_zero(ExpSum()) == 0
    assert eval_at_zero(E(1, Fraction(1, 2)) + E(5, Fraction(1, 3))) == Fraction(5, 6)


def test_integration_by_parts_randomized():
    rng = random.Random(77)

    def random_sum(strictly_positive):
        terms = []
        for _ in range(rng.randint(1, 3)):
            num = rng.randint(1, 12) if strictly_positive else rng.randint(0, 12)
            terms.append(
                (
                    Fraction(num, rng.randint(1, 4)),
                    Fraction(rng.choice((-3, -1, 1, 2)), rng.randint(1, 4)),
                )
            )
        return ExpSum(terms)

    for _ in range(150):
        lam1 = Fraction(0) if rng.random() < 0.5 else Fraction(rng.randint(1, 9), rng.randint(1, 3))
        lam2 = Fraction(0) if rng.random() < 0.5 else Fraction(rng.randint(1, 9), rng.randint(1, 3))
        h1 = random_sum(lam1 == 0)
        h2 = random_sum(lam2 == 0)
        lhs = integrate(h1, lam1) * integrate(h2, lam2)
        rhs = integrate(h1 * integrate(h2, lam2), lam1) + integrate(
            integrate(h1, lam1) * h2, lam2
        )
        assert lhs == rhs


def test_exponential_realization_is_multiplicative():
    rng = random.Random(42)
    for _ in range(60):
        dp, dq = rng.randint(1, 3), rng.randint(1, 3)
        wp, wq = rng.randint(dp, 5), rng.randint(dq, 5)

        def comp(weight, depth):
            if depth == 1:
                return (weight,)
            cuts = sorted(rng.sample(range(1, weight), depth - 1))
            edges = [0] + cuts + [weight]
            return tuple(edges[i + 1] - edges[i] for i in range(depth))

        p = FracTerm(comp(wp, dp), tuple("a%d" % i for i in range(dp)))
        q = FracTerm(comp(wq, dq), tuple("b%d" % i for i in range(dq)))
        names = sorted(set(p.variables) | set(q.variables))
        used = set()
        rates = {}
        for name in names:
            while True:
                v = Fraction(rng.randint(1, 60), rng.randint(1, 60))
                if v not in used:
                    used.add(v)
                    rates[name] = v
                    break
        lhs = as_exp_sum(shuffle_product(p, q), rates)
        assert lhs == as_exp_sum(p, rates) * as_exp_sum(q, rates)
