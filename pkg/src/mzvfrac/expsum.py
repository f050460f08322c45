"""Exact exponential sums sum(c * e^(b*t)) and their integral operators.

Rates and coefficients are exact rationals, so every operator identity in
this module is checked with plain equality, no tolerances.  The integral
operator with rate lam maps f(t) to the antiderivative of f(t)*e^(lam*t)
that vanishes at -infinity; on this algebra it is the rewrite
e^(b*t) -> e^((b+lam)*t) / (b+lam), defined whenever b+lam > 0.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInDomain, UnboundVariable
from .words import as_lincomb
from .rational_eval import fraction_value


class ExpSum:
    """Finite sum of c*e^(b*t) with rational c != 0 and rational rate b >= 0."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for rate, coef in items:
            rate = Fraction(rate)
            coef = Fraction(coef)
            if rate < 0:
                raise ValueError("rates must be >= 0, got %s" % rate)
            c = acc.get(rate, Fraction(0)) + coef
            if c:
                acc[rate] = c
            elif rate in acc:
                del acc[rate]
        self._terms = acc

    @classmethod
    def exponential(cls, rate, coef=1) -> "ExpSum":
        return cls(((rate, coef),))

    def items(self):
        return sorted(self._terms.items())

    def rates(self):
        return sorted(self._terms)

    @property
    def strictly_positive(self) -> bool:
        """Whether every rate is > 0 (no constant component)."""
        return all(b > 0 for b in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ExpSum):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, ExpSum):
            return NotImplemented
        acc = dict(self._terms)
        for rate, coef in other._terms.items():
            c = acc.get(rate, Fraction(0)) + coef
            if c:
                acc[rate] = c
            else:
                del acc[rate]
        out = ExpSum.__new__(ExpSum)
        out._terms = acc
        return out

    def __sub__(self, other):
        if not isinstance(other, ExpSum):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        """Function product: rates add, coefficients multiply."""
        if not isinstance(other, ExpSum):
            return self.__rmul__(other)
        acc = {}
        for b1, c1 in self._terms.items():
            for b2, c2 in other._terms.items():
                b = b1 + b2
                c = acc.get(b, Fraction(0)) + c1 * c2
                if c:
                    acc[b] = c
                elif b in acc:
                    del acc[b]
        out = ExpSum.__new__(ExpSum)
        out._terms = acc
        return out

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return ExpSum()
        out = ExpSum.__new__(ExpSum)
        out._terms = {b: scalar * c for b, c in self._terms.items()}
        return out

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join("%s*e^(%st)" % (c, b) for b, c in self.items())


ONE = ExpSum(((0, 1),))


def integrate(f: ExpSum, rate=0) -> ExpSum:
    """Apply the rate-``rate`` integral operator to f.

    With rate 0 every term of f must have a strictly positive rate, else
    the defining integral diverges.
    """
    rate = Fraction(rate)
    if rate < 0:
        raise ValueError("operator rate must be >= 0")
    acc = {}
    for b, c in f._terms.items():
        nb = b + rate
        if nb == 0:
            raise NotInDomain("constant term has no decaying antiderivative")
        acc[nb] = acc.get(nb, Fraction(0)) + c / nb
    return ExpSum(acc)


def integral_representation(exponents, rates) -> ExpSum:
    """Iterated integral of the constant 1 for the given exponent/rate data.

    Operators apply innermost (rightmost block) first: the rate-b_k operator,
    then s_k - 1 rate-0 operators, and so on outward.  The result is the
    single term f(exponents; rates) * e^(sum(rates)*t), which the test suite
    checks against direct fraction evaluation.
    """
    exponents = tuple(exponents)
    rates = tuple(Fraction(b) for b in rates)
    if len(exponents) != len(rates) or not exponents:
        raise ValueError("need matching nonempty exponent and rate vectors")
    if any(s < 1 for s in exponents):
        raise ValueError("exponents must be >= 1")
    if any(b <= 0 for b in rates):
        raise ValueError("rates must be positive")
    f = ONE
    for s, b in zip(reversed(exponents), reversed(rates)):
        f = integrate(f, b)
        for _ in range(s - 1):
            f = integrate(f)
    return f


def as_exp_sum(xi, rates) -> ExpSum:
    """Realize terms as exponential functions of t.

    Each term becomes (its fraction value at the rates) * e^(rate sum * t);
    the unit term becomes the constant 1.  ``rates`` maps variable names to
    positive rationals; coincident rates are allowed here even though the
    symbolic product requires distinct variables.
    """
    acc = ExpSum()
    for term, coef in as_lincomb(xi):
        values = []
        for u in term.variables:
            try:
                b = Fraction(rates[u])
            except KeyError:
                raise UnboundVariable("no rate for variable %r" % u) from None
            if b <= 0:
                raise ValueError("rates must be positive, got %s=%s" % (u, b))
            values.append(b)
        value = coef * fraction_value(term.exponents, values)
        acc = acc + ExpSum(((sum(values), value),))
    return acc


def eval_at_zero(f: ExpSum) -> Fraction:
    """Value of f at t = 0, i.e. the sum of its coefficients."""
    return sum(f._terms.values(), Fraction(0))
