"""Words, fraction terms and integer linear combinations.

The two symbolic carriers:

* a *word* is a tuple of letters over the alphabet {x0} plus one letter per
  variable.  The x0 letter is the empty string and a variable letter is the
  variable's name, so plain tuple comparison orders letters with x0 first.
* a *fraction term* ``FracTerm(exponents, variables)`` stands for the
  rational function ``1/((u1+...+uk)^s1 (u2+...+uk)^s2 ... uk^sk)``.

A word is *admissible* when it is empty or ends in a variable letter.
Admissible words are in bijection with fraction terms: each denominator
factor ``(...)^s`` with innermost variable u becomes the letter block
``x0^(s-1) x_u``.  ``word_to_term`` / ``term_to_word`` implement the two
directions.

``LinComb`` holds a finite integer combination of either carrier in
canonical form: no zero coefficients, and iteration follows a fixed total
order (words: length then letters; terms: variable vector then exponent
vector).
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import NotAdmissible, ParseError

# The x0 letter. The empty string is not a legal variable name and sorts
# before every one of them.
X0 = ""

_IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_variable_name(name) -> bool:
    return isinstance(name, str) and bool(_IDENTIFIER.match(name))


def concat(a: tuple, b: tuple) -> tuple:
    """Concatenation of two words (the monoid product)."""
    return a + b


def is_admissible(word: tuple) -> bool:
    return not word or word[-1] != X0


class FracTerm(NamedTuple):
    """One symbolic fraction, as its exponent and variable vectors.

    The empty term ``UNIT`` is the multiplicative unit 1.  Its weight is 0,
    which is what makes the weight-induction of the operator identities
    terminate.
    """

    exponents: tuple
    variables: tuple

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def depth(self) -> int:
        return len(self.exponents)

    def __str__(self):
        if not self.exponents:
            return "1"
        return "<{};{}>".format(
            ",".join(str(s) for s in self.exponents), ",".join(self.variables)
        )


UNIT = FracTerm((), ())


def frac_term(exponents, variables) -> FracTerm:
    """Validating constructor used by the public API and the parser.

    Enforces positive integer exponents, matching lengths, identifier
    variable names and pairwise-distinct variables.  Internal code that
    transports shuffle output may build ``FracTerm`` directly, since words
    such as ``x_u x_u`` decode to terms with a repeated variable.
    """
    exponents = tuple(exponents)
    variables = tuple(variables)
    if len(exponents) != len(variables):
        raise ValueError(
            "need as many variables as exponents, got %d and %d"
            % (len(exponents), len(variables))
        )
    for s in exponents:
        if not isinstance(s, int) or s < 1:
            raise ValueError("exponents must be integers >= 1, got %r" % (s,))
    for u in variables:
        if not is_variable_name(u):
            raise ValueError("bad variable name %r" % (u,))
    if len(set(variables)) != len(variables):
        raise ValueError("variables within one term must be distinct")
    return FracTerm(exponents, variables)


def term_to_word(term: FracTerm) -> tuple:
    """Encode a term as the word x0^(s1-1) x_{u1} ... x0^(sk-1) x_{uk}."""
    letters = []
    for s, u in zip(term.exponents, term.variables):
        letters.extend([X0] * (s - 1))
        letters.append(u)
    return tuple(letters)


def word_to_term(word: tuple) -> FracTerm:
    """Decode an admissible word into its unique block form.

    Raises NotAdmissible when the word ends in x0, since then no block
    decomposition exists.
    """
    if not is_admissible(word):
        raise NotAdmissible("word %r ends in x0 and has no block form" % (word,))
    exponents = []
    variables = []
    run = 0
    for letter in word:
        if letter == X0:
            run += 1
        else:
            exponents.append(run + 1)
            variables.append(letter)
            run = 0
    return FracTerm(tuple(exponents), tuple(variables))


def _sort_key(basis):
    if isinstance(basis, FracTerm):
        return (basis.variables, basis.exponents)
    return (len(basis), basis)


class LinComb:
    """Finite integer combination of words or fraction terms.

    Zero coefficients are never stored, so two combinations are equal
    exactly when their term maps are.  Iteration yields (basis, coefficient)
    pairs in the canonical order.  Instances are immutable by convention:
    no method mutates, all operators return fresh objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for basis, coef in items:
            c = acc.get(basis, 0) + coef
            if c:
                acc[basis] = c
            elif basis in acc:
                del acc[basis]
        self._terms = acc

    @classmethod
    def single(cls, basis, coef=1) -> "LinComb":
        return cls(((basis, coef),))

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0])))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, basis):
        return basis in self._terms

    def coefficient(self, basis) -> int:
        return self._terms.get(basis, 0)

    def coefficient_sum(self) -> int:
        """Sum of all coefficients (term count with multiplicity)."""
        return sum(self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for basis, coef in other._terms.items():
            c = acc.get(basis, 0) + coef
            if c:
                acc[basis] = c
            else:
                del acc[basis]
        out = LinComb.__new__(LinComb)
        out._terms = acc
        return out

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinComb()
        out = LinComb.__new__(LinComb)
        out._terms = {b: scalar * c for b, c in self._terms.items()}
        return out

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for basis, coef in self:
            text = str(basis)
            if coef == 1:
                parts.append(text)
            elif coef == -1:
                parts.append("-" + text)
            else:
                parts.append("%d*%s" % (coef, text))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def as_lincomb(x) -> LinComb:
    """Wrap a bare FracTerm (or word tuple) as a one-term combination."""
    if isinstance(x, LinComb):
        return x
    return LinComb.single(x)


def _split_list(text, start, stop):
    """Comma-split text[start:stop] into (token, offset) pairs."""
    pieces = []
    pos = start
    segment = text[start:stop]
    for chunk in segment.split(","):
        stripped = chunk.strip()
        pieces.append((stripped, pos + len(chunk) - len(chunk.lstrip())))
        pos += len(chunk) + 1
    return pieces


def parse_term(text: str) -> FracTerm:
    """Parse a ``s1,...,sk;u1,...,uk`` literal, e.g. ``2,1;u,v``.

    Whitespace around tokens is ignored.  Raises ParseError with the offset
    of the offending token.
    """
    semi = text.find(";")
    if semi < 0:
        raise ParseError("expected ';' between exponents and variables", text, len(text))
    if text.find(";", semi + 1) >= 0:
        raise ParseError("more than one ';'", text, text.find(";", semi + 1))

    exponents = []
    for token, offset in _split_list(text, 0, semi):
        if not re.fullmatch(r"[0-9]+", token):
            raise ParseError("expected a positive integer", text, offset)
        value = int(token)
        if value < 1:
            raise ParseError("exponents must be >= 1", text, offset)
        exponents.append(value)

    variables = []
    seen = set()
    for token, offset in _split_list(text, semi + 1, len(text)):
        if not is_variable_name(token):
            raise ParseError("expected an identifier", text, offset)
        if token in seen:
            raise ParseError("variable %r repeated" % token, text, offset)
        seen.add(token)
        variables.append(token)

    if len(exponents) != len(variables):
        raise ParseError(
            "got %d exponents but %d variables" % (len(exponents), len(variables)),
            text,
            semi + 1,
        )
    return FracTerm(tuple(exponents), tuple(variables))
