"""Recursive shuffle product and the letter-prepending operators."""

from functools import lru_cache

from .errors import NotInDomain, VariableCollision
from .words import X0, FracTerm, LinComb, as_lincomb, term_to_word, word_to_term


@lru_cache(maxsize=None)
def shuffle_words(a: tuple, b: tuple) -> LinComb:
    """All interleavings of the two words, with multiplicities.

    Two-branch recursion on the leading letters; the unit word is neutral.
    Results are cached and must not be mutated (LinComb has no mutating
    API, so sharing is safe).
    """
    if not a:
        return LinComb.single(b)
    if not b:
        return LinComb.single(a)
    left = LinComb(((a[0],) + w, c) for w, c in shuffle_words(a[1:], b))
    right = LinComb(((b[0],) + w, c) for w, c in shuffle_words(a, b[1:]))
    return left + right


def _term_pair_product(p: FracTerm, q: FracTerm) -> LinComb:
    shared = set(p.variables) & set(q.variables)
    if shared:
        raise VariableCollision(
            "factors share variable(s) %s" % ", ".join(sorted(shared))
        )
    shuffled = shuffle_words(term_to_word(p), term_to_word(q))
    # Both inputs end in a variable letter, so every interleaving does too.
    return LinComb((word_to_term(w), c) for w, c in shuffled)


def shuffle_product(p, q) -> LinComb:
    """Product of fraction terms, transported through the word encoding.

    Accepts bare terms or LinCombs of terms and extends bilinearly.  Every
    pair of terms multiplied together must have disjoint variables.
    """
    acc = LinComb()
    for tp, cp in as_lincomb(p):
        for tq, cq in as_lincomb(q):
            acc = acc + (cp * cq) * _term_pair_product(tp, tq)
    return acc


def prepend_letter(letter, xi) -> LinComb:
    """Left-concatenation by one letter, in term form.

    Prepending x0 raises the leading exponent by one (undefined on the unit
    term, whose word is empty and would become inadmissible).  Prepending a
    variable letter starts a new leading block with exponent 1.  Extended
    linearly over a LinComb.
    """
    out = []
    for t, c in as_lincomb(xi):
        if letter == X0:
            if not t.exponents:
                raise NotInDomain("cannot raise the leading exponent of the unit term")
            nt = FracTerm((t.exponents[0] + 1,) + t.exponents[1:], t.variables)
        else:
            nt = FracTerm((1,) + t.exponents, (letter,) + t.variables)
        out.append((nt, c))
    return LinComb(out)
