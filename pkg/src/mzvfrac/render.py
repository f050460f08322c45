"""Text, LaTeX and JSON rendering of term combinations."""

from __future__ import annotations

import json
import re

from .words import FracTerm, LinComb, is_variable_name

FORMATS = ("text", "latex", "json")

_TRAILING_DIGITS = re.compile(r"\A([A-Za-z][A-Za-z0-9_]*?)([0-9]+)\Z")


def latex_variable(name: str) -> str:
    """u12 -> u_{12}; other underscores are escaped instead of subscripted."""
    m = _TRAILING_DIGITS.match(name)
    if m and not m.group(1).endswith("_"):
        return "%s_{%s}" % (m.group(1).replace("_", r"\_"), m.group(2))
    return name.replace("_", r"\_")


def term_latex(term: FracTerm, coef: int = 1) -> str:
    if not term.exponents:
        return str(coef)
    factors = []
    for i, s in enumerate(term.exponents):
        body = "+".join(latex_variable(u) for u in term.variables[i:])
        if len(term.variables) - i > 1:
            body = "(%s)" % body
        if s > 1:
            body += "^{%d}" % s
        factors.append(body)
    return "\\frac{%d}{%s}" % (coef, "".join(factors))


def lincomb_latex(xi: LinComb) -> str:
    if not xi:
        return "0"
    parts = []
    for term, coef in xi:
        if coef < 0:
            parts.append(("-", term_latex(term, -coef)))
        else:
            parts.append(("+", term_latex(term, coef)))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def lincomb_text(xi: LinComb) -> str:
    return repr(xi)


def lincomb_to_json(xi: LinComb) -> str:
    """Canonical-order JSON with string coefficients:
    {"terms":[{"coef":"2","s":[3,1],"u":["m","n"]}]}"""
    payload = {
        "terms": [
            {"coef": str(coef), "s": list(term.exponents), "u": list(term.variables)}
            for term, coef in xi
        ]
    }
    return json.dumps(payload, separators=(",", ":"))


def lincomb_from_json(text: str) -> LinComb:
    payload = json.loads(text)
    terms = []
    for entry in payload["terms"]:
        exponents = tuple(int(s) for s in entry["s"])
        variables = tuple(entry["u"])
        if len(exponents) != len(variables):
            raise ValueError("mismatched 's' and 'u' lengths")
        if any(s < 1 for s in exponents):
            raise ValueError("exponents must be >= 1")
        if not all(is_variable_name(u) for u in variables):
            raise ValueError("bad variable name in 'u'")
        terms.append((FracTerm(exponents, variables), int(entry["coef"])))
    return LinComb(terms)


def render_lincomb(xi: LinComb, fmt: str = "text") -> str:
    if fmt == "text":
        return lincomb_text(xi)
    if fmt == "latex":
        return lincomb_latex(xi)
    if fmt == "json":
        return lincomb_to_json(xi)
    raise ValueError("unknown format %r" % fmt)
