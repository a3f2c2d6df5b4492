"""Parser for tropical polynomial expressions.

Grammar ("+" is max, "*" is plus, "^" scales exponents):

    expr     := term ("+" term)*
    term     := coeff "*" monomial | monomial | coeff
    monomial := var ["^" nat] ["*" var ["^" nat]]
    var      := "x" | "y"
    coeff    := rational literal, possibly negative, possibly "p/q"

Duplicate monomials merge by taking the larger coefficient.  Example:
"3*x + 2*y + 0" is the classic tropical line with vertex (-3, -2).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .tropical import TropicalPolynomial


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch in "xy":
            tokens.append(("var", ch, i))
            i += 1
            continue
        if ch == "-" or ch.isdigit():
            start = i
            i += 1
            while i < n and text[i].isdigit():
                i += 1
            if i == start + 1 and ch == "-":
                raise ParseError("dangling '-'", start)
            if i < n and text[i] == "/":
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                if i == dstart:
                    raise ParseError("missing denominator", dstart)
            tokens.append(("num", Fraction(text[start:i]), start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", tok[2])
        self.pos += 1
        return tok

    def parse_nat(self) -> int:
        kind, value, at = self.take()
        if kind != "num" or value.denominator != 1 or value < 0:
            raise ParseError("exponent must be a natural number", at)
        return int(value)

    def parse_var_power(self) -> tuple[str, int]:
        _, name, _ = self.take("var")
        power = 1
        if self.peek()[0] == "^":
            self.take("^")
            power = self.parse_nat()
        return name, power

    def parse_monomial(self) -> tuple[int, int]:
        exps = {"x": 0, "y": 0}
        name, power = self.parse_var_power()
        exps[name] += power
        if self.peek()[0] == "*" and self.tokens[self.pos + 1][0] == "var":
            self.take("*")
            name, power = self.parse_var_power()
            exps[name] += power
        return exps["x"], exps["y"]

    def parse_term(self) -> tuple[tuple[int, int], Fraction]:
        kind, value, at = self.peek()
        if kind == "num":
            self.take()
            if self.peek()[0] == "*":
                self.take("*")
                return self.parse_monomial(), value
            return (0, 0), value
        if kind == "var":
            return self.parse_monomial(), Fraction(0)
        raise ParseError("expected a coefficient or a variable", at)

    def parse_expr(self) -> TropicalPolynomial:
        terms: dict[tuple[int, int], Fraction] = {}

        def absorb(exp, coeff):
            if exp not in terms or coeff > terms[exp]:
                terms[exp] = coeff

        absorb(*self.parse_term())
        while self.peek()[0] == "+":
            self.take("+")
            absorb(*self.parse_term())
        kind, _, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {kind}", at)
        return TropicalPolynomial.from_dict(terms)


def parse(text: str) -> TropicalPolynomial:
    """Parse an expression in the grammar above into a polynomial."""
    if not text or not text.strip():
        raise ParseError("empty input", 0)
    return _Parser(_tokenize(text)).parse_expr()
