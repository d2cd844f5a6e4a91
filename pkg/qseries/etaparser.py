"""Text syntax for eta-quotients, e.g. ``f2^4/f1^5`` or ``f1^-5 * f2^4``.

    product := factor (('*' | '/') factor)*
    factor  := 'f' INT ('^' ['+' | '-'] INT)? | '1' | '(' product ')'

Whitespace is ignored. '/' divides by the single factor that follows it.
"""
import re

from qseries.errors import EtaSyntaxError
from qseries.special import EtaQuotient

_TOKEN = re.compile(r"\d+|[f^*/()+\-]")


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise EtaSyntaxError(f"unexpected character {text[position]!r}", text, position)
        tokens.append((match.group(), position))
        position = match.end()
    tokens.append(("", len(text)))
    return tokens


class _EtaParser:
    def __init__(self, text):
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    @property
    def current(self):
        return self._tokens[self._index]

    def _advance(self):
        token = self.current
        self._index += 1
        return token

    def _fail(self, message):
        raise EtaSyntaxError(message, self._text, self.current[1])

    def _integer(self):
        value, _ = self.current
        if not value.isdigit():
            self._fail("expected an integer")
        self._advance()
        return int(value)

    def parse(self):
        factors = self._product()
        if self.current[0] != "":
            self._fail(f"unexpected {self.current[0]!r}")
        return EtaQuotient(factors)

    def _product(self):
        factors = self._factor()
        while self.current[0] in ("*", "/"):
            op, _ = self._advance()
            following = self._factor()
            if op == "/":
                following = [(k, -e) for k, e in following]
            factors.extend(following)
        return factors

    def _factor(self):
        value, _ = self.current
        if value == "f":
            self._advance()
            k = self._integer()
            if k < 1:
                raise EtaSyntaxError("dilation must be positive", self._text, self._tokens[self._index - 1][1])
            exponent = 1
            if self.current[0] == "^":
                self._advance()
                sign = 1
                if self.current[0] in ("+", "-"):
                    sign = -1 if self._advance()[0] == "-" else 1
                exponent = sign * self._integer()
            return [(k, exponent)]
        if value == "1":
            self._advance()
            return []
        if value == "(":
            self._advance()
            factors = self._product()
            if self.current[0] != ")":
                self._fail("expected ')'")
            self._advance()
            return factors
        if value == "":
            self._fail("unexpected end of input")
        self._fail(f"expected 'f<k>', got {value!r}")


def parse_eta(text: str) -> EtaQuotient:
    return _EtaParser(text).parse()
