"""Coefficient sources: small expression trees that evaluate to truncated series.

Every node evaluates at a source order N; with a modulus the whole tree is
evaluated in ModSeries arithmetic. Progression and Component read the series
their child produced at order N, so a Progression(A, B) node yields a series
of order (N - B) // A.
"""
from partitions.colored import ColoredPartitionSpec, ak_series, ak_series_mod
from qseries.dissection import component, extract
from qseries.series import add, dilate, invert, monomial, mul, reduce_mod, scale, shift
from qseries.special import EtaQuotient, eval_eta, theta_D, theta_Y


class Recipe:
    def evaluate(self, order: int, modulus=None):
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def __add__(self, other):
        return Sum(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Product(Monomial(other), self)
        return Product(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return Product(Monomial(other), self)
        return NotImplemented

    def __truediv__(self, other):
        return Quotient(self, other)

    def __eq__(self, other):
        return type(self) == type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


class ColoredSource(Recipe):
    """The a_k generating function f_2^(k-1)/f_1^k."""

    def __init__(self, colors: int):
        self._spec = ColoredPartitionSpec(colors)

    @property
    def colors(self) -> int:
        return self._spec.colors

    def evaluate(self, order, modulus=None):
        if modulus is None:
            return ak_series(self.colors, order)
        return ak_series_mod(self.colors, modulus, order)

    def _key(self):
        return (self.colors,)

    def __str__(self):
        return f"a_{self.colors}"


class EtaTerm(Recipe):
    """coefficient * q^shift * (eta-quotient)."""

    def __init__(self, quotient: EtaQuotient, coefficient: int = 1, shift: int = 0):
        self._quotient = quotient
        self._coefficient = coefficient
        self._shift = shift

    @property
    def quotient(self) -> EtaQuotient:
        return self._quotient

    @property
    def coefficient(self) -> int:
        return self._coefficient

    @property
    def shift(self) -> int:
        return self._shift

    def evaluate(self, order, modulus=None):
        value = eval_eta(self._quotient, order, modulus)
        if self._coefficient != 1:
            value = scale(value, self._coefficient)
        return shift(value, self._shift)

    def _key(self):
        return (self._quotient, self._coefficient, self._shift)

    def __str__(self):
        prefix = "" if self._coefficient == 1 else f"{self._coefficient}"
        if self._shift:
            prefix += "q" if self._shift == 1 else f"q^{self._shift}"
        body = str(self._quotient)
        if body == "1" and prefix:
            return prefix
        return f"{prefix}*{body}" if prefix else body


class Monomial(EtaTerm):
    def __init__(self, coefficient: int = 1, shift: int = 0):
        super().__init__(EtaQuotient(), coefficient, shift)

    def evaluate(self, order, modulus=None):
        return monomial(self.coefficient, self.shift, order, modulus)


class Theta(Recipe):
    """D(q^k) or Y(q^k)."""

    _BUILDERS = {"D": theta_D, "Y": theta_Y}

    def __init__(self, kind: str, dilation: int = 1):
        if kind not in self._BUILDERS:
            raise ValueError(f"unknown theta series {kind!r}")
        self._kind = kind
        self._dilation = dilation

    def evaluate(self, order, modulus=None):
        value = dilate(self._BUILDERS[self._kind](order // self._dilation), self._dilation, order)
        return value if modulus is None else reduce_mod(value, modulus)

    def _key(self):
        return (self._kind, self._dilation)

    def __str__(self):
        return f"{self._kind}(q)" if self._dilation == 1 else f"{self._kind}(q^{self._dilation})"


class Sum(Recipe):
    def __init__(self, *terms):
        self._terms = tuple(terms)

    def evaluate(self, order, modulus=None):
        total = self._terms[0].evaluate(order, modulus)
        for term in self._terms[1:]:
            total = add(total, term.evaluate(order, modulus))
        return total

    def _key(self):
        return self._terms

    def __str__(self):
        return "(" + " + ".join(str(t) for t in self._terms) + ")"


class Product(Recipe):
    def __init__(self, *factors):
        self._factors = tuple(factors)

    def evaluate(self, order, modulus=None):
        result = self._factors[0].evaluate(order, modulus)
        for factor in self._factors[1:]:
            result = mul(result, factor.evaluate(order, modulus))
        return result

    def _key(self):
        return self._factors

    def __str__(self):
        return "*".join(str(f) for f in self._factors)


class Quotient(Recipe):
    def __init__(self, numerator: Recipe, denominator: Recipe):
        self._numerator = numerator
        self._denominator = denominator

    def evaluate(self, order, modulus=None):
        return mul(self._numerator.evaluate(order, modulus), invert(self._denominator.evaluate(order, modulus)))

    def _key(self):
        return (self._numerator, self._denominator)

    def __str__(self):
        return f"{self._numerator} / {self._denominator}"


class Dilated(Recipe):
    def __init__(self, inner: Recipe, k: int):
        self._inner = inner
        self._k = k

    def evaluate(self, order, modulus=None):
        return dilate(self._inner.evaluate(order // self._k, modulus), self._k, order)

    def _key(self):
        return (self._inner, self._k)

    def __str__(self):
        return f"[{self._inner}](q -> q^{self._k})"


class Progression(Recipe):
    """sum over n of c(A n + B) q^n for the coefficients c of the inner series."""

    def __init__(self, inner: Recipe, stride: int, offset: int):
        self._inner = inner
        self._stride = stride
        self._offset = offset

    def evaluate(self, order, modulus=None):
        return extract(self._inner.evaluate(order, modulus), self._stride, self._offset)

    def _key(self):
        return (self._inner, self._stride, self._offset)

    def __str__(self):
        return f"sum {self._inner}({self._stride}n+{self._offset}) q^n"


class Component(Recipe):
    """The part of the inner series on exponents congruent to r mod m, exponents kept."""

    def __init__(self, inner: Recipe, m: int, r: int):
        self._inner = inner
        self._m = m
        self._r = r

    def evaluate(self, order, modulus=None):
        return component(self._inner.evaluate(order, modulus), self._m, self._r)

    def _key(self):
        return (self._inner, self._m, self._r)

    def __str__(self):
        return f"[{self._inner}]_{{{self._r} mod {self._m}}}"
