"""Pochhammer factors f_k, eta-quotients and the theta series D(q) and Y(q)."""
import functools
from fractions import Fraction
from math import gcd

from qseries.errors import SeriesError
from qseries.series import Series, dilate, invert, mul, one, power, reduce_mod


class EtaQuotient:
    """The finite product of f_k^e over its (k, e) factors."""

    def __init__(self, factors=()):
        merged = {}
        for k, e in factors:
            if not isinstance(k, int) or k < 1:
                raise SeriesError(f"dilation must be a positive integer, got {k!r}")
            if not isinstance(e, int):
                raise SeriesError(f"exponent must be an integer, got {e!r}")
            merged[k] = merged.get(k, 0) + e
        self._factors = tuple(sorted((k, e) for k, e in merged.items() if e != 0))

    @property
    def factors(self) -> tuple:
        return self._factors

    @property
    def numerator(self) -> tuple:
        return tuple((k, e) for k, e in self._factors if e > 0)

    @property
    def denominator(self) -> tuple:
        return tuple((k, -e) for k, e in self._factors if e < 0)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(e for _, e in self._factors), 2)

    @property
    def level(self) -> int:
        return functools.reduce(lambda a, b: a * b // gcd(a, b), (k for k, _ in self._factors), 1)

    def exponent(self, k: int) -> int:
        return dict(self._factors).get(k, 0)

    def __mul__(self, other):
        return EtaQuotient(self._factors + other.factors)

    def __truediv__(self, other):
        return EtaQuotient(self._factors + tuple((k, -e) for k, e in other.factors))

    def __pow__(self, exponent: int):
        return EtaQuotient((k, e * exponent) for k, e in self._factors)

    def __eq__(self, other):
        if not isinstance(other, EtaQuotient):
            return False
        return self._factors == other._factors

    def __hash__(self):
        return hash(self._factors)

    def __str__(self):
        def render(items):
            return "*".join(f"f{k}" if e == 1 else f"f{k}^{e}" for k, e in items)

        top = render(self.numerator) or "1"
        bottom = render(self.denominator)
        if not bottom:
            return top
        if len(self.denominator) > 1:
            return f"{top}/({bottom})"
        return f"{top}/{bottom}"

    def __repr__(self):
        return f"<EtaQuotient {self}>"


@functools.lru_cache(maxsize=16)
def _euler_coefficients(order: int) -> tuple:
    # generalized pentagonal numbers j(3j-1)/2 for j = 1, -1, 2, -2, ...
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 <= order:
        sign = -1 if j % 2 else 1
        for exponent in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if exponent <= order:
                coeffs[exponent] += sign
        j += 1
    return tuple(coeffs)


@functools.lru_cache(maxsize=32)
def _euler_inverse(order: int, modulus):
    f1 = Series(_euler_coefficients(order), order)
    if modulus is not None:
        f1 = reduce_mod(f1, modulus)
    return invert(f1)


def pochhammer(k: int, order: int) -> Series:
    """f_k = (q^k; q^k)_inf truncated at q^order."""
    if not isinstance(k, int) or k < 1:
        raise SeriesError(f"dilation must be a positive integer, got {k!r}")
    return dilate(Series(_euler_coefficients(order), order), k)


def pochhammer_product(k: int, order: int) -> Series:
    """f_k by multiplying out (1 - q^k)(1 - q^2k)... one factor at a time."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for step in range(k, order + 1, k):
        for n in range(order, step - 1, -1):
            coeffs[n] -= coeffs[n - step]
    return Series(coeffs, order)


def eval_eta(quotient: EtaQuotient, order: int, modulus=None):
    """Expand an eta-quotient to the given order, optionally in Z/modulus."""
    result = one(order, modulus)
    for k, e in quotient.numerator:
        factor = pochhammer(k, order)
        if modulus is not None:
            factor = reduce_mod(factor, modulus)
        result = mul(result, power(factor, e))
    for k, e in quotient.denominator:
        result = mul(result, power(dilate(_euler_inverse(order, modulus), k), e))
    return result


def theta_D(order: int) -> Series:
    """D(q) = sum over n of (-1)^n q^(n^2)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= order:
        coeffs[n * n] += 2 * (-1) ** n
        n += 1
    return Series(coeffs, order)


def theta_Y(order: int) -> Series:
    """Y(q) = sum over n of (-1)^n q^(3n^2 - 2n)."""
    coeffs = [0] * (order + 1)
    n = 0
    while 3 * n * n - 2 * n <= order:
        coeffs[3 * n * n - 2 * n] += (-1) ** n
        # the negative index -n has exponent 3n^2 + 2n
        if n > 0 and 3 * n * n + 2 * n <= order:
            coeffs[3 * n * n + 2 * n] += (-1) ** n
        n += 1
    return Series(coeffs, order)
