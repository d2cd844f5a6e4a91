"""Truncated formal power series in q over the integers and over Z/m.

A series of order N stores the coefficients of q^0 .. q^N and nothing else.
Binary operations truncate to the smaller operand order, and reading past the
order raises instead of returning zero.
"""
from qseries.errors import NonUnitError, SeriesError, TruncationError
from qseries.kronecker import convolve_schoolbook, convolve_signed, convolve_unsigned

REPR_TERMS = 8


class TruncatedSeries:
    """Shared read-only behaviour of Series and ModSeries."""

    def __init__(self, coeffs, order: int):
        if not isinstance(order, int) or order < 0:
            raise TruncationError(f"order must be a non-negative integer, got {order!r}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != order + 1:
            raise TruncationError(f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}")
        self._coeffs = coeffs
        self._order = order

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._order

    @property
    def modulus(self):
        return None

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self._order:
            raise TruncationError(f"coefficient {n} requested from a series of order {self._order}")
        return self._coeffs[n]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def nonzero_terms(self):
        return [(n, c) for n, c in enumerate(self._coeffs) if c]

    def _new(self, coeffs, order):
        raise NotImplementedError

    def __getitem__(self, n):
        return self.coeff(n)

    def __len__(self):
        return self._order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return subtract(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __neg__(self):
        return negate(self)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __eq__(self, other):
        if type(self) != type(other):
            return False
        return self.modulus == other.modulus and self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.modulus, self._order, self._coeffs))

    def _terms_repr(self):
        shown = [f"{c}q^{n}" for n, c in self.nonzero_terms()[:REPR_TERMS]]
        if len(self.nonzero_terms()) > REPR_TERMS:
            shown.append("...")
        return " + ".join(shown) if shown else "0"


class Series(TruncatedSeries):
    """Exact integer coefficients, signs kept as they are."""

    def _new(self, coeffs, order):
        return Series(coeffs, order)

    def __repr__(self):
        return f"<Series O(q^{self.order + 1}) {self._terms_repr()}>"


class ModSeries(TruncatedSeries):
    """Coefficients reduced into [0, m)."""

    def __init__(self, coeffs, order: int, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise SeriesError(f"modulus must be an integer >= 2, got {modulus!r}")
        self._modulus = modulus
        super().__init__((int(c) % modulus for c in coeffs), order)

    @property
    def modulus(self) -> int:
        return self._modulus

    def _new(self, coeffs, order):
        return ModSeries(coeffs, order, self._modulus)

    def __repr__(self):
        return f"<ModSeries mod {self._modulus} O(q^{self.order + 1}) {self._terms_repr()}>"


def _common_order(s, t) -> int:
    if type(s) != type(t):
        raise TypeError(f"cannot combine {type(s).__name__} with {type(t).__name__}")
    if s.modulus != t.modulus:
        raise SeriesError(f"moduli differ: {s.modulus} and {t.modulus}")
    return min(s.order, t.order)


def make(coeff_list, order: int) -> Series:
    if not isinstance(order, int) or order < 0:
        raise TruncationError(f"order must be a non-negative integer, got {order!r}")
    coeff_list = list(coeff_list)
    if len(coeff_list) > order + 1:
        raise TruncationError(f"{len(coeff_list)} coefficients do not fit in order {order}")
    return Series(coeff_list + [0] * (order + 1 - len(coeff_list)), order)


def zero(order: int, modulus=None):
    if modulus is None:
        return Series([0] * (order + 1), order)
    return ModSeries([0] * (order + 1), order, modulus)


def one(order: int, modulus=None):
    return monomial(1, 0, order, modulus)


def monomial(coefficient: int, exponent: int, order: int, modulus=None):
    coeffs = [0] * (order + 1)
    if exponent <= order:
        coeffs[exponent] = coefficient
    if modulus is None:
        return Series(coeffs, order)
    return ModSeries(coeffs, order, modulus)


def add(s, t):
    order = _common_order(s, t)
    return s._new([a + b for a, b in zip(s.coeffs[: order + 1], t.coeffs[: order + 1])], order)


def subtract(s, t):
    order = _common_order(s, t)
    return s._new([a - b for a, b in zip(s.coeffs[: order + 1], t.coeffs[: order + 1])], order)


def negate(s):
    return s._new([-c for c in s.coeffs], s.order)


def scale(s, factor: int):
    return s._new([factor * c for c in s.coeffs], s.order)


def mul(s, t):
    order = _common_order(s, t)
    count = order + 1
    if s.modulus is None:
        return Series(convolve_signed(list(s.coeffs), list(t.coeffs), count), order)
    return s._new(convolve_unsigned(list(s.coeffs), list(t.coeffs), count), order)


def mul_schoolbook(s, t):
    order = _common_order(s, t)
    return s._new(convolve_schoolbook(list(s.coeffs), list(t.coeffs), order + 1), order)


def _unit_inverse(s) -> int:
    constant = s.coeffs[0]
    if s.modulus is None:
        if constant not in (1, -1):
            raise NonUnitError(constant)
        return constant
    try:
        return pow(constant, -1, s.modulus)
    except ValueError:
        raise NonUnitError(constant, s.modulus) from None


def invert(s):
    """1/S by forward substitution over the nonzero coefficients of S."""
    inverse_constant = _unit_inverse(s)
    modulus = s.modulus
    terms = [(j, c) for j, c in s.nonzero_terms() if j > 0]
    out = [0] * (s.order + 1)
    out[0] = inverse_constant
    for n in range(1, s.order + 1):
        acc = 0
        for j, c in terms:
            if j > n:
                break
            acc += c * out[n - j]
        value = -inverse_constant * acc
        out[n] = value % modulus if modulus is not None else value
    return s._new(out, s.order)


def power(s, exponent: int):
    if exponent < 0:
        s = invert(s)
        exponent = -exponent
    result = one(s.order, s.modulus)
    base = s
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def dilate(s, k: int, order=None):
    """Substitute q -> q^k.

    The result keeps the order of S unless another order is given; terms pushed
    past it are dropped. A larger order is only allowed while S still knows
    every coefficient it needs (order // k <= order(S)).
    """
    if not isinstance(k, int) or k < 1:
        raise SeriesError(f"dilation must be a positive integer, got {k!r}")
    if order is None:
        order = s.order
    if order // k > s.order:
        raise TruncationError(f"dilating a series of order {s.order} by {k} cannot reach order {order}")
    out = [0] * (order + 1)
    out[::k] = s.coeffs[: order // k + 1]
    return s._new(out, order)


def shift(s, exponent: int):
    """Multiply by q^exponent at the same order."""
    if exponent < 0:
        raise SeriesError("shift exponent must be non-negative")
    if exponent > s.order:
        return s._new([0] * (s.order + 1), s.order)
    return s._new([0] * exponent + list(s.coeffs[: s.order + 1 - exponent]), s.order)


def truncate(s, order: int):
    if not 0 <= order <= s.order:
        raise TruncationError(f"cannot truncate a series of order {s.order} to order {order}")
    return s._new(s.coeffs[: order + 1], order)


def reduce_mod(s, modulus: int) -> ModSeries:
    if s.modulus is not None and s.modulus % modulus != 0:
        raise SeriesError(f"cannot reduce a series mod {s.modulus} to mod {modulus}")
    return ModSeries(s.coeffs, s.order, modulus)


def lift(s: ModSeries) -> Series:
    return Series(s.coeffs, s.order)


def coeff(s, n: int) -> int:
    return s.coeff(n)


def eq_upto(s, t, order: int) -> bool:
    common = _common_order(s, t)
    if not 0 <= order <= common:
        raise TruncationError(f"cannot compare up to {order}: series are only known to order {common}")
    return s.coeffs[: order + 1] == t.coeffs[: order + 1]
