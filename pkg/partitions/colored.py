"""Partitions whose odd parts come in k colors and whose even parts do not.

a_k(n) has generating function f_2^(k-1) / f_1^k, so a_1 = p and a_2 is the
overpartition function.
"""
import functools

from gmpy2 import is_prime

from qseries.errors import SeriesError
from qseries.series import Series
from qseries.special import EtaQuotient, eval_eta


class ColoredPartitionSpec:
    def __init__(self, colors: int):
        if not isinstance(colors, int) or isinstance(colors, bool) or colors < 1:
            raise SeriesError(f"number of colors must be a positive integer, got {colors!r}")
        self._colors = colors

    @property
    def colors(self) -> int:
        return self._colors

    @property
    def quotient(self) -> EtaQuotient:
        return EtaQuotient([(2, self._colors - 1), (1, -self._colors)])

    def reduced_quotient(self, modulus: int) -> EtaQuotient:
        """The quotient with f_1^(mq) -> f_m^q and f_2^(mq) -> f_2m^q applied, valid mod a prime m."""
        if not is_prime(modulus):
            return self.quotient
        high_den, low_den = divmod(self._colors, modulus)
        high_num, low_num = divmod(self._colors - 1, modulus)
        return EtaQuotient([(modulus, -high_den), (1, -low_den), (2 * modulus, high_num), (2, low_num)])

    def __repr__(self):
        return f"<ColoredPartitionSpec a_{self._colors}>"

    def __eq__(self, other):
        return isinstance(other, ColoredPartitionSpec) and self._colors == other._colors

    def __lt__(self, other):
        return self._colors < other._colors

    def __hash__(self):
        return hash(self._colors)


def ak_series(k: int, order: int) -> Series:
    return eval_eta(ColoredPartitionSpec(k).quotient, order)


def ak_oracle(k: int, order: int) -> Series:
    """a_k(0..order) by counting: each part size s contributes 1/(1 - q^s) once if even, k times if odd."""
    spec = ColoredPartitionSpec(k)
    counts = [0] * (order + 1)
    counts[0] = 1
    for size in range(1, order + 1):
        for _ in range(spec.colors if size % 2 else 1):
            for n in range(size, order + 1):
                counts[n] += counts[n - size]
    return Series(counts, order)


@functools.lru_cache(maxsize=256)
def ak_series_mod(k: int, modulus: int, order: int):
    """a_k(0..order) mod m, computed entirely in ModSeries arithmetic."""
    return eval_eta(ColoredPartitionSpec(k).reduced_quotient(modulus), order, modulus)


def ak_coeff_mod(k: int, n: int, modulus: int) -> int:
    if n < 0:
        raise SeriesError(f"index must be non-negative, got {n}")
    return ak_series_mod(k, modulus, n).coeff(n)


def partition_numbers(order: int) -> Series:
    return ak_series(1, order)


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def overpartition_oracle(order: int) -> Series:
    """Overpartition counts by listing partitions: the last occurrence of each distinct part may be overlined."""
    return Series([sum(2 ** len(set(p)) for p in _partitions(n, n)) for n in range(order + 1)], order)
