"""Arithmetic-progression extraction.

``extract`` relabels: the coefficients at m*n + r become the coefficients at n.
``component`` keeps the original exponents and zeroes everything else.
"""
from qseries.errors import SeriesError, TruncationError
from qseries.series import add


def _check_residue(m, r):
    if not isinstance(m, int) or m < 1:
        raise SeriesError(f"modulus of the progression must be a positive integer, got {m!r}")
    if not isinstance(r, int) or not 0 <= r < m:
        raise SeriesError(f"residue {r!r} is not in [0, {m})")


def extract(s, m: int, r: int):
    """T with T[n] = S[m*n + r], at order (order(S) - r) // m."""
    _check_residue(m, r)
    if r > s.order:
        raise TruncationError(f"residue {r} lies past the order {s.order}")
    order = (s.order - r) // m
    assert m * order + r <= s.order < m * (order + 1) + r
    return s._new(s.coeffs[r::m][: order + 1], order)


def component(s, m: int, r: int):
    """q^r * extract(S, m, r)(q^m): the part of S on exponents congruent to r mod m, at order(S)."""
    _check_residue(m, r)
    out = [0] * (s.order + 1)
    out[r::m] = s.coeffs[r::m]
    return s._new(out, s.order)


def dissect(s, m: int) -> list:
    return [component(s, m, r) for r in range(m)]


def reassemble(parts):
    parts = list(parts)
    if not parts:
        raise SeriesError("reassemble needs at least one component")
    total = parts[0]
    for part in parts[1:]:
        total = add(total, part)
    return total
