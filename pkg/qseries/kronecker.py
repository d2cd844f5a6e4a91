"""Truncated convolution by Kronecker substitution.

A coefficient list is packed into one big integer with a fixed number of bytes
per slot, the two integers are multiplied with gmpy2, and the product is cut
back into slots. Slots are wide enough that no slot ever carries into its
neighbour, so the result is bit-identical to the schoolbook convolution.
"""
from gmpy2 import mpz


def _pack(values, width):
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _unpack(value, width, count):
    nbytes = width * count
    raw = (value & ((1 << (8 * nbytes)) - 1)).to_bytes(nbytes, "little")
    return [int.from_bytes(raw[i : i + width], "little") for i in range(0, nbytes, width)]


def convolve_unsigned(a, b, count):
    """First `count` coefficients of a*b for non-negative coefficient lists."""
    a = a[:count]
    b = b[:count]
    if not a or not b:
        return [0] * count
    bound = max(a) * max(b) * min(len(a), len(b))
    if bound == 0:
        return [0] * count
    width = (bound.bit_length() + 7) // 8
    product = int(mpz(_pack(a, width)) * mpz(_pack(b, width)))
    return _unpack(product, width, count)


def convolve_signed(a, b, count):
    """First `count` coefficients of a*b for arbitrary integer coefficient lists."""
    a = a[:count]
    b = b[:count]
    if not a or not b:
        return [0] * count
    bound = max(abs(v) for v in a) * max(abs(v) for v in b) * min(len(a), len(b))
    if bound == 0:
        return [0] * count
    # every product slot must satisfy |c| < 2^(8*width - 1)
    width = (bound.bit_length() + 8) // 8
    packed_a = _pack([max(v, 0) for v in a], width) - _pack([max(-v, 0) for v in a], width)
    packed_b = _pack([max(v, 0) for v in b], width) - _pack([max(-v, 0) for v in b], width)
    product = int(mpz(packed_a) * mpz(packed_b))
    slots = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * slots, "little")
    return [v - half for v in _unpack(product + bias, width, count)]


def convolve_schoolbook(a, b, count):
    """Reference O(N^2) convolution; used to cross-check the packed path."""
    result = [0] * count
    for i, x in enumerate(a[:count]):
        if x == 0:
            continue
        for j, y in enumerate(b[: count - i]):
            result[i + j] += x * y
    return result
