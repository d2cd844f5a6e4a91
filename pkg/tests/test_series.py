import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from qseries.errors import NonUnitError, SeriesError, TruncationError
from qseries.kronecker import convolve_schoolbook, convolve_signed, convolve_unsigned
from qseries.series import (
    ModSeries,
    Series,
    add,
    coeff,
    dilate,
    eq_upto,
    invert,
    lift,
    make,
    monomial,
    mul,
    mul_schoolbook,
    one,
    power,
    reduce_mod,
    scale,
    shift,
    subtract,
    truncate,
    zero,
)


@st.composite
def series_of_one_order(draw, count=3, bound=1000, max_order=30, modulus=None, unit=False):
    order = draw(st.integers(min_value=0, max_value=max_order))
    values = st.lists(st.integers(-bound, bound), min_size=order + 1, max_size=order + 1)
    out = []
    for _ in range(count):
        coeffs = draw(values)
        if unit:
            coeffs[0] = draw(st.sampled_from([1, -1]))
        out.append(Series(coeffs, order) if modulus is None else ModSeries(coeffs, order, modulus))
    return out


class SeriesExamplesTestCase(unittest.TestCase):
    def test_make_pads_to_order(self):
        self.assertEqual(make([1, 2, 3], 4).coeffs, (1, 2, 3, 0, 0))
        with self.assertRaises(TruncationError):
            make([1, 2, 3], 1)

    def test_repr(self):
        self.assertEqual(repr(make([1, 0, -2], 2)), "<Series O(q^3) 1q^0 + -2q^2>")
        self.assertEqual(repr(ModSeries([4, 1], 1, 3)), "<ModSeries mod 3 O(q^2) 1q^0 + 1q^1>")
        self.assertEqual(repr(zero(3)), "<Series O(q^4) 0>")

    def test_mul_and_add(self):
        s = make([1, 1], 3)
        self.assertEqual(mul(s, s).coeffs, (1, 2, 1, 0))
        self.assertEqual((s + s).coeffs, (2, 2, 0, 0))
        self.assertEqual((s - s).coeffs, (0, 0, 0, 0))
        self.assertEqual((3 * s).coeffs, (3, 3, 0, 0))
        self.assertEqual((-s).coeffs, (-1, -1, 0, 0))

    def test_binary_ops_truncate_to_smaller_order(self):
        self.assertEqual(add(make([1], 3), make([1], 5)).order, 3)
        self.assertEqual(mul(make([1, 1], 5), make([1, 1], 2)).coeffs, (1, 2, 1))

    def test_invert_geometric(self):
        self.assertEqual(invert(make([1, -1], 5)).coeffs, (1, 1, 1, 1, 1, 1))
        self.assertEqual(invert(make([-1], 2)).coeffs, (-1, 0, 0))

    def test_invert_non_unit(self):
        with self.assertRaises(NonUnitError) as caught:
            invert(make([2, 1], 3))
        self.assertEqual(caught.exception.constant, 2)
        self.assertIn("2", str(caught.exception))
        with self.assertRaises(NonUnitError):
            invert(ModSeries([3, 1, 0], 2, 3))

    def test_invert_mod(self):
        inverse = invert(ModSeries([2], 0, 5))
        self.assertEqual(inverse.coeffs, (3,))
        s = ModSeries([2, 1, 4, 0, 0, 0, 0], 6, 7)
        self.assertEqual(mul(s, invert(s)), one(6, 7))

    def test_power(self):
        s = make([1, -1], 4)
        self.assertEqual(power(s, 0), one(4))
        self.assertEqual(power(s, 2).coeffs, (1, -2, 1, 0, 0))
        self.assertEqual(power(s, -1), invert(s))
        self.assertEqual(s ** 3, mul(s, mul(s, s)))

    def test_dilate(self):
        s = make([1, 1, 1, 1], 3)
        self.assertEqual(dilate(s, 2).coeffs, (1, 0, 1, 0))
        self.assertEqual(dilate(s, 2, 7).coeffs, (1, 0, 1, 0, 1, 0, 1, 0))
        with self.assertRaises(TruncationError):
            dilate(s, 2, 8)
        with self.assertRaises(SeriesError):
            dilate(s, 0)

    def test_shift_and_truncate(self):
        s = make([1, 2, 3], 2)
        self.assertEqual(shift(s, 1).coeffs, (0, 1, 2))
        self.assertEqual(shift(s, 5).coeffs, (0, 0, 0))
        self.assertEqual(truncate(s, 1).coeffs, (1, 2))
        with self.assertRaises(TruncationError):
            truncate(s, 3)

    def test_monomial(self):
        self.assertEqual(monomial(5, 2, 3).coeffs, (0, 0, 5, 0))
        self.assertEqual(monomial(5, 2, 3, 3).coeffs, (0, 0, 2, 0))
        self.assertTrue(monomial(1, 4, 3).is_zero())

    def test_reading_past_the_order(self):
        s = make([1, 2], 1)
        self.assertEqual(coeff(s, 1), 2)
        self.assertEqual(s[0], 1)
        with self.assertRaises(TruncationError):
            coeff(s, 2)
        with self.assertRaises(TruncationError):
            eq_upto(s, s, 2)
        self.assertTrue(eq_upto(make([1, 2, 3], 2), make([1, 2, 4], 2), 1))
        self.assertFalse(eq_upto(make([1, 2, 3], 2), make([1, 2, 4], 2), 2))

    def test_negative_order(self):
        with self.assertRaises(TruncationError):
            zero(-1)

    def test_mixing_rings(self):
        with self.assertRaises(TypeError):
            add(make([1], 2), ModSeries([1, 0, 0], 2, 3))
        with self.assertRaises(SeriesError):
            mul(ModSeries([1, 0, 0], 2, 3), ModSeries([1, 0, 0], 2, 5))

    def test_reduce_and_lift(self):
        reduced = reduce_mod(make([-1, 4, 3], 2), 3)
        self.assertEqual(reduced.coeffs, (2, 1, 0))
        self.assertEqual(reduced.modulus, 3)
        self.assertEqual(lift(reduced), make([2, 1], 2))
        self.assertEqual(reduce_mod(ModSeries([5], 0, 6), 3).coeffs, (2,))
        with self.assertRaises(SeriesError):
            reduce_mod(ModSeries([5], 0, 6), 4)

    def test_equality_and_hash(self):
        self.assertEqual(make([1, 2], 2), make([1, 2, 0], 2))
        self.assertNotEqual(make([1, 2], 2), make([1, 2], 3))
        self.assertNotEqual(make([1], 0), ModSeries([1], 0, 3))
        self.assertEqual(len({make([1], 1), make([1, 0], 1)}), 1)


class SeriesPropertyTestCase(unittest.TestCase):
    @given(series_of_one_order())
    def test_ring_axioms(self, triple):
        a, b, c = triple
        self.assertEqual(add(a, b), add(b, a))
        self.assertEqual(mul(a, b), mul(b, a))
        self.assertEqual(mul(mul(a, b), c), mul(a, mul(b, c)))
        self.assertEqual(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        self.assertEqual(mul(a, one(a.order)), a)
        self.assertEqual(subtract(add(a, b), b), a)

    @given(series_of_one_order(count=3, modulus=7))
    def test_ring_axioms_mod(self, triple):
        a, b, c = triple
        self.assertEqual(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        self.assertEqual(mul(mul(a, b), c), mul(a, mul(b, c)))

    @given(series_of_one_order(count=1, unit=True, max_order=40))
    def test_invert_round_trip(self, single):
        (s,) = single
        self.assertEqual(mul(s, invert(s)), one(s.order))

    @given(series_of_one_order(count=2), st.integers(min_value=1, max_value=5))
    def test_dilate_is_a_homomorphism(self, pair, k):
        s, t = pair
        self.assertEqual(dilate(mul(s, t), k), mul(dilate(s, k), dilate(t, k)))
        self.assertEqual(dilate(add(s, t), k), add(dilate(s, k), dilate(t, k)))

    @given(series_of_one_order(count=2), st.sampled_from([2, 3, 5, 7, 9, 11]))
    def test_reduce_mod_commutes(self, pair, m):
        s, t = pair
        self.assertEqual(reduce_mod(add(s, t), m), add(reduce_mod(s, m), reduce_mod(t, m)))
        self.assertEqual(reduce_mod(mul(s, t), m), mul(reduce_mod(s, m), reduce_mod(t, m)))

    @settings(max_examples=50)
    @given(
        series_of_one_order(count=1, bound=5, max_order=15, unit=True),
        st.integers(min_value=-3, max_value=4),
        st.integers(min_value=-3, max_value=4),
    )
    def test_power_additivity(self, single, a, b):
        (s,) = single
        self.assertEqual(power(s, a + b), mul(power(s, a), power(s, b)))

    @given(series_of_one_order(count=2, bound=2 ** 80, max_order=40))
    def test_kronecker_matches_schoolbook(self, pair):
        s, t = pair
        self.assertEqual(mul(s, t), mul_schoolbook(s, t))

    @given(series_of_one_order(count=2, max_order=40, modulus=1009))
    def test_kronecker_matches_schoolbook_mod(self, pair):
        s, t = pair
        self.assertEqual(mul(s, t), mul_schoolbook(s, t))


class ConvolutionTestCase(unittest.TestCase):
    def test_signed(self):
        self.assertEqual(convolve_signed([1, -1], [1, -1], 3), [1, -2, 1])
        self.assertEqual(convolve_signed([-5, 0, 7], [3, -2, 0], 3), [-15, 10, 21])

    def test_unsigned(self):
        self.assertEqual(convolve_unsigned([1, 2, 3], [4, 5, 6], 3), [4, 13, 28])
        self.assertEqual(convolve_unsigned([0, 0], [1, 1], 2), [0, 0])

    def test_schoolbook(self):
        self.assertEqual(convolve_schoolbook([1, 2, 3], [4, 5, 6], 3), [4, 13, 28])

    def test_large_coefficients(self):
        a = [10 ** 40, -(10 ** 39), 7]
        b = [-(10 ** 41), 3, 10 ** 20]
        self.assertEqual(convolve_signed(a, b, 3), convolve_schoolbook(a, b, 3))


if __name__ == "__main__":
    unittest.main()
