import unittest

from partitions.colored import (
    ColoredPartitionSpec,
    ak_coeff_mod,
    ak_oracle,
    ak_series,
    ak_series_mod,
    overpartition_oracle,
    partition_numbers,
)
from qseries.errors import SeriesError
from qseries.etaparser import parse_eta
from qseries.series import reduce_mod
from qseries.special import EtaQuotient, eval_eta


class ColoredPartitionSpecTestCase(unittest.TestCase):
    def test_quotient(self):
        self.assertEqual(str(ColoredPartitionSpec(5).quotient), "f2^4/f1^5")
        self.assertEqual(str(ColoredPartitionSpec(1).quotient), "1/f1")

    def test_reduced_quotient(self):
        self.assertEqual(ColoredPartitionSpec(5).reduced_quotient(3), EtaQuotient([(1, -2), (2, 1), (3, -1), (6, 1)]))
        self.assertEqual(str(ColoredPartitionSpec(5).reduced_quotient(3)), "f2*f6/(f1^2*f3)")
        # composite moduli get no reduction
        self.assertEqual(ColoredPartitionSpec(5).reduced_quotient(9), ColoredPartitionSpec(5).quotient)

    def test_validation(self):
        for bad in (0, -3, 2.5, True):
            with self.assertRaises(SeriesError):
                ColoredPartitionSpec(bad)

    def test_repr_eq_lt_hash(self):
        self.assertEqual(repr(ColoredPartitionSpec(5)), "<ColoredPartitionSpec a_5>")
        self.assertEqual(ColoredPartitionSpec(5), ColoredPartitionSpec(5))
        self.assertLess(ColoredPartitionSpec(2), ColoredPartitionSpec(5))
        self.assertEqual(len({ColoredPartitionSpec(5), ColoredPartitionSpec(5), ColoredPartitionSpec(8)}), 2)


class ColoredPartitionTestCase(unittest.TestCase):
    def test_five_colors_prefix(self):
        self.assertEqual(ak_series(5, 4).coeffs, (1, 5, 16, 45, 112))
        self.assertEqual(ak_oracle(5, 2).coeffs, (1, 5, 16))

    def test_overpartitions(self):
        self.assertEqual(ak_oracle(2, 5).coeffs, (1, 2, 4, 8, 14, 24))
        self.assertEqual(overpartition_oracle(8).coeffs, (1, 2, 4, 8, 14, 24, 40, 64, 100))
        self.assertEqual(ak_series(2, 8), overpartition_oracle(8))

    def test_partition_numbers(self):
        self.assertEqual(partition_numbers(10).coeffs, (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42))

    def test_oracle_agrees_with_eta_quotient(self):
        for k in list(range(1, 9)) + [11, 14, 17, 20, 23, 26, 29]:
            self.assertEqual(ak_oracle(k, 200), ak_series(k, 200), f"a_{k}")

    def test_mod_path_agrees_with_exact(self):
        for modulus in (3, 5, 7, 4, 9):
            for k in (1, 2, 5, 8, 12, 20, 26, 35):
                self.assertEqual(
                    ak_series_mod(k, modulus, 300), reduce_mod(ak_series(k, 300), modulus), f"a_{k} mod {modulus}"
                )

    def test_coeff_mod(self):
        self.assertEqual(ak_coeff_mod(5, 1, 3), 2)
        self.assertEqual(ak_coeff_mod(5, 2, 5), 1)
        self.assertEqual(ak_coeff_mod(5, 3, 5), 0)
        self.assertEqual(ak_coeff_mod(5, 4, 5), 2)
        with self.assertRaises(SeriesError):
            ak_coeff_mod(5, -1, 5)

    def test_coefficients_grow_with_colors(self):
        for k in range(1, 10):
            smaller = ak_series(k, 60)
            larger = ak_series(k + 1, 60)
            self.assertTrue(all(a <= b for a, b in zip(smaller.coeffs, larger.coeffs)), f"a_{k} <= a_{k + 1}")

    def test_coefficients_never_decrease(self):
        for k in range(1, 10):
            coeffs = ak_series(k, 200).coeffs
            self.assertTrue(all(coeffs[n] >= coeffs[n - 1] for n in range(2, 201)), f"a_{k}")

    def test_frobenius_samples(self):
        for p, a, b in ((3, 1, 1), (3, 2, 3), (5, 1, 1), (5, 2, 2), (7, 1, 1)):
            left = eval_eta(parse_eta(f"f{a}^{b * p}"), 500, p)
            right = eval_eta(parse_eta(f"f{a * p}^{b}"), 500, p)
            self.assertEqual(left, right, f"f{a}^{b * p} mod {p}")


if __name__ == "__main__":
    unittest.main()
