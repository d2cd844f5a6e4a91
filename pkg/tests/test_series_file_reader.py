import os
import tempfile
import unittest

from datafilereaders.series_file_reader import SeriesFileReader, format_series, parse_series
from qseries.errors import SeriesError
from qseries.series import ModSeries, make


class SeriesFileReaderTestCase(unittest.TestCase):
    def test_text_missing_terms_are_zero(self):
        s = parse_series("0\t1\n3\t-2\n")
        self.assertEqual(s, make([1, 0, 0, -2], 3))

    def test_text_order_comment(self):
        s = parse_series("# order 5\n0\t1\n2\t7\n")
        self.assertEqual(s.order, 5)
        self.assertEqual(s.coeffs, (1, 0, 7, 0, 0, 0))
        with self.assertRaises(SeriesError):
            parse_series("# order 1\n0\t1\n2\t7\n")

    def test_text_errors(self):
        with self.assertRaises(SeriesError):
            parse_series("0\t1\n0\t2\n")
        with self.assertRaises(SeriesError):
            parse_series("0\tone\n")
        with self.assertRaises(SeriesError):
            parse_series("0 1 2\n")

    def test_json(self):
        self.assertEqual(parse_series('{"order": 2, "coeffs": [1, -1, 0]}'), make([1, -1], 2))
        reduced = parse_series('{"order": 1, "coeffs": [1, 2], "modulus": 3}')
        self.assertEqual(reduced, ModSeries([1, 2], 1, 3))
        with self.assertRaises(SeriesError):
            parse_series('{"order": 3, "coeffs": [1]}')
        with self.assertRaises(SeriesError):
            parse_series('{"coeffs": [1]}')

    def test_csv(self):
        s = parse_series("# order 4\nn,coefficient\n0,1\n3,5\n")
        self.assertEqual(s, make([1, 0, 0, 5], 4))
        with self.assertRaises(SeriesError):
            parse_series("n,coefficient\n0,x\n", "csv")

    def test_written_files_read_back(self):
        s = make([1, -2, 0, 0, 2], 6)
        with tempfile.TemporaryDirectory() as tmp:
            for fmt, extension in (("text", "txt"), ("json", "json"), ("csv", "csv"), ("csv", "dat")):
                path = os.path.join(tmp, f"series.{extension}")
                with open(path, "w") as series_file:
                    series_file.write(format_series(s, fmt))
                reader = SeriesFileReader(path)
                self.assertEqual(reader.read_series_file(), s, path)
                self.assertEqual(reader.series, s)

    def test_format_text(self):
        self.assertEqual(format_series(make([3, 0, 1], 2)), "# order 2\n0\t3\n1\t0\n2\t1\n")


if __name__ == "__main__":
    unittest.main()
