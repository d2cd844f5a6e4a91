import json
import os
import tempfile
import unittest

from click.testing import CliRunner

from config import ORDER_ENV
from main import CliConfig, cli
from qseries.errors import ConfigurationError


def coefficients(output):
    rows = [line.split("\t") for line in output.splitlines() if line and not line.startswith("#")]
    return [int(c) for _, c in rows]


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def test_expand(self):
        result = self.runner.invoke(cli, ["expand", "f2^4/f1^5", "--order", "3"])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith("# order 3\n"))
        self.assertEqual(coefficients(result.output), [1, 5, 16, 45])

    def test_expand_pentagonal(self):
        result = self.runner.invoke(cli, ["expand", "f1", "-N", "7"])
        self.assertEqual(coefficients(result.output), [1, -1, -1, 0, 0, 1, 0, 1])

    def test_expand_mod(self):
        result = self.runner.invoke(cli, ["expand", "f1^2/f2", "--order", "4", "--mod", "3"])
        self.assertEqual(coefficients(result.output), [1, 1, 0, 0, 2])

    def test_expand_json(self):
        result = self.runner.invoke(cli, ["expand", "f1^2/f2", "--order", "4", "--format", "json"])
        self.assertEqual(json.loads(result.output), {"order": 4, "coeffs": [1, -2, 0, 0, 2]})

    def test_parse_error_shows_caret(self):
        result = self.runner.invoke(cli, ["expand", "f2^/f1", "--order", "3"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("f2^/f1\n   ^", result.output)

    def test_order_from_environment(self):
        result = self.runner.invoke(cli, ["expand", "f1"], env={ORDER_ENV: "7"})
        self.assertEqual(len(coefficients(result.output)), 8)
        result = self.runner.invoke(cli, ["expand", "f1", "--order", "2"], env={ORDER_ENV: "7"})
        self.assertEqual(len(coefficients(result.output)), 3)
        result = self.runner.invoke(cli, ["expand", "f1"], env={ORDER_ENV: "lots"})
        self.assertEqual(result.exit_code, 2)

    def test_ak(self):
        result = self.runner.invoke(cli, ["ak", "2", "--order", "5"])
        self.assertEqual(coefficients(result.output), [1, 2, 4, 8, 14, 24])
        result = self.runner.invoke(cli, ["ak", "5", "--order", "3", "--mod", "5"])
        self.assertEqual(coefficients(result.output), [1, 0, 1, 0])
        result = self.runner.invoke(cli, ["ak", "0", "--order", "3"])
        self.assertEqual(result.exit_code, 2)

    def test_check_pass(self):
        result = self.runner.invoke(cli, ["check", "ak=5 A=5 B=3 mod=5", "--order", "500"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("PASS", result.output)
        self.assertIn("1/1 passed", result.output)

    def test_check_fail(self):
        result = self.runner.invoke(cli, ["check", "ak=5 A=5 B=2 mod=5", "--order", "500", "--format", "json"])
        self.assertEqual(result.exit_code, 1)
        (report,) = json.loads(result.output)
        self.assertEqual(report["status"], "fail")
        self.assertEqual(report["counterexample"], {"n": 0, "index": 2, "residue": 1})

    def test_check_internal(self):
        result = self.runner.invoke(cli, ["check", "internal ak=5 lhs=27,10 rhs=3,1 mod=3", "--order", "500"])
        self.assertEqual(result.exit_code, 0)

    def test_check_bad_spec(self):
        result = self.runner.invoke(cli, ["check", "ak=5 A=5", "--order", "500"])
        self.assertEqual(result.exit_code, 2)

    def test_suite_json(self):
        result = self.runner.invoke(cli, ["suite", "lemmas", "--order", "300", "--format", "json"])
        self.assertEqual(result.exit_code, 0)
        reports = json.loads(result.output)
        self.assertEqual(len(reports), 5)
        self.assertTrue(all(r["status"] == "pass" for r in reports))
        self.assertEqual(set(reports[0]), {"id", "status", "order", "range_checked", "counterexample", "elapsed_ms"})

    def test_suite_table_and_csv(self):
        result = self.runner.invoke(cli, ["suite", "ramanujan", "--order", "300"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("RAM_5", result.output)
        self.assertIn("3/3 passed", result.output)
        result = self.runner.invoke(cli, ["suite", "ramanujan", "--order", "300", "--format", "csv"])
        self.assertTrue(result.output.startswith("id,status,order,range_checked"))
        self.assertEqual(len(result.output.splitlines()), 4)

    def test_suite_params(self):
        result = self.runner.invoke(
            cli, ["suite", "thm_4_1", "--order", "300", "--params", "t=0..1", "--format", "json"]
        )
        self.assertEqual([r["id"] for r in json.loads(result.output)], ["THM_4_1_t0", "THM_4_1_t1"])
        result = self.runner.invoke(cli, ["suite", "thm_4_1", "--params", "t=0..12"])
        self.assertEqual(result.exit_code, 2)

    def test_unknown_suite(self):
        result = self.runner.invoke(cli, ["suite", "nothing", "--order", "100"])
        self.assertEqual(result.exit_code, 2)

    def test_dissect(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "series.txt")
            with open(path, "w") as series_file:
                series_file.write("# order 9\n" + "".join(f"{n}\t{n}\n" for n in range(1, 10)))
            result = self.runner.invoke(cli, ["dissect", "--in", path, "-m", "3", "-r", "1"])
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(coefficients(result.output), [1, 4, 7])
            result = self.runner.invoke(cli, ["dissect", "--in", path, "-m", "3", "-r", "1", "--component"])
            self.assertEqual(coefficients(result.output), [0, 1, 0, 0, 4, 0, 0, 7, 0, 0])
            out = os.path.join(tmp, "out.json")
            self.runner.invoke(cli, ["dissect", "--in", path, "-m", "3", "-r", "2", "--format", "json", "--out", out])
            with open(out) as out_file:
                self.assertEqual(json.load(out_file), {"order": 2, "coeffs": [2, 5, 8]})
            result = self.runner.invoke(cli, ["dissect", "--in", path, "-m", "3", "-r", "3"])
            self.assertEqual(result.exit_code, 2)

    def test_list(self):
        result = self.runner.invoke(cli, ["list", "--order", "300"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("THM_1_2\tthm_1_2\ta_5(5n+3) == 0 (mod 5)", result.output)


class CliConfigTestCase(unittest.TestCase):
    def test_validation(self):
        config = CliConfig(100, 3, "json")
        self.assertEqual((config.order, config.modulus, config.fmt), (100, 3, "json"))
        self.assertEqual(repr(config), "<CliConfig order 100, mod 3, json>")
        with self.assertRaises(ConfigurationError):
            CliConfig(-1)
        with self.assertRaises(ConfigurationError):
            CliConfig(10, 1)
        with self.assertRaises(ConfigurationError):
            CliConfig(10, None, "xml")


if __name__ == "__main__":
    unittest.main()
