"""
Unit tests for the command-line surface
"""

import io
import json
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path

import polars as pl

from repdensity.cli import (
    CSV_COLUMNS,
    OutputRecord,
    density_frame,
    main,
    parse_algebra,
    parse_group,
    parse_variant,
)
from repdensity.density_engine import DensityEngine, ExactDensity
from repdensity.exceptions import InvalidInputError, UnsupportedVariantError
from repdensity.root_systems import AlgebraId, Family, GroupId, VariantKind


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestLabels(unittest.TestCase):
    """Variant labels"""

    def test_algebras(self):
        self.assertEqual(parse_algebra("gl:4"), AlgebraId.gl(4))
        self.assertEqual(parse_algebra("sl:5"), AlgebraId.sl(5))
        self.assertEqual(parse_algebra("so:7"), AlgebraId(Family.SO_ODD, 3))
        self.assertEqual(parse_algebra("sp:6"), AlgebraId(Family.SP, 3))
        self.assertEqual(parse_algebra("so_even:8"), AlgebraId(Family.SO_EVEN, 4))
        self.assertEqual(parse_algebra(" GL:2 "), AlgebraId.gl(2))

    def test_groups(self):
        self.assertEqual(parse_group("pgl:4"), GroupId.pgl(4))
        self.assertEqual(parse_group("so:7"), GroupId.so(7))
        self.assertEqual(parse_group("sc:sp:4"), GroupId.simply_connected(AlgebraId.sp(4)))

    def test_variants(self):
        self.assertIs(parse_variant("gl:3").kind, VariantKind.ALGEBRA)
        self.assertEqual(parse_variant("group:pgl:3").group, GroupId.pgl(3))
        self.assertIs(parse_variant("sd:sl:6").kind, VariantKind.SELF_DUAL)
        self.assertIs(parse_variant("orth:sl:6").kind, VariantKind.ORTHOGONAL)
        self.assertEqual(parse_variant("sd:sl:6").algebra, AlgebraId.sl(6))

    def test_bad_labels(self):
        for label in ["gl", "gl:x", "e:8", "group:spin:7", "so_even:7", "group:pgl"]:
            with self.assertRaises(InvalidInputError, msg=label):
                parse_variant(label)

    def test_unsupported(self):
        with self.assertRaises(UnsupportedVariantError):
            parse_variant("sp:5")
        with self.assertRaises(UnsupportedVariantError):
            parse_variant("sd:gl:3")


class TestRender(unittest.TestCase):
    """Records and frames"""

    def setUp(self):
        engine = DensityEngine()
        self.records = [OutputRecord(engine.density(AlgebraId.gl(n), 2)) for n in (1, 2, 3)]

    def test_frame(self):
        frame = density_frame(self.records)
        self.assertIsInstance(frame, pl.DataFrame)
        self.assertEqual(frame["density"].to_list(), ["1", "1/2", "3/8"])
        self.assertEqual(frame["family"].to_list(), ["gl_1", "gl_2", "gl_3"])

    def test_json_round_trips_through_cache_records(self):
        record = self.records[2].to_dict()
        restored = ExactDensity.from_record(json.loads(json.dumps(record)))
        original = self.records[2].density
        self.assertEqual(restored.label, original.label)
        self.assertEqual((restored.m, restored.value), (original.m, original.value))
        periods = [p.period for p in original.per_prime_power]
        self.assertEqual([p.period for p in restored.per_prime_power], periods)
        self.assertTrue(restored.cached)
        self.assertEqual(record["decimal"], "0.375")

    def test_empty_frame(self):
        self.assertEqual(density_frame([]).height, 0)


class TestCommands(unittest.TestCase):
    """main() end to end"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_density(self):
        code, out, _ = run("density", "--algebra", "gl:3", "--m", "2")
        self.assertEqual(code, 0)
        self.assertIn("| gl_3 | 2 | 3/8 | 0.375 |", out)

    def test_density_closed_forms(self):
        _, out, _ = run("density", "--algebra", "gl:2", "--m", "7", "--format", "json")
        self.assertEqual(json.loads(out)[0]["density"], "6/7")
        _, out, _ = run("density", "--algebra", "gl:1", "--m", "5", "--format", "json")
        self.assertEqual(json.loads(out)[0]["density"], "1")

    def test_density_direct_matches_product(self):
        _, product, _ = run("density", "--algebra", "gl:2", "--m", "6", "--format", "csv")
        _, direct, _ = run(
            "density", "--algebra", "gl:2", "--m", "6", "--format", "csv", "--direct"
        )
        self.assertEqual(product, direct)

    def test_json_carries_provenance(self):
        _, out, _ = run("density", "--algebra", "gl:3", "--m", "6", "--format", "json")
        provenance = json.loads(out)[0]["provenance"]
        self.assertEqual(provenance["enumerations"], 2)
        self.assertEqual([step["q"] for step in provenance["steps"]], [2, 3])
        self.assertEqual(provenance["points"], 64 + 27)

    def test_density_variants(self):
        code, out, _ = run("density", "--algebra", "group:pgl:2", "--m", "2", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)[0]["density"], "1")
        code, _, _ = run("density", "--algebra", "orth:sl:3", "--m", "2", "3")
        self.assertEqual(code, 0)

    def test_csv_header(self):
        _, out, _ = run("table", "--nmax", "3", "--m", "2", "--format", "csv")
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertEqual(lines[3], "gl_3,3,2,3,8,0.375")

    def test_table_markdown(self):
        _, out, _ = run("table", "--nmax", "3", "--m", "2", "3")
        lines = out.splitlines()
        self.assertEqual(lines[0], "| m \\ n | 1 | 2 | 3 |")
        self.assertEqual(lines[2], "| 2 | 1 | 1/2 | 3/8 |")
        self.assertEqual(lines[3], "| 3 | 1 | 2/3 | 2/9 |")

    def test_table_empty_moduli(self):
        code, out, _ = run("table", "--nmax", "4", "--m")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["| m \\ n | 1 | 2 | 3 | 4 |", "|---|---|---|---|---|"])

    def test_table_is_deterministic_across_workers(self):
        _, single, _ = run("table", "--nmax", "3", "--m", "2", "6", "--format", "json")
        _, pooled, _ = run(
            "table", "--nmax", "3", "--m", "2", "6", "--format", "json", "--workers", "2"
        )

        def strip(text: str) -> list[dict]:
            timed = ("wall_time", "provenance")
            return [{k: v for k, v in r.items() if k not in timed} for r in json.loads(text)]

        self.assertEqual(strip(single), strip(pooled))

    def test_table_uses_cache(self):
        run("table", "--nmax", "2", "--m", "2", "--cache-dir", self.temp_dir)
        self.assertTrue((Path(self.temp_dir) / "densities.jsonl").exists())
        _, out, _ = run(
            "table", "--nmax", "2", "--m", "2", "--cache-dir", self.temp_dir, "--format", "json"
        )
        self.assertTrue(all(record["cached"] for record in json.loads(out)))
        self.assertTrue(all(record["provenance"] is None for record in json.loads(out)))

    def test_bounds(self):
        code, out, _ = run("bounds", "--algebra", "gl:4", "--m", "2", "--format", "json")
        self.assertEqual(code, 0)
        reports = json.loads(out)
        self.assertEqual(reports[0]["exact"], "3/32")
        self.assertTrue(all(report["satisfied"] for report in reports))
        # the exact report plus the per-prime-power and union checks
        self.assertGreater(len(reports), 1)

    def test_bounds_selfdual(self):
        code, out, _ = run(
            "bounds", "--algebra", "sd:sl:4", "--m", "2", "--no-exact", "--format", "json"
        )
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)[0]["upper"], "exp(-1/18)")

    def test_bounds_m_one(self):
        code, out, _ = run("bounds", "--algebra", "gl:3", "--m", "1", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)[0]["exact"], "0")

    def test_bounds_over_budget_reports_bounds_only(self):
        code, out, _ = run(
            "bounds", "--algebra", "gl:5", "--m", "2", "--budget-points", "10", "--format", "json"
        )
        self.assertEqual(code, 0)
        self.assertIsNone(json.loads(out)[0]["exact"])

    def test_verify(self):
        code, out, _ = run("verify", "fray", "product-rule", "--samples", "100", "-q")
        self.assertEqual(code, 0)
        self.assertIn("[fray] OK", out)
        self.assertIn("[product-rule] OK", out)

    def test_verify_counterexample(self):
        code, out, _ = run("verify", "counterexample", "--r", "1000", "--format", "json", "-q")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)[0]["passed"])

    def test_unknown_suite(self):
        code, _, err = run("verify", "nonsense", "-q")
        self.assertEqual(code, 2)
        self.assertIn("Unknown suite", err)

    def test_bad_label_exit_code(self):
        code, _, err = run("density", "--algebra", "e:8", "--m", "2")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("[error]"))

    def test_budget_exit_code(self):
        code, _, err = run("density", "--algebra", "gl:5", "--m", "2", "--budget-points", "10")
        self.assertEqual(code, 2)
        self.assertIn("budget", err)

    def test_config_file(self):
        config = Path(self.temp_dir) / "run.yaml"
        config.write_text("table:\n  nmax: 2\n  m: [3]\n  format: csv\n")
        code, out, _ = run("table", "--config", str(config), "-q")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip().splitlines()[-1], "gl_2,2,3,2,3,0.666667")

    def test_config_warnings_are_reported(self):
        schema = Path(__file__).resolve().parents[3] / "config" / "schema.yaml"
        config = Path(self.temp_dir) / "run.yaml"
        config.write_text(f"schema: {schema}\ncolour: blue\ntable:\n  nmax: 1\n  m: [2]\n")
        with self.assertLogs("repdensity.cli.main", level="WARNING") as logs:
            code, _, _ = run("table", "--config", str(config), "-q")
        self.assertEqual(code, 0)
        self.assertIn("run.yaml: [unknown_field] Unknown field 'colour' is ignored", logs.output[0])

    def test_missing_config(self):
        code, _, _ = run("table", "--config", str(Path(self.temp_dir) / "absent.yaml"))
        self.assertEqual(code, 2)

    def test_parse_errors_exit(self):
        with self.assertRaises(SystemExit), redirect_stderr(io.StringIO()):
            main(["density", "--algebra", "gl:2", "--m", "0"])

    def test_exact_values_are_fractions(self):
        _, out, _ = run("density", "--algebra", "gl:4", "--m", "3", "--format", "json")
        record = json.loads(out)[0]
        self.assertEqual(Fraction(record["numerator"], record["denominator"]), Fraction(8, 27))


if __name__ == "__main__":
    unittest.main()
