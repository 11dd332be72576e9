"""End-to-end checks of the gordian command-line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = Path(sys.argv.pop(1)).resolve()
SCHEMA = json.loads((Path(__file__).resolve().parent.parent / "docs" / "verdict.schema.json").read_text())

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.cache = Path(self.tmp.name) / "cache"
        self.env = dict(os.environ, GORDIAN_CACHE_DIR=str(self.cache))

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *args, code=None):
        proc = subprocess.run([str(BINARY), *args], capture_output=True, text=True, env=self.env, timeout=120)
        if code is not None:
            self.assertEqual(proc.returncode, code, proc.stdout + proc.stderr)
        return proc

    def write(self, name, text):
        path = Path(self.tmp.name) / name
        path.write_text(text)
        return path

    def validate(self, doc):
        jsonschema.validate(doc, SCHEMA)

    def test_homfly(self):
        self.assertEqual(self.run_cli("homfly", "--pd", TREFOIL, code=0).stdout, "2v^2 - v^4 + v^2 z^2\n")
        self.assertEqual(self.run_cli("homfly", "--pretzel", "1,1,1", code=0).stdout, "2v^2 - v^4 + v^2 z^2\n")
        self.assertEqual(self.run_cli("homfly", "--braid", "1,1,1", code=0).stdout, "2v^2 - v^4 + v^2 z^2\n")
        self.assertEqual(self.run_cli("homfly", "--knot", "table:4_1", code=0).stdout, "v^-2 - 1 + v^2 - z^2\n")
        self.run_cli("homfly", "--pd", "X[1,2,3]", code=2)
        self.run_cli("homfly", "--pd", "X[1,2,3,4]", code=2)
        self.run_cli("homfly", "--pretzel", "2,1,1", code=2)
        self.run_cli("homfly", "--knot", "table:nope", code=2)
        self.run_cli("--max-crossings", "5", "homfly", "--pretzel", "3,3,1", code=3)
        self.assertTrue((self.cache / "homfly.tsv").exists())

    def test_cosmetic(self):
        self.run_cli("obstruct", "cosmetic", "--pretzel", "7,5,-3", "--genus", "1", code=10)
        self.run_cli("obstruct", "cosmetic", "--knot", "table:3_1", code=10)
        self.run_cli("obstruct", "cosmetic", "--knot", "table:5_1", code=11)
        self.run_cli("obstruct", "cosmetic", "--pretzel", "7,5,-3", code=11)
        self.run_cli("obstruct", "cosmetic", "--pd", "O", "--genus", "1", code=0)
        out = self.run_cli("obstruct", "cosmetic", "--pretzel", "7,5,-3", "--genus", "1", "--json", code=10).stdout
        doc = json.loads(out)
        self.validate(doc)
        self.assertEqual(doc["verdict"], "EXCLUDED")

    def test_gordian(self):
        proc = self.run_cli("obstruct", "gordian", "--knot-a", "table:3_1", "--knot-b", "table:4_1",
                            "--sweep-mirrors", code=10)
        self.assertTrue(proc.stdout.startswith("EXCLUDED"))
        self.assertEqual(proc.stdout.count("FAIL("), 4)
        doc = json.loads(self.run_cli("obstruct", "gordian", "--knot-a", "pretzel:3,1,1", "--knot-b",
                                      "pretzel:1,1,1", "--genus-a", "1", "--genus-b", "1", "--json", code=0).stdout)
        self.validate(doc)
        self.assertEqual(doc["witness"], "1")
        doc = json.loads(self.run_cli("obstruct", "gordian", "--knot-a", "table:3_1", "--knot-b", "table:unknot",
                                      "--json", code=11).stdout)
        self.validate(doc)
        self.run_cli("obstruct", "gordian", "--knot-a", "3_1", "--knot-b", "table:4_1", code=2)

    def test_annulus(self):
        doc = json.loads(self.run_cli("obstruct", "annulus", "--pd", "X[1,4,2,3] X[3,2,4,1]", "--json", code=0).stdout)
        self.validate(doc)
        self.run_cli("obstruct", "annulus", "--pd", TREFOIL, code=11)

    def test_exit_code_depends_only_on_status(self):
        runs = [
            ("obstruct", "cosmetic", "--knot", "table:3_1", "--json"),
            ("obstruct", "cosmetic", "--knot", "table:6_2", "--json"),
            ("obstruct", "cosmetic", "--pd", "O", "--genus", "1", "--json"),
            ("obstruct", "gordian", "--knot-a", "table:5_2", "--knot-b", "table:3_1", "--json"),
            ("obstruct", "gordian", "--knot-a", "table:6_1", "--knot-b", "table:4_1", "--sweep-mirrors", "--json"),
            ("obstruct", "annulus", "--braid", "1,1,1,1", "--json"),
        ]
        codes = {}
        for args in runs:
            proc = self.run_cli(*args)
            doc = json.loads(proc.stdout)
            self.validate(doc)
            codes.setdefault(doc["verdict"], set()).add(proc.returncode)
        self.assertEqual(codes.get("EXCLUDED", {10}), {10})
        self.assertEqual(codes.get("NOT_EXCLUDED", {0}), {0})
        self.assertEqual(codes.get("INAPPLICABLE", {11}), {11})

    def test_pretzel_scan(self):
        out = self.run_cli("obstruct", "pretzel-scan", "--bound", "99", code=0).stdout
        self.assertIn("0 counterexamples / 56 knots scanned", out)
        self.assertIn("P(7,5,-3)\t0\tEXCLUDED\tSQUARE\n", out)
        doc = json.loads(self.run_cli("obstruct", "pretzel-scan", "--bound", "9", "--json", code=0).stdout)
        self.assertEqual(doc["counterexamples"], 0)
        for row in doc["knots"]:
            self.validate(row["result"])
        self.assertNotEqual(self.run_cli("obstruct", "pretzel-scan", "--bound", "2").returncode, 0)

    def test_census(self):
        table = self.write("t.csv", "name,pd,genus\n"
                                    f'3_1,"{TREFOIL}",1\n'
                                    f'4_1,"{FIGURE_EIGHT}",1\n'
                                    "unknot,O,0\n")
        out = self.run_cli("census", str(table), code=0).stdout
        lines = out.splitlines()
        self.assertEqual([line.split("\t")[3] for line in lines[:3]], ["EXCLUDED", "EXCLUDED", "INAPPLICABLE"])
        self.assertIn("EXCLUDED=2", lines[-1])
        self.assertIn("INAPPLICABLE=1", lines[-1])

        broken = self.write("b.csv", "name,pd,genus\nbad,\"X[1,2,3]\",1\n" f'3_1,"{TREFOIL}",1\n')
        lines = self.run_cli("census", str(broken), code=0).stdout.splitlines()
        self.assertEqual(lines[0].split("\t")[3], "ERROR")
        self.assertEqual(lines[1].split("\t")[3], "EXCLUDED")

        empty = self.write("e.csv", "name,pd,genus\n")
        self.assertIn("rows=0", self.run_cli("census", str(empty), code=0).stdout)
        self.run_cli("census", str(Path(self.tmp.name) / "missing.csv"), code=2)

        doc = json.loads(self.run_cli("census", str(table), "--json", code=0).stdout)
        for row in doc["rows"]:
            if row["result"] is not None:
                self.validate(row["result"])

    def test_cache_reports_are_byte_identical(self):
        table = self.write("c.csv", "name,pd,genus\n"
                                    f'3_1,"{TREFOIL}",1\n'
                                    f'4_1,"{FIGURE_EIGHT}",1\n'
                                    '5_2,"X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",1\n'
                                    'bad,"X[1,2,3]",1\n')
        cold = self.run_cli("census", str(table), code=0).stdout
        cache_file = self.cache / "homfly.tsv"
        entries = cache_file.read_bytes()
        self.assertTrue(entries)
        warm = self.run_cli("census", str(table), code=0).stdout
        uncached = self.run_cli("--no-cache", "census", str(table), code=0).stdout
        parallel = self.run_cli("--workers", "4", "census", str(table), code=0).stdout
        self.assertEqual(cold, warm)
        self.assertEqual(cold, uncached)
        self.assertEqual(cold, parallel)
        self.assertEqual(cache_file.read_bytes(), entries)

        # an interrupted append does not break later runs
        with cache_file.open("ab") as f:
            f.write(b"X[1,4,2")
        proc = self.run_cli("census", str(table), code=0)
        self.assertEqual(proc.stdout, cold)
        self.assertIn("incomplete record", proc.stderr)
        self.assertEqual(self.run_cli("census", str(table), code=0).stdout, cold)


if __name__ == "__main__":
    unittest.main()
