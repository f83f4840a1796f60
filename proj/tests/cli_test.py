# Copyright 2026 The sxlab Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""End-to-end tests of the sxlab command-line tool.

Usage: cli_test.py SXLAB_BINARY SCHEMA_DIR
"""

import itertools
import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
import referencing

BINARY = None
SCHEMAS = None


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("SXLAB_FORMAT", None)
    if env:
        e.update(env)
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def registry():
    resources = []
    for path in pathlib.Path(SCHEMAS).glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], referencing.Resource.from_contents(schema)))
    return referencing.Registry().with_resources(resources)


def validate(doc, name):
    schema = json.loads((pathlib.Path(SCHEMAS) / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator(schema, registry=registry()).validate(doc)


def nash_paths(n, T=2, R=1, P=0, S=-2):
    """Pure Nash equilibria of the n-round game by brute force."""
    stage = {("C", "C"): (R, R), ("C", "D"): (S, T), ("D", "C"): (T, S), ("D", "D"): (P, P)}
    histories = [()]
    for k in range(1, n):
        histories += list(itertools.product(list(stage), repeat=k))
    strategies = [dict(zip(histories, moves)) for moves in itertools.product("CD", repeat=len(histories))]

    def play(s1, s2):
        h, u = (), [0, 0]
        for _ in range(n):
            j = (s1[h], s2[h])
            u[0] += stage[j][0]
            u[1] += stage[j][1]
            h += (j,)
        return h, u

    table = {(i, j): play(a, b) for i, a in enumerate(strategies) for j, b in enumerate(strategies)}
    out = []
    for (i, j), (h, u) in table.items():
        if all(table[(k, j)][1][0] <= u[0] for k in range(len(strategies))) and all(
            table[(i, k)][1][1] <= u[1] for k in range(len(strategies))
        ):
            out.append(["".join(x) for x in h])
    return out


class Subcommands(unittest.TestCase):
    def test_fitch_xor_ends_in_not_s(self):
        code, out, _ = run("fitch", "--days", "2", "--xor")
        self.assertEqual(code, 0)
        last = out.strip().splitlines()[-1]
        self.assertRegex(last, r"^\d+\. ~S \[")

    def test_surprise_csv(self):
        code, out, _ = run("surprise", "--days", "5", "--csv")
        self.assertEqual(code, 0)
        rows = out.strip().splitlines()
        self.assertEqual(rows[0], "day,p,q,cumulative")
        p = [float(r.split(",")[1]) for r in rows[1:]]
        for got, want in zip(p, [0.1620, 0.1654, 0.1713, 0.1844, 0.3169]):
            self.assertLess(abs(got - want), 1e-4)
        self.assertEqual(len(p), 5)
        for r in rows[1:]:
            for cell in r.split(",")[1:]:
                self.assertRegex(cell, r"^\d\.\d{6}$")

    def test_surprise_oracle_columns(self):
        code, out, _ = run("surprise", "--days", "4", "--oracle", "--csv")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "day,p,q,cumulative,oracle_p,oracle_q")

    def test_json_outputs_match_schemas(self):
        cases = [
            (["fitch", "--days", "1"], "fitch"),
            (["fitch", "--days", "2", "--connective", "xor"], "fitch"),
            (["epistemic", "--days", "3"], "epistemic"),
            (["epistemic", "--days", "5", "--agents", "students"], "epistemic"),
            (["epistemic", "--days", "1"], "epistemic"),
            (["knower"], "knower"),
            (["ipd", "-n", "2"], "ipd"),
            (["ipd", "-n", "6", "--payoffs", "5,3,1,0"], "ipd"),
            (["surprise", "--days", "6", "--oracle"], "surprise"),
        ]
        for args, schema in cases:
            with self.subTest(args=args):
                code, out, err = run(*args, "--json")
                self.assertEqual(code, 0, err)
                doc = json.loads(out)
                validate(doc, schema)
                self.assertEqual(doc["format_version"], 1)

    def test_ipd_equilibria_match_brute_force(self):
        for n in (1, 2):
            code, out, _ = run("ipd", "-n", str(n), "--json")
            self.assertEqual(code, 0)
            doc = json.loads(out)
            want = nash_paths(n)
            self.assertEqual(len(doc["equilibria"]), len(want))
            self.assertTrue(all(e["path"] == ["DD"] * n for e in doc["equilibria"]))
            self.assertTrue(all(p == ["DD"] * n for p in want))
            self.assertTrue(doc["spe"]["all_defect"])

    def test_env_sets_default_format(self):
        code, out, _ = run("knower", env={"SXLAB_FORMAT": "json"})
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["kind"], "knower")

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as d:
            target = pathlib.Path(d) / "r.json"
            code, out, _ = run("fitch", "--json", "-o", str(target))
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            self.assertEqual(json.loads(target.read_text())["kind"], "fitch")


class Checking(unittest.TestCase):
    def test_emitted_proofs_recheck(self):
        with tempfile.TemporaryDirectory() as d:
            for args in (["fitch", "--days", "3", "--json"],
                         ["fitch", "--days", "2", "--xor", "--full-codes"],
                         ["epistemic", "--days", "4", "--full-codes"],
                         ["epistemic", "--days", "3", "--lemma", "--json"],
                         ["knower", "--json"]):
                target = pathlib.Path(d) / "doc"
                self.assertEqual(run(*args, "-o", str(target))[0], 0)
                code, out, err = run("check", str(target))
                self.assertEqual(code, 0, err)
                self.assertIn("accepted", out)

    def test_tampered_refutation_is_rejected(self):
        code, out, _ = run("fitch", "--days", "2", "--json")
        doc = json.loads(out)
        step = doc["transcript"]["proof"][7]
        self.assertEqual(step["formula"], "S -> Q1")
        step["formula"] = "S -> Q2"
        with tempfile.TemporaryDirectory() as d:
            target = pathlib.Path(d) / "refutation.json"
            target.write_text(json.dumps(doc))
            code, out, err = run("check", str(target), "--rules", "fitch")
        self.assertEqual(code, 4)
        self.assertIn("step 8", out + err)

    def test_wrong_rule_set(self):
        with tempfile.TemporaryDirectory() as d:
            target = pathlib.Path(d) / "k.json"
            run("knower", "--json", "-o", str(target))
            self.assertEqual(run("check", str(target), "--rules", "fitch")[0], 4)
            e = pathlib.Path(d) / "e.txt"
            run("epistemic", "--days", "2", "--full-codes", "-o", str(e))
            self.assertEqual(run("check", str(e), "--days", "3")[0], 4)

    def test_abbreviated_text_is_not_rechecked(self):
        with tempfile.TemporaryDirectory() as d:
            target = pathlib.Path(d) / "f.txt"
            run("fitch", "-o", str(target))
            self.assertEqual(run("check", str(target))[0], 4)

    def test_goldens_are_deterministic(self):
        with tempfile.TemporaryDirectory() as d:
            a, b = pathlib.Path(d) / "a", pathlib.Path(d) / "b"
            self.assertEqual(run("goldens", str(a))[0], 0)
            self.assertEqual(run("goldens", str(b))[0], 0)
            names = sorted(p.name for p in a.iterdir())
            self.assertEqual(names, sorted(p.name for p in b.iterdir()))
            for n in names:
                self.assertEqual((a / n).read_bytes(), (b / n).read_bytes(), n)
            for n in names:
                if n.startswith(("fitch", "epistemic", "knower")):
                    self.assertEqual(run("check", str(a / n))[0], 0, n)
            for n in names:
                if n.endswith(".json"):
                    validate(json.loads((a / n).read_text()), n.split("_")[0].removesuffix(".json"))


class ExitCodes(unittest.TestCase):
    def test_usage(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("fitch", "--bogus")[0], 2)
        self.assertEqual(run("fitch", "--json", "--csv")[0], 2)
        self.assertEqual(run("fitch", "--csv")[0], 2)
        self.assertEqual(run("fitch", "--format", "yaml")[0], 2)
        self.assertEqual(run("fitch", "--xor", "--connective", "or")[0], 2)
        self.assertEqual(run("check")[0], 2)
        self.assertEqual(run("fitch", "surprise")[0], 2)

    def test_domain(self):
        self.assertEqual(run("fitch", "--days", "0")[0], 3)
        self.assertEqual(run("fitch", "--days", "3", "--xor")[0], 3)
        self.assertEqual(run("ipd", "-n", "11")[0], 3)
        code, _, err = run("ipd", "--payoffs", "1,2,3,4")
        self.assertEqual(code, 3)
        self.assertIn("not a prisoner's dilemma", err)
        self.assertEqual(run("epistemic", "--days", "2", "--agents", "x")[0], 3)
        self.assertEqual(run("epistemic", "--days", "1", "--lemma")[0], 3)
        self.assertEqual(run("surprise", "--days", "9", "--oracle")[0], 3)

    def test_check_failures(self):
        with tempfile.TemporaryDirectory() as d:
            junk = pathlib.Path(d) / "junk.txt"
            junk.write_text("hello\n")
            self.assertEqual(run("check", str(junk))[0], 4)
            self.assertEqual(run("check", str(pathlib.Path(d) / "missing"))[0], 1)

    def test_help_and_version(self):
        self.assertEqual(run("--help")[0], 0)
        code, out, _ = run("--version")
        self.assertEqual(code, 0)
        self.assertIn("1.0.0", out)


if __name__ == "__main__":
    BINARY, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
