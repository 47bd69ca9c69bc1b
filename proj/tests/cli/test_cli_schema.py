"""Runs the CLI binary and validates its JSON output against docs/schema.

usage: test_cli_schema.py <charsum binary> <schema dir>
"""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

resources = []
by_name = {}
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
    by_name[path.name.removesuffix(".schema.json")] = doc
registry = Registry().with_resources(resources)

failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("CHARSUM_THREADS", None)
    e.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate(schema, out, what):
    try:
        doc = json.loads(out)
        jsonschema.Draft202012Validator(by_name[schema], registry=registry).validate(doc)
        check(True, what)
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        check(False, f"{what}: {err}")
        return None


for schema in by_name.values():
    jsonschema.Draft202012Validator.check_schema(schema)

r = run("field-info", "--p", "3", "--r", "4")
check(r.returncode == 0, "field-info exit 0")
doc = validate("field-info", r.stdout, "field-info schema")
check(doc is not None and doc["field"]["n"] == 80, "field-info n = 80")

a = json.loads(run("field-info", "--p", "2", "--r", "8").stdout)
b = json.loads(run("field-info", "--p", "2", "--r", "8").stdout)
for d in (a, b):
    d["manifest"].pop("timestamp")
check(a == b, "field-info reproducible apart from timestamp")

check(run("field-info", "--p", "4", "--r", "2").returncode == 2, "non-prime p exits 2")
check(run("field-info", "--p", "2", "--r", "3").returncode == 2, "odd r exits 2")
check(run("field-info", "--bogus").returncode == 2, "unknown flag exits 2")
check(run("field-info", "--p", "2", "--r", "4", env={"CHARSUM_THREADS": "0"}).returncode == 2,
      "invalid CHARSUM_THREADS exits 2")

r = run("charsum", "--p", "3", "--r", "4", "--chi", "1", "--f", "0,1", "--set", "1,2;1,2;1,2;1,2")
check(r.returncode == 0, "charsum audit exit 0")
doc = validate("charsum", r.stdout, "charsum schema")
check(doc is not None and doc["audit"]["violation"] is False, "charsum audit has no violation")

r1 = run("charsum", "--p", "2", "--r", "10", "--chi", "7", "--f", "1,3,1", "--sparse", "4", "--no-audit",
         env={"CHARSUM_THREADS": "1"})
r4 = run("charsum", "--p", "2", "--r", "10", "--chi", "7", "--f", "1,3,1", "--sparse", "4", "--no-audit",
         env={"CHARSUM_THREADS": "4"})
d1 = validate("charsum", r1.stdout, "sparse charsum schema")
d4 = json.loads(r4.stdout)
check(d1 is not None and d1["sum"] == d4["sum"], "sum identical for 1 and 4 workers")

check(run("charsum", "--p", "3", "--r", "4", "--chi", "0", "--set", "*;*;*;*").returncode == 3,
      "trivial character audit exits 3")
check(run("charsum", "--p", "3", "--r", "4", "--set", "*;*").returncode == 2, "short family exits 2")

r = run("thresholds", "--q", "8,7,4")
check(r.returncode == 0, "thresholds exit 0")
doc = validate("thresholds", r.stdout, "thresholds schema")
check(doc is not None and [t["r_min"] for t in doc["thresholds"]] == [3256, 4754, 363184], "thresholds 8,7,4")
r = run("thresholds", "--q", "8", "--csv")
check(r.stdout.splitlines()[0].startswith("q,r_min,"), "thresholds csv header")

e1 = validate("eta", run("eta", "--rho", "0.13").stdout, "eta schema")
e2 = json.loads(run("eta", "--rho", "0.87").stdout)
check(e1 is not None and abs(e1["eta_prime"] - e2["eta_prime"]) < 1e-12, "eta reflection 0.87 -> 0.13")
check(run("eta", "--rho", "0").returncode == 2, "eta rho = 0 exits 2")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "curve.csv"
    r = run("eta", "--curve", "--step", "0.01", "--out", str(out))
    check(r.returncode == 0, "eta curve exit 0")
    validate("eta", r.stdout, "eta curve summary schema")
    lines = out.read_text().splitlines()
    check(lines[0] == "rho,H,eta_prime", "curve header")
    check(lines[1:3] == ["#eta_ref,0.13,0.62751", "#eta_ref,0.32,0.82719"], "curve reference rows")
    check(len(lines) == 53, "curve has 50 data rows")
check(run("eta", "--curve", "--step", "0.05").returncode == 2, "coarse curve step exits 2")

r = run("verify", "--suite", "lemma41")
check(r.returncode == 0, "verify lemma41 exit 0")
validate("verify", r.stdout, "verify schema")
check(run("verify", "--suite", "nope").returncode == 2, "unknown suite exits 2")

r = run("primitive", "--p", "3", "--r", "4", "--avoid", "0,0,0,0")
check(r.returncode == 0, "primitive exit 0")
doc = validate("primitive", r.stdout, "primitive schema")
check(doc is not None and doc["consistent"] and abs(doc["N_direct"] - doc["N_vinogradov"]) <= 1e-6,
      "primitive direct = vinogradov")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
