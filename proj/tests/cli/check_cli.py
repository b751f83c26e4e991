"""End-to-end checks of the pluricalc CLI: exit codes, report schema, determinism."""
import argparse
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

RATIONAL = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")

ap = argparse.ArgumentParser()
ap.add_argument("--exe", required=True)
ap.add_argument("--schema", required=True)
ap.add_argument("--data", required=True)
args = ap.parse_args()

schema = json.load(open(args.schema))
validator = jsonschema.Draft202012Validator(schema)
failures = []


def run(*argv, env=None):
    return subprocess.run([args.exe, *argv], capture_output=True, text=True, env=env)


def report(name, argv, want_exit=0):
    p = run(*argv)
    if p.returncode != want_exit:
        failures.append(f"{name}: exit {p.returncode}, wanted {want_exit}: {p.stderr.strip()}")
        return None
    doc = json.loads(p.stdout)
    errs = list(validator.iter_errors(doc))
    if errs:
        failures.append(f"{name}: schema: {errs[0].message}")
    if doc["pass"] != (want_exit == 0):
        failures.append(f"{name}: pass={doc['pass']} disagrees with exit {want_exit}")
    for c in doc["checks"]:
        for key in ("value", "expected"):
            if key in c and "/" in c[key] and not RATIONAL.match(c[key]):
                failures.append(f"{name}: check {c['name']} {key} {c[key]!r} is not p/q")
    print(f"ok  {name}")
    return doc


def no_floats(name, node):
    if isinstance(node, float):
        failures.append(f"{name}: float {node} in report")
    elif isinstance(node, dict):
        for v in node.values():
            no_floats(name, v)
    elif isinstance(node, list):
        for v in node:
            no_floats(name, v)


d = args.data
cases = [
    ("hj", ["hj", "--n", "7", "--q", "2"], 0),
    ("mld-chain", ["mld", "--chain", "2,2,3"], 0),
    ("mld-graph", ["mld", "--graph", f"{d}/hj_7_2_graph.json"], 0),
    ("zariski", ["zariski", "--config", f"{d}/chain223.json", "--divisor", f"{d}/divisor_d.json"], 0),
    ("floorloop", ["floorloop", "--config", f"{d}/chain223.json", "--divisor", f"{d}/divisor_int.json",
                   "--target", f"{d}/divisor_target.json"], 0),
    ("reduce", ["reduce", "--config", f"{d}/chain223.json", "--m", "7", "--coeffs", "1,2,3", "--loop"], 0),
    ("nefcoeffs", ["nefcoeffs", "--m0", "5", "--n2", "2", "--chains", "4,5,6"], 0),
    ("nefcoeffs-external", ["nefcoeffs", "--m0", "5", "--n2", "2", "--chains", "4", "--gamma0", "1/90", "--t", "2"], 1),
    ("family", ["family", "--n", "4", "--k", "2", "--nonnef-m", "4"], 0),
    ("family-grid", ["family", "--grid", "4:5,2:3", "--check", "intersection"], 0),
    ("toric", ["toric", "--m", "9", "--n", "5", "--b", "2", "--m0", "1"], 0),
    ("classify", ["classify", "--epsilon", "11/30", "--strict"], 0),
    ("accept-subset", ["accept", "--only", "1,3,13", "--no-timings"], 0),
    ("accept-11", ["accept", "--only", "11", "--no-timings"], 1),
]
docs = {}
for name, argv, code in cases:
    doc = report(name, argv, code)
    if doc is not None:
        no_floats(name, doc)
        docs[name] = doc

if "hj" in docs:
    out = docs["hj"]["outputs"]
    if out != {"weights": [4, 2], "coeffs": ["4/7", "2/7"], "mld": "3/7", "cartier_index": 7}:
        failures.append(f"hj outputs {out}")

# usage errors
for name, argv in [("no-subcommand", []), ("unknown-flag", ["hj", "--bogus"]), ("missing-q", ["hj", "--n", "7"]),
                   ("bad-type", ["hj", "--n", "6", "--q", "2"]), ("bad-m0", ["nefcoeffs", "--m0", "4", "--n2", "2", "--chains", "3"]),
                   ("missing-file", ["zariski", "--config", "/nonexistent.json", "--divisor", "/nonexistent.json"]),
                   ("bad-toric", ["toric", "--m", "9", "--n", "4", "--b", "2", "--m0", "1"])]:
    p = run(*argv)
    if p.returncode != 2:
        failures.append(f"{name}: exit {p.returncode}, wanted 2")
    else:
        print(f"ok  {name} (usage error)")

# --out writes the same bytes as stdout
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "r.json")
    a = run("hj", "--n", "11", "--q", "3").stdout
    run("--out", path, "hj", "--n", "11", "--q", "3")
    if open(path).read() != a:
        failures.append("--out differs from stdout")
    else:
        print("ok  --out")

# determinism: byte-identical reruns, independent of thread count and seed-stable
def env_threads(n):
    e = dict(os.environ)
    e["PLURICALC_THREADS"] = str(n)
    return e

for name, argv in [("classify", ["classify", "--epsilon", "2/5", "--chains"]),
                   ("family-nonnef", ["family", "--n", "5", "--k", "2", "--nonnef-m", "2"]),
                   ("accept-random", ["--seed", "77", "accept", "--only", "7,8,9", "--trials", "150", "--no-timings"]),
                   ("toric-sweep", ["toric", "--m", "9", "--n", "5", "--b", "2", "--m0", "1", "--sweep", "11"])]:
    outs = {run(*argv, env=env_threads(t)).stdout for t in (1, 1, 3)}
    if len(outs) != 1:
        failures.append(f"{name}: output depends on run or thread count")
    else:
        print(f"ok  {name} deterministic")

a = run("--seed", "1", "accept", "--only", "7", "--trials", "50", "--no-timings").stdout
b = run("--seed", "2", "accept", "--only", "7", "--trials", "50", "--no-timings").stdout
if json.loads(a)["inputs"]["seed"] == json.loads(b)["inputs"]["seed"]:
    failures.append("--seed not recorded")

for f in failures:
    print("FAIL", f)
sys.exit(1 if failures else 0)
