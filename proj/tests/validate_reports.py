"""Runs representative qdesign commands and validates each JSON report against docs/report-schema.json.

Also checks that reports are byte-identical across runs and thread counts."""

import json
import subprocess
import sys

import jsonschema

qdesign, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

CASES = [
    (["zoo", "list"], 0),
    (["profile", "--zoo", "ternary-golay"], 0),
    (["profile", "--zoo", "simplex", "--q", "3", "--m", "3"], 0),
    (["design", "--zoo", "ternary-golay", "--weight", "5", "--max-strength"], 0),
    (["design", "--zoo", "rs", "--q", "16", "--k", "4", "--weight", "12", "--t", "2"], 1),
    (["design", "--zoo", "drs", "--q", "8", "--k", "3", "--weight", "7", "--t", "2", "--fixed-coords"], 0),
    (["criteria", "--zoo", "rt6", "--regular", "2"], 0),
    (["criteria", "--zoo", "tf1", "--q", "4", "--coordinate", "0"], 0),
    (["reproduce", "drs"], 1),
    (["reproduce", "golay"], 0),
]

failures = 0
for args, want_exit in CASES:
    outs = []
    for threads in ("1", "2"):
        p = subprocess.run([qdesign, "--quiet", "--threads", threads] + args, capture_output=True, text=True)
        outs.append(p.stdout)
        if p.returncode != want_exit:
            print(f"FAIL {' '.join(args)}: exit {p.returncode}, expected {want_exit}\n{p.stderr}")
            failures += 1
    if outs[0] != outs[1]:
        print(f"FAIL {' '.join(args)}: report depends on the thread count")
        failures += 1
    try:
        report = json.loads(outs[0])
    except json.JSONDecodeError as e:
        print(f"FAIL {' '.join(args)}: not JSON ({e})")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    for e in errors:
        print(f"FAIL {' '.join(args)}: {'/'.join(map(str, e.path))}: {e.message}")
    failures += len(errors)
    if not errors:
        print(f"ok   {' '.join(args)}")

for args in (["profile"], ["profile", "--zoo", "nope"], ["design", "--zoo", "rt6"], ["bogus"]):
    p = subprocess.run([qdesign, "--quiet"] + args, capture_output=True, text=True)
    if p.returncode != 2:
        print(f"FAIL {' '.join(args)}: exit {p.returncode}, expected usage error 2")
        failures += 1
    else:
        print(f"ok   {' '.join(args)} -> 2")

sys.exit(1 if failures else 0)
