"""Runs every CLI subcommand with --json and validates the output against the schema."""
import json
import subprocess
import sys

import jsonschema

tool, schema_path, batch_path = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft7Validator(schema)

runs = [
    ["count", "KNNNNvkq"],
    ["count", "v", "--stm-factor"],
    ["enumerate", "KNv", "--board", "2x2", "--stm", "b"],
    ["enumerate", "Kv", "--board", "1x3", "--limit", "2"],
    ["legal-exact", "Kvk", "--stm", "w"],
    ["legal-sample", "KQvk", "--samples", "1000", "--seed", "3", "--stm", "b"],
    ["classes", "KNNvk", "--group", "d4"],
    ["classes", "Kvk", "--board", "2x3"],
    ["ratio", "--examined", "120000", "KNNNNvKRR"],
]
for command in ["count", "classes", "ratio"]:
    extra = ["--examined", "1000"] if command == "ratio" else []
    runs.append([command, "--batch", batch_path] + extra)

failures = 0
for args in runs:
    proc = subprocess.run([tool] + args + ["--json"], capture_output=True, text=True)
    lines = [l for l in proc.stdout.splitlines() if l]
    if not lines:
        print("no output:", args, proc.stderr)
        failures += 1
    for line in lines:
        errors = list(validator.iter_errors(json.loads(line)))
        for e in errors:
            print("schema violation:", args, e.message)
        failures += len(errors)
print("validated", len(runs), "invocations,", failures, "failures")
sys.exit(1 if failures else 0)
