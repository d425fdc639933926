"""Validate ttpack JSON reports against the published schema."""
import json
import subprocess
import sys

import jsonschema

tool, schema_path, data = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

commands = [
    ["ramsey", "verify", "--quantity", "f", "--k", "3"],
    ["ramsey", "verify", "--quantity", "g", "--k", "3"],
    ["ramsey", "find-free", "--k", "4", "--n", "7"],
    ["ramsey", "table", "--which", "tt4-free-7"],
    ["enumerate", "--n", "4", "--codes"],
    ["cover", "--k", "4", "--t", "3", "--tight", "--seed", "7"],
    ["embed", "--h", "1", "--k", "3", "--w", "301", "--b", "300", "--mu", "1/200", "--p", "0.85"],
    ["pack", "--pattern", "ttk:3", "--input", f"{data}/cyclic_triangle.txt"],
    ["construct", "--which", "tt4", "--params", "n=98,gamma=1/21"],
    ["verify-construction", "--input", f"{data}/prop2_n60.json"],
    ["factor", "--input", f"{data}/cyclic_triangle.txt", "--pattern", "ttk:3"],
    ["--budget", "2", "pack", "--pattern", "ttk:4", "--tournament", "40"],
]

failures = 0
for args in commands:
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    try:
        validator.validate(json.loads(proc.stdout))
        print(f"ok    {' '.join(args)} (exit {proc.returncode})")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures += 1
        print(f"FAIL  {' '.join(args)}: {e}")
sys.exit(1 if failures else 0)
