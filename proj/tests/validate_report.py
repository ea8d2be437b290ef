"""Validate JSON reports produced by the CLI against schemas/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["verify", "planar-6", "--json"],
    ["verify", "B1", "--verbatim", "--json"],
    ["cohomology", "case8", "-P", "alpha=0,beta=0", "--json"],
    ["cohomology", "case12-dual", "-P", "alpha=1,ms=0", "--json"],
]
for args in runs:
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        sys.exit(f"{args}: exit {out.returncode}: {out.stderr}")
    jsonschema.validate(json.loads(out.stdout), schema)
    print("valid:", " ".join(args))
