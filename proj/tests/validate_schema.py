#!/usr/bin/env python3
"""Run the CLI over every subcommand with --format json and validate against the report schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    tmp = Path(tempfile.mkdtemp(prefix="flagswap_schema_"))
    files = {
        "u": "1 4 2\n0 1 2\n0 0 1\n",
        "ng": "1 1 0\n0 1 1\n0 0 1\n",
        "bad": "1 0\n0 x\n",
        "params": "1 1 -3\n1 2 1\n2 1 2\n",
        "flag": "2 4 1\n2 1 0\n1 0 0\n",
        "fa": "1 0 0\n0 1 0\n0 0 1\n",
    }
    for name, body in files.items():
        (tmp / name).write_text(body)

    # (args, expected exit code)
    runs = [
        (["orbits", "--n", "3"], 0),
        (["pairing", "--n", "4"], 0),
        (["verify", "--d", "5"], 0),
        (["verify", "--d", "7"], 0),
        (["verify", "--d", "9"], 3),
        (["classify", "--matrix", str(tmp / "u")], 0),
        (["classify", "--params", str(tmp / "params")], 0),
        (["classify", "--flag", str(tmp / "flag")], 0),
        (["classify", "--matrix", str(tmp / "ng")], 1),
        (["classify", "--matrix", str(tmp / "bad")], 2),
        (["factorize", "--matrix", str(tmp / "u")], 0),
        (["antipodal", "--flag-a", str(tmp / "fa"), "--flag-b", str(tmp / "flag")], 0),
        (["census-d3"], 0),
        (["claim2", "--n", "4"], 0),
        (["claim2", "--n", "3"], 2),
        (["consistency", "--d", "5", "--samples", "10"], 0),
        (["orbit-table"], 0),
        (["orbits", "--n", "5", "--max-states", "100"], 3),
    ]
    failures = 0
    for args, want in runs:
        proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args[:3])
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
            validator.validate(doc)
        except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
            print(f"FAIL {label}: {exc}")
            failures += 1
            continue
        print(f"ok   {label}")
    print(f"{len(runs) - failures}/{len(runs)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
