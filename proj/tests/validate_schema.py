#!/usr/bin/env python3
"""Validate orbitdeg --json output against docs/report-schema.json.

usage: validate_schema.py ORBITDEG SCHEMA
"""
import json
import subprocess
import sys

import jsonschema

KLEIN = "x^3*y + y^3*z + z^3*x"
FERMAT = "x^4 + y^4 + z^4"

INVOCATIONS = [
    ["flexes", KLEIN],
    ["flexes", FERMAT],
    ["predegree", "x^3 + y^3 + z^3"],
    ["predegree", FERMAT, "--aut", "96"],
    ["degree", KLEIN, "--aut", "168"],
    ["--seed", "7", "degree", FERMAT, "--aut", "96"],
    ["table"],
    ["table", "--from", "5", "--to", "7"],
    ["verify-chow"],
    ["pgl2", "--multiplicities", "1,1,1,1"],
    ["pgl2", "--multiplicities", "3,2,2,1"],
    ["bound", "3"],
    ["bound", "10"],
]


def numbers_in(value):
    if isinstance(value, bool):
        return []
    if isinstance(value, (int, float)):
        return [value]
    if isinstance(value, dict):
        return [n for v in value.values() for n in numbers_in(v)]
    if isinstance(value, list):
        return [n for v in value for n in numbers_in(v)]
    return []


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args in INVOCATIONS:
        cmd = [binary, "--json"] + args
        proc = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL  {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if numbers_in(report):
            errors.append("report contains JSON numbers")
        if errors:
            failures += 1
            print(f"FAIL  {label}")
            for e in errors:
                print(f"      {getattr(e, 'message', e)}")
        else:
            print(f"PASS  {label}")

    # the schema must reject malformed reports too
    bad = {"command": "bound", "d": 4, "predegree": "14280", "factored": "2^3*3*5*7*17",
           "bound": "168", "bound_factored": "2^3*3*7"}
    if validator.is_valid(bad):
        print("FAIL  schema accepts a numeric integer field")
        failures += 1
    else:
        print("PASS  schema rejects a numeric integer field")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
