"""Runs the CLI over the sample specs and the zoo, and validates every JSON report."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, args):
    out = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        raise SystemExit(f"{' '.join(args)}: exit {out.returncode}\n{out.stderr}")
    return json.loads(out.stdout)


def main():
    cli, schema_path, data_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [["zoo", "--all"]]
    for spec in sorted(data_dir.glob("*.json")):
        runs.append(["analyze", str(spec)])
        runs.append(["moduli", str(spec), "--notion", "usc"])
    runs.append(["--timing", "moduli", str(data_dir / "odd_prime_indicator.json"), "--notion", "uc"])

    failures = 0
    for args in runs:
        report = run(cli, args)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {' '.join(args)}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
