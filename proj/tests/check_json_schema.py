"""Run the CLI with --format json and validate the output against the schema.

Also checks that --no-timing output is byte-for-byte reproducible and that
the exit code tracks the verdicts.
"""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["verify", "--id", "thm1.2", "--n", "2", "--k", "2", "--order", "20"],
    ["verify", "--id", "thm1.1", "--n", "1", "--k", "2"],
    ["verify", "--id", "table2:ge-le", "--n", "2", "--order", "12"],
    ["verify", "--id", "table4:altinv-odd-kappa", "--n", "5"],
    ["verify", "--id", "rmk:rect"],
    ["verify", "--id", "kreiman:example"],
    ["verify", "--id", "cor6.5"],
]


def run(cli, args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    for args in RUNS:
        code, out, err = run(cli, [*args, "--format", "json"])
        label = " ".join(args)
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: not JSON ({exc}); stderr: {err.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failures += 1
            continue
        verdicts = all(r["verdict"] for r in doc)
        if (code == 0) != verdicts:
            print(f"FAIL {label}: exit code {code} does not match verdicts {verdicts}")
            failures += 1
            continue
        print(f"ok   {label}: {len(doc)} report(s), exit {code}")

    args = ["verify", "--id", "thm1.2", "--n", "1", "--k", "2", "--format", "json", "--no-timing"]
    first, second = run(cli, args)[1], run(cli, args)[1]
    if first != second or any(r["runtime_ms"] != 0 for r in json.loads(first)):
        print("FAIL --no-timing output is not reproducible")
        failures += 1
    else:
        print("ok   --no-timing output is byte-for-byte reproducible")

    # a false verdict: the ST shift does not hold for the one-cell shape
    code, out, _ = run(cli, ["verify", "--id", "eq:RPP=ST", "--n", "0", "--format", "json"])
    if code != 1 or json.loads(out)[0]["verdict"] is not False:
        print(f"FAIL false verdict should exit 1, got {code}")
        failures += 1
    else:
        print("ok   false verdict exits 1")

    code, _, _ = run(cli, ["verify", "--id", "no-such-identity", "--format", "json"])
    if code == 0:
        print("FAIL unknown id exited 0")
        failures += 1
    else:
        print(f"ok   unknown id rejected (exit {code})")

    code, _, _ = run(cli, ["verify", "--id", "thm1.1", "--format", "yaml"])
    if code == 0:
        print("FAIL bad --format exited 0")
        failures += 1
    else:
        print(f"ok   bad --format rejected (exit {code})")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
