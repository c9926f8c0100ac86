"""Validates parametra JSON reports against docs/schema.json."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_path, *scripts = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for script in scripts:
        out = subprocess.run([exe, script, "--format", "json", "--timing", "--constraints", "pos=g,m1,m2,L1,L2,L"],
                             capture_output=True, text=True, check=True).stdout
        errors = list(validator.iter_errors(json.loads(out)))
        for e in errors:
            print(f"{script}: {e.json_path}: {e.message}")
        failed += bool(errors)
        print(f"{script}: {'ok' if not errors else 'invalid'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
