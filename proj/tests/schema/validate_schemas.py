"""Validate CLI documents and test inputs against docs/schemas.

usage: validate_schemas.py <pbundle binary> <schema dir> <test data dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
    registry = Registry().with_resources((doc["$id"], Resource.from_contents(doc)) for doc in schemas.values())
    return schemas, registry


def validator(schemas, registry, name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        raise SystemExit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def main():
    binary, schema_dir, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schemas, registry = load_registry(schema_dir)
    params = validator(schemas, registry, "params.schema.json")
    config = validator(schemas, registry, "enumeration_config.schema.json")
    report = validator(schemas, registry, "report_document.schema.json")
    catalog = validator(schemas, registry, "catalog.schema.json")

    params.validate(json.loads((data_dir / "example3_params.json").read_text()))
    params.validate(json.loads((data_dir / "example3_alpha2_params.json").read_text()))
    for name in ("enumerate_d2.json", "enumerate_empty.json", "enumerate_huge.json"):
        config.validate(json.loads((data_dir / name).read_text()))

    bad_params = json.loads((data_dir / "example3_params.json").read_text())
    bad_params["extra"] = 1
    if params.is_valid(bad_params):
        raise SystemExit("params schema accepted an unknown key")
    if config.is_valid({"schema_version": 1, "n": 3}):
        raise SystemExit("config schema accepted a scalar range")

    commands = [
        ["segre", "--n", "3", "--chern", "1,5,15,39"],
        ["check", "--params", str(data_dir / "example3_params.json")],
        ["check", "--params", str(data_dir / "example3_alpha2_params.json")],
        ["replay", "all"],
        ["enumerate", "--config", str(data_dir / "enumerate_d2.json")],
        ["examples", "verify"],
        ["examples", "export", "--max-n", "6"],
    ]
    for args in commands:
        report.validate(run(binary, *args))
        report.validate(run(binary, "--deterministic", *args))

    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp) / "catalog.json"
        subprocess.run([binary, "--out", str(out), "examples", "export"], check=True)
        doc = json.loads(out.read_text())
        report.validate(doc)
        catalog.validate(doc["outputs"]["catalog"])
        for record in doc["outputs"]["catalog"]:
            params.validate(record["params"])

    print(f"validated {len(commands) * 2 + 1} documents against {len(schemas)} schemas")


if __name__ == "__main__":
    main()
