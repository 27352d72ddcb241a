"""Validates every fixture against the schema named by its kind."""
import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(sys.argv[1])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
bad = 0
for path in sorted((root / "fixtures").glob("*.json")):
    doc = json.loads(path.read_text())
    schema = schemas[doc["kind"]]
    jsonschema.Draft202012Validator.check_schema(schema)
    errors = list(jsonschema.Draft202012Validator(schema).iter_errors(doc))
    for e in errors:
        print(f"{path.name}: {e.json_path}: {e.message}")
    bad += bool(errors)
print(f"{len(list((root / 'fixtures').glob('*.json')))} fixtures, {bad} invalid")
sys.exit(1 if bad else 0)
