"""Runs the CLI and validates each JSON report against its schema."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

SCHEMAS = pathlib.Path(__file__).resolve().parent.parent / "schemas"


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        resources.append((path.name, Resource.from_contents(json.loads(path.read_text()))))
    return Registry().with_resources(resources)


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}, stderr {proc.stderr.strip()}")
    return json.loads(proc.stdout) if proc.stdout.strip() else None


def main():
    cli = sys.argv[1]
    registry = load_registry()
    failures = 0

    def check(schema, document, label):
        nonlocal failures
        validator = jsonschema.Draft202012Validator(registry.contents(schema), registry=registry)
        errors = list(validator.iter_errors(document))
        status = "ok" if not errors else f"{len(errors)} errors, first: {errors[0].message}"
        print(f"{label}: {status}")
        failures += bool(errors)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        algebras = {
            "example44": run(cli, "family", "example44"),
            "k2": run(cli, "family", "k2"),
            "nlaa": run(cli, "family", "non_lie_almost_abelian", "--field", "gf3", "--dim-i", "2"),
            "extraspecial": run(cli, "family", "extraspecial_sum", "--field", "gf3", "--form-rank", "2", "--dim-z", "1"),
        }
        for name, table in algebras.items():
            check("table.schema.json", table, f"family {name}")
            path = tmp / f"{name}.json"
            path.write_text(json.dumps(table))
            check("info.schema.json", run(cli, "info", "--algebra", str(path)), f"info {name}")
            check("classification.schema.json", run(cli, "classify", "--algebra", str(path)), f"classify {name}")

        line = tmp / "line.json"
        line.write_text(json.dumps([[0, 1, 0]]))
        check("quasi_check.schema.json", run(cli, "quasi", "check", "--algebra", str(tmp / "example44.json"), "--subspace", str(line)),
              "quasi check example44 Fz")
        x_line = tmp / "x.json"
        x_line.write_text(json.dumps([[1, 0, 0]]))
        check("quasi_check.schema.json",
              run(cli, "quasi", "check", "--algebra", str(tmp / "k2.json"), "--subspace", str(x_line), "--oracle", expect=1),
              "quasi check k2 Fx")
        check("lemmas.schema.json", run(cli, "lemmas", "--algebra", str(tmp / "nlaa.json")), "lemmas nlaa")
        check("lemmas.schema.json", run(cli, "lemmas", "--corpus", "gf2", "--max-dim", "3"), "lemmas corpus gf2")
        check("census.schema.json", run(cli, "census", "--field", "gf2", "--dim", "2", "--exhaustive"), "census gf2 dim 2")
        check("census.schema.json", run(cli, "--seed", "5", "census", "--field", "gf3", "--dim", "2", "--sample", "200"),
              "census gf3 dim 2 sample")

        # Precondition failures exit 2 with no report.
        run(cli, "family", "thm46_char2", "--field", "gf3", expect=2)
        run(cli, "validate", str(line), expect=2)

    print("schema check", "passed" if failures == 0 else f"failed ({failures})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
