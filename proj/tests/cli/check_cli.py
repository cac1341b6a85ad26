"""End-to-end checks of the folnewt command line: exit codes, report schema,
determinism and DOT output."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BINARY, DATA, SCHEMA = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
validator = jsonschema.Draft202012Validator(json.loads(SCHEMA.read_text()))
failures = []


def run(args, stdin=None):
    proc = subprocess.run([BINARY, *args], input=stdin, capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, ok, detail=""):
    print(("ok   " if ok else "FAIL ") + name + (f": {detail}" if detail and not ok else ""))
    if not ok:
        failures.append(name)


def report(args, expected_code, name):
    code, out, err = run(args)
    check(f"{name} exits {expected_code}", code == expected_code, f"got {code}, stderr {err.strip()}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        check(f"{name} prints JSON", False, str(e))
        return None
    errors = sorted(validator.iter_errors(doc), key=str)
    check(f"{name} matches the schema", not errors, errors[0].message if errors else "")
    return doc


def without_timings(doc):
    doc = dict(doc)
    doc.pop("timings", None)
    return doc


worked, degenerate, cusp, regular = (str(DATA / f) for f in
                                     ("worked-example.json", "degenerate.json", "cusp.json", "regular.json"))

doc = report(["check-nnd", worked], 0, "check-nnd worked")
check("worked verdict", doc and doc["result"]["outcome"] == "non-degenerate")
doc = report(["check-nnd", degenerate], 1, "check-nnd degenerate")
check("degenerate witness", doc and doc["result"]["evidence"]["witness"]["values"] == {"T_x1": "1", "T_x2": "1"})
report(["check-nnd", "--route", "theorem", worked], 0, "check-nnd theorem worked")
report(["check-nnd", "--route", "theorem", "--serial", degenerate], 1, "check-nnd theorem degenerate")
doc = report(["equiv", cusp], 1, "equiv cusp")
check("cusp agreement", doc and doc["result"]["agreement"] == "agree"
      and doc["result"]["direct"]["outcome"] == "degenerate" and doc["result"]["theorem"]["outcome"] == "degenerate")
report(["equiv", regular], 0, "equiv regular")
report(["logsing", cusp], 1, "logsing cusp")
report(["logsing", regular], 0, "logsing regular")
doc = report(["polyhedra", degenerate], 0, "polyhedra degenerate")
check("degenerate vertices", doc and any(p["stratum"] == ["x1", "x2"] and p["vertices"] == [[0, 1], [1, 0]]
                                         for p in doc["polyhedra"]))
report(["validate", worked], 0, "validate worked")

with tempfile.TemporaryDirectory() as tmp:
    dot = Path(tmp) / "tree.dot"
    doc = report(["desing", degenerate, "--strategy", "deepest-first", "--emit-dot", str(dot)], 0, "desing degenerate")
    check("desing performs a blow-up", doc and doc["result"]["blowups"] >= 1)
    text = dot.read_text() if dot.exists() else ""
    check("DOT file holds the chart tree", text.startswith("digraph") and "->" in text)

    bad = Path(tmp) / "bad.json"
    bad.write_text('{"divisor": ["x1", "x2"], "form": {"x1": "x1 - x2", "x2": "2*x1 - 2*x2"}}')
    doc = report(["validate", str(bad)], 1, "validate rejects a common factor")
    check("validate reports the error", doc and doc["result"]["valid"] is False)
    code, _, _ = run(["check-nnd", str(bad)])
    check("check-nnd on invalid input exits 64", code == 64, f"got {code}")
    garbage = Path(tmp) / "garbage.json"
    garbage.write_text("{not json")
    code, _, _ = run(["check-nnd", str(garbage)])
    check("malformed JSON exits 64", code == 64, f"got {code}")

code, _, _ = run(["check-nnd", str(DATA / "missing.json")])
check("missing file exits 64", code == 64, f"got {code}")
code, _, _ = run(["check-nnd", worked, "--strategy", "random"])
check("unknown strategy exits 64", code == 64, f"got {code}")
code, _, _ = run(["frobnicate", worked])
check("unknown subcommand exits 64", code == 64, f"got {code}")
code, _, _ = run(["check-nnd", worked, "--fuel-blowups", "0", "--route", "theorem"])
check("blow-up fuel exhaustion exits 2", code == 2, f"got {code}")

code, out, _ = run(["check-nnd", "-"], stdin=Path(worked).read_text())
check("stdin input", code == 0 and json.loads(out)["result"]["outcome"] == "non-degenerate")
code, out, _ = run(["check-nnd", "--text", degenerate])
check("text output", code == 1 and "degenerate" in out and not out.lstrip().startswith("{"))

for args in (["equiv", degenerate], ["desing", worked], ["check-nnd", "--serial", degenerate]):
    a, b = run(args)[1], run(args)[1]
    check(f"{' '.join(args[:1])} is deterministic", without_timings(json.loads(a)) == without_timings(json.loads(b)))
a = without_timings(json.loads(run(["check-nnd", degenerate])[1]))
b = without_timings(json.loads(run(["check-nnd", "--serial", degenerate])[1]))
a["options"].pop("policy")
b["options"].pop("policy")
check("serial and parallel reports agree", a == b)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
