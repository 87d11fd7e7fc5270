#!/usr/bin/env python3
"""End-to-end checks of the geomforge executable: exit codes, JSON reports
validated against the report schema, and file round trips."""

import json
import os
import subprocess
import sys
import tempfile

try:
    import jsonschema
except ImportError:  # fall back to a structural check
    jsonschema = None

EXE = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
failures = []


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True, timeout=600)


def validate(report, label):
    if jsonschema is not None:
        try:
            jsonschema.validate(report, SCHEMA)
        except jsonschema.ValidationError as e:
            failures.append(f"{label}: schema violation: {e.message}")
    else:
        for key in SCHEMA["required"]:
            if key not in report:
                failures.append(f"{label}: missing key {key}")


def expect(cond, label):
    if not cond:
        failures.append(label)


def json_report(label, *args, exit_code=0):
    p = run(*args, "--format", "json")
    expect(p.returncode == exit_code, f"{label}: exit {p.returncode}, expected {exit_code}: {p.stderr.strip()}")
    try:
        report = json.loads(p.stdout)
    except json.JSONDecodeError:
        failures.append(f"{label}: stdout is not JSON")
        return None
    validate(report, label)
    return report


hex_report = json_report("hexagon verify", "hexagon", "--q", "2", "--verify")
if hex_report:
    expect(hex_report["pass"] is True, "hexagon verify: pass flag")
    expect("elapsed_ms" not in hex_report, "hexagon verify: elapsed_ms without --timing")

timed = json_report("hexagon timing", "hexagon", "--q", "2", "--timing")
if timed:
    expect("elapsed_ms" in timed, "hexagon timing: elapsed_ms present")

z = json_report("zsigmondy", "constraints", "zsigmondy", "--q", "2", "--k", "6")
if z:
    outcome = [v for v in z["verdicts"] if v["id"] == "outcome"]
    expect(outcome and outcome[0]["actual"] == "q_k_64", "zsigmondy: outcome q_k_64")

for args in (["field", "--q", "9"], ["polar", "--kind", "O+", "--n", "8", "--q", "2", "--report"],
             ["group", "--preset", "Sp(4,2)", "--check", "order", "rank", "antiflag", "line", "blocks", "chain"],
             ["constraints", "rank3", "--k", "30", "--l", "32", "--lambda", "13", "--mu", "15"],
             ["constraints", "section13", "--m-lo", "3", "--m-hi", "20"],
             ["constraints", "case31", "--q", "2", "--m", "3", "--h", "5", "--f1", "2", "--e2", "1"],
             ["showcase", "--name", "semilinear"],
             ["acceptance", "--tag", "hexagon"]):
    json_report(" ".join(args[:2]), *args)

# Infeasible rank-4 data is a failed verdict, not a usage error.
json_report("rank4 infeasible", "constraints", "rank4", "--k", "30", "--l", "32", "--lambda", "13", "--mu", "15",
            "--j", "16", "--t", "6", exit_code=1)

expect(run("hexagon", "--q", "2", "--no-such-flag").returncode == 2, "unknown flag exits 2")
expect(run("field", "--q", "6").returncode == 2, "invalid field order exits 2")
expect(run("hexagon", "--q", "5").returncode == 2, "unsupported hexagon q exits 2")
expect(run("--version").returncode == 0, "--version exits 0")

with tempfile.TemporaryDirectory() as tmp:
    geo = os.path.join(tmp, "hexagon.json")
    out = os.path.join(tmp, "report.json")
    p = run("hexagon", "--q", "2", "--export", geo)
    expect(p.returncode == 0 and os.path.exists(geo), "hexagon export writes a file")
    ng = json_report("ngon from export", "ngon", "--in", geo)
    if ng:
        expect(ng["pass"] is True, "ngon from export: pass flag")
    p = run("ngon", "--in", geo, "--format", "json", "--out", out)
    expect(p.returncode == 0, "ngon --out exit code")
    if os.path.exists(out):
        validate(json.load(open(out)), "ngon --out file")
    else:
        failures.append("ngon --out wrote nothing")
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write('{"points": 3, "lines": [[0, 7]]}')
    expect(run("ngon", "--in", bad).returncode == 2, "malformed geometry exits 2")

    # Byte-identical reports across runs and thread counts.
    a = run("group", "--preset", "Sp(4,3)", "--check", "order", "rank", "--format", "json", "--threads", "1").stdout
    b = run("group", "--preset", "Sp(4,3)", "--check", "order", "rank", "--format", "json", "--threads", "4").stdout
    expect(a == b and a, "group report independent of --threads")

for f in failures:
    print("FAIL:", f)
print(f"{'PASS' if not failures else 'FAIL'}: cli end-to-end ({len(failures)} failures)")
sys.exit(1 if failures else 0)
