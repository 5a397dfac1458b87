"""End-to-end checks of the hodgecalc binary: JSON schemas, exit codes,
byte-reproducibility and agreement between text and JSON output."""

import json
import os
import pathlib
import re
import subprocess
import sys
import tempfile

import jsonschema

BIN, ROOT = sys.argv[1], pathlib.Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"
FERMAT7 = "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3+x6^3"
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate(sub, args):
    r = run(sub, *args, "--json")
    check(r.returncode == 0, f"{sub} {' '.join(args)} exits 0 (got {r.returncode}: {r.stderr.strip()})")
    doc = json.loads(r.stdout)
    schema = json.loads((SCHEMAS / f"{sub}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        check(True, f"{sub} JSON matches schema")
    except jsonschema.ValidationError as e:
        check(False, f"{sub} JSON matches schema: {e.message}")
    again = run(sub, *args, "--json")
    check(again.stdout == r.stdout, f"{sub} output is byte-reproducible")
    return doc


def numbers(text):
    return [int(x) for x in re.findall(r"-?\d+", text)]


# Reports for every subcommand.
jr = validate("jring", ["--poly", FERMAT7, "--degree", "2"])
check(jr["dims"] == [1, 7, 21, 35, 35, 21, 7, 1], "jring dims of the Fermat cubic 5-fold")
text = run("jring", "--poly", FERMAT7).stdout
check(numbers(text.splitlines()[0])[-8:] == jr["dims"], "jring text carries the JSON dims")

hd = validate("hodge", ["--poly", "x0^5+x1^5+x2^5+x3^5+x4^5"])
check(hd["middle_primitive"] == [1, 101, 101, 1], "quintic 3-fold middle Hodge numbers")
text = run("hodge", "--poly", "x0^5+x1^5+x2^5+x3^5+x4^5").stdout
check("1 101 101 1" in text, "hodge text carries the JSON numbers")

tw = validate("twisted", ["--poly", FERMAT7, "--p", "4", "--k", "3"])
check(tw["cell"]["h"] == {"1": 21}, "twisted h^q(Omega^4(3)) = {1: 21}")
check("{q=1: 21}" in run("twisted", "--poly", FERMAT7, "--p", "4", "--k", "3").stdout, "twisted text prints {q=1: 21}")
validate("twisted", ["--poly", "x0^3+x1^3+x2^3+x3^3", "--kmin", "-2", "--kmax", "2"])

claims = DATA / "cubic_fivefold_claims.json"
jsonschema.validate(json.loads(claims.read_text()), json.loads((SCHEMAS / "claim-table.schema.json").read_text()))
mh = validate("mhs", ["--pair", "fermat-cubic-7", "--paper-table", str(claims)])
check(mh["report"]["dim_total"] == 64 and mh["report"]["hodge_filtration_dims"][3] == 42, "mhs dims 64 / 42")
check(len(mh["claims_audit"]) == 1, "mhs audit of the printed table has one finding")
mtext = run("mhs", "--pair", "fermat-cubic-7", "--paper-table", str(claims)).stdout
for t in mh["report"]["gr_upper_hodge"]:
    check(f"h_{t['weight']}^{{{t['p']},{t['q']}}} = {t['h']}" in mtext, f"mhs text carries h_{t['weight']}^{t['p']},{t['q']}")

df = validate("deform", ["--pair", "fermat-cubic-7"])
check(df["tangent"]["dim"] == 21 and df["obstruction"]["passed"] and df["jb"]["passed"], "deform certificates")

gm = validate("gm", ["--pair", "fermat-cubic-7", "--directions", str(DATA / "y_fixing_directions.txt")])
check(gm["frame_size"] == 42 and len(gm["ks"]) == 3 and all(s["passed"] for s in gm["symmetry"]), "gm bundle")
pf = validate("gm", ["--poly", "x0^3+x1^3+x2^3", "--directions", str(DATA / "hesse_direction.txt"), "--picard-fuchs"])
check(pf["picard_fuchs"]["order"] == 2 and pf["picard_fuchs"]["coefficients"][-1] == "t^3 + 27", "Hesse Picard-Fuchs")

ce = validate("certify", ["--pair", "fermat-cubic-7"])
check(all(c["passed"] for c in ce["certificates"]), "certify passes on the canonical pair")

pc = validate("paper-check", ["--pair", "fermat-cubic-7"])
check(pc["all_passed"] and pc["audit_notes"] == 1, "paper-check passes with one audit note")
r = run("paper-check", "--pair", "fermat-cubic-7")
check(r.returncode == 0 and "audit notes: 1" in r.stdout, "paper-check text exits 0")

# Exit codes.
check(run("jring", "--poly", "x0^3", "--degree", "2").returncode == 2, "singular input exits 2")
check(run("jring", "--poly", "x0^3+*x1").returncode == 3, "parse error exits 3")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
    tmp.write('{"hodge": {"6": {"33": 1}}}')
check(run("mhs", "--paper-table", tmp.name).returncode == 3, "malformed claim table exits 3")
os.unlink(tmp.name)
check(run("deform", "--poly", "x0^5+x1^5+x2^5+x3^5+x4^5").returncode == 1, "non-cubic deform is a usage error")
env = dict(os.environ, HODGE_MAX_MATRIX_DIM="10")
check(run("jring", "--poly", "x0^3+x1^3+x2^3+x3^3+2*x0*x1*x2+x1*x2*x3-x0*x3^2", env=env).returncode == 5,
      "work budget exits 5")
check(run("bogus").returncode != 0, "unknown subcommand is rejected")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
