"""Driving the verification harness from Python.

Run: python3 demos/04_verification.py
Runs a few suites on small exhaustive corpora and inspects the report.
"""

import json

from grhopf import corpus, run_suite

# the corpus is every labeled graph on v1..vn up to the requested size
for n in range(4):
    print(f"corpus({n}):", len(corpus(n)), "graphs")
assert len(corpus(3)) == 12

# a light suite: orientation counts against the chromatic polynomial
rep = run_suite("stanley", 4)
print(rep.summary_text())
assert rep.ok

# restrict a heavier suite to two monoids to keep this demo quick
rep = run_suite("bimonoid", 3, monoids=["L", "AO"])
print(rep.summary_text())
assert rep.ok
assert {r.monoid for r in rep.records} == {"L", "AO"}

# antipode route agreement, including gated closed-form verdicts
rep = run_suite("antipode", 3, monoids=["Sigma"])
print(rep.summary_text())
verdicts = [r for r in rep.records if r.check == "antipode_closed_form_verdict"]
print("closed-form verdict records:", len(verdicts), "all passed:", all(v.passed for v in verdicts))
assert verdicts and all(v.passed for v in verdicts)

# commutativity records include corpus-level witnesses that expected
# failures really fail; flavors expected to hold are asserted per graph
rep = run_suite("commutativity", 3, monoids=["AO"])
print(rep.summary_text())
witnesses = [r for r in rep.records if r.check == "commutativity_witness"]
for w in witnesses:
    print("  witnessed failing flavor:", w.detail["flavor"])
assert rep.ok

# the JSON report is machine-readable; wall_time_s is its only
# run-to-run varying field
data = run_suite("basis-change", 2).to_json()
data.pop("wall_time_s")
print(json.dumps({k: v for k, v in data.items() if k != "records"}, sort_keys=True))
assert data["schema"] == "grhopf.report/1"
assert data["summary"]["failed"] == 0

print("ok")
