"""
Running the checks
==================

Each check returns a report whose status is one of pass, fail,
hypothesis_not_met, skipped_cap or unknown.  A fail carries witnesses that can
be replayed by brute force.
"""

from collections import Counter

from cdgraph import SuiteConfig, build_group, run_check, run_suite
from cdgraph.verify import check_theorem_A, replay_witness

G = build_group("Alt(4)")
for r in run_suite(G, SuiteConfig(checks=["fund_lemma", "theorem_B", "theorem_C"])):
    print(r.check_id, r.status, r.details)

print(run_check(build_group("Sym(3)"), "cor_5", p=5).details)
print(Counter(r.status for r in run_suite(build_group("Frobenius(7,6)"))))

# Forcing the almost-simple check onto a soluble group produces a genuine witness.
r = check_theorem_A(G, require_hypothesis=False)
print(r.status, r.witnesses[0])
print("witness replays:", replay_witness(G, r.witnesses[0]))
