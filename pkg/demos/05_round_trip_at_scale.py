# # The round trip on random signatures
#
# The harness generates signatures that always check, then runs a
# property family over them.  Seeds are per case, so any failure can be
# replayed alone.

from ficsig import harness
from ficsig.syntax import print_sig

p = harness.GenParams(seed=3)
print(print_sig(harness.gen_signature(p)))

for name in harness.SUITES:
    report = harness.run_suite(name, p, cases=200)
    print(f"{name:12} {report.text().strip():16} {report.counts}")
