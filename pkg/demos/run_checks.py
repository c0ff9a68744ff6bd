"""Run every registered verification check and print the summary table."""
import sys

from chromverify import checks

reports = checks.run_all()
print(checks.summary_table(reports))
sys.exit(0 if all(r.passed for r in reports) else 1)
