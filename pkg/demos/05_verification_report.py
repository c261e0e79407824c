"""
The identity catalog
====================

Every identity is evaluated by two routes over a seeded grid. Two of them
are only reported: their branch conventions leave a half-turn ambiguity.
"""

from etastrip.verify import GridSpec, run_all

report = run_all(GridSpec(), jobs=1)
for r in report.results:
    tag = "report" if r.report_only else ("pass" if r.passed else "FAIL")
    print(f"{r.id:<16} {tag:<6} max {r.max_residual:.2e}  threshold {r.threshold:g}"
          f"  off-threshold points {len(r.failures)}/{r.grid_size}")
print("\nverdict:", report.verdict)

for key, fig in report.published_figures.items():
    print(key, {k: v for k, v in fig.items()})
