#!/usr/bin/env python3
"""Walkthrough: stable predictions for spaces of non-singular forms.

For degree d the band k < (d+1)/2 is stable: there the cohomology of the
space of non-singular degree-d forms in n+1 variables agrees with that of
the general linear group, and the moduli space of smooth hypersurfaces is
predicted rationally trivial. The tables below list the predictions with
their weights; weight minus degree counts the exterior generators involved.
"""

from stablecoh import stable_range_report

for d, n in [(19, 1), (5, 2), (13, 2), (9, 3)]:
    report = stable_range_report(d, n)
    print(f"d={d}, n={n}: stable for k <= {report.max_stable_degree}"
          f" (point count N = {report.N})")
    for row in report.rows:
        if row.dim == 0:
            continue
        parts = ", ".join(
            f"Q({tate}) weight {weight} [{factors} generator(s)]"
            for _, tate, weight, factors in row.components
        )
        print(f"  H^{row.degree}: dim {row.dim}  {parts}")
    zero = [row.degree for row in report.rows if row.dim == 0 and row.degree > 0]
    print(f"  zero in stable degrees {zero}")
    if report.band_covers_gl:
        print(f"  band covers the whole table: positive-degree total"
              f" {report.stable_positive_dim} = 2^{n + 1} - 1")
    print()
