"""End to end: certify every distance both code families cover.

Family 1 at q=4, k=6 yields thirteen length-optimal codes from
[3158, 6, 2368]_4 down to [3143, 6, 2356]_4; family 2 at q=5, k=6 yields
twenty-one, from [12032, 6, 9625]_5 down to [12008, 6, 9605]_5.  Note the
gaps: no length 3154, 3149, 3144 rows exist because the bound jumps by 2
when the distance crosses a multiple of q.

Every row below was re-verified from scratch: the distance is recomputed
over all hyperplanes, and the length compared with the ceiling-sum bound.
"""

import time

from griesmer import griesmer_bound, reproduce_table

for theorem, q, k in ((1, 4, 6), (2, 5, 6)):
    t0 = time.time()
    rows = reproduce_table(theorem, q, k)
    took = time.time() - t0
    print(f"family {theorem} at q={q}, k={k}: {len(rows)} certified codes "
          f"({took:.1f}s)")
    print(f"  {'n':>6} {'d':>6}  lines  points")
    for r in rows:
        s = sum(1 for step in r.provenance if step["op"] == "puncture_line")
        j = sum(1 for step in r.provenance if step["op"] == "puncture_point")
        assert r.is_griesmer and r.n == griesmer_bound(q, k, r.d)
        print(f"  {r.n:>6} {r.d:>6}  {s:>5}  {j:>6}")
    print()
