"""
From a raw contact log to statistics and a closure-rate curve
=============================================================

A contact log has one ``t u v`` record per line.  Records are binned into
hourly steps, and the table of parameters is emitted as CSV.  The same steps
are available from the command line:

    temporal-closure stats log.txt --bin 3600
    temporal-closure closure-rate log.txt --bin 3600 --d1 1
"""

import io
import random
import sys

from temporal_closure import ClosureParams, closure_rate_curve, parse_contacts
from temporal_closure.fileio import write_curve_csv
from temporal_closure.stats import compute_stats, write_stats_csv

# a synthetic day of contacts in two groups that occasionally mix
rng = random.Random(0)
people = [f"id{i}" for i in range(16)]
records = []
for hour in range(24):
    for _ in range(12):
        a = rng.choice(people)
        same_group = [q for q in people if q != a and (int(q[2:]) < 8) == (int(a[2:]) < 8)]
        b = rng.choice(same_group if rng.random() < 0.85 else people)
        if a != b:
            records.append(f"{1_600_000_000 + hour * 3600 + rng.randint(0, 3599)} {a} {b}")
log = "\n".join(records)

g, labels = parse_contacts(io.StringIO(log), bin_width=3600)
print(f"{g.n} people, {g.num_edges} pairs in contact, {g.lifetime} hourly steps")

row = compute_stats(g, "synthetic", binning="bin=3600s anchor=t_min",
                    configs=[ClosureParams(0, 0, 0), ClosureParams(2, 1, 2)], pairwise_d1=[0, 1])
write_stats_csv([row], sys.stdout)

# fraction of pairs with at least x common neighbours that meet around that window
print()
write_curve_csv(closure_rate_curve(g, ClosureParams(1, 1, 1)), sys.stdout)
