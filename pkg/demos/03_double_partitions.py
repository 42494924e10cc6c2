"""
Counting boxes in planar double partitions
==========================================

Noncrossing partitions, noncrossing matchings and refinement pairs of
them, grouped by the number of boxes in their arc-and-tie diagrams.
"""

# %%
from fusscat.partitions import box_distribution, enumerate_double_partitions, f_table
from fusscat.triangle import build_triangle

for d in enumerate_double_partitions(3):
    print(f"{str(d):<22} ties={d.ties()}  boxes={d.box_count}")

# %%
# Reversed, each box histogram is a row of the matching triangle.
for family, p in (("matchings", 2), ("double-partitions", 3), ("matching-doubles", 4)):
    t = build_triangle(p, 5)
    hist = box_distribution(5, family)
    print(f"{family:<18}", [hist.get(5 - k, 0) for k in range(6)], list(t.rows[5]))

# %%
# The box recurrence, with no diagram allowed to have zero boxes once n > 0.
for row in f_table(6):
    print(row)
