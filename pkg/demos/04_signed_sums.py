"""
Alternating row sums
====================

Summing row n with sign (-1)**(n+k+1) gives known sequences for small p:
the Fine numbers at p = 2.
"""

# %%
from fusscat.sequences import check_signed_sums, load_reference_data
from fusscat.triangle import build_triangle, signed_row_sum

ref = load_reference_data()
for p in range(1, 11):
    t = build_triangle(p, 20)
    print(f"p={p:>2}", [signed_row_sum(t, n) for n in range(1, 7)], "...", check_signed_sums(p))

# %%
# Starting at n = 0 would put -1 in front of every list.
print([signed_row_sum(build_triangle(p, 0), 0) for p in range(1, 11)])
print(ref.signed_sums[2].name, ref.signed_sums[2].values[:10])
