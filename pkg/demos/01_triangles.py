"""
Building Fuss-Catalan triangles
===============================

Three ways to get the same numbers, and the identities they satisfy.
"""

# %%
# The convolution recurrence builds each row from the one above it.
from fusscat import build_triangle, fuss_catalan, row_sum
from fusscat.formats import render_table

t5 = build_triangle(5, 10)
print(render_table(t5))

# %%
# The alternating recurrence reads one cell above and p - 1 cells to the
# left. It has mixed signs but never produces a negative cell.
alt = build_triangle(5, 10, "alternating")
closed = build_triangle(5, 10, "closed-form")
print("alternating == convolution:", alt.same_cells(t5))
print("closed form == convolution:", closed.same_cells(t5))

# %%
# Row sums are Fuss-Catalan numbers binomial(pn+1, n) / (pn+1).
for p in (1, 2, 3, 4):
    t = build_triangle(p, 8)
    print(p, [row_sum(t, n) for n in range(9)], [fuss_catalan(p, n) for n in range(9)] == [row_sum(t, n) for n in range(9)])

# %%
# p = 2 is the Catalan triangle; p = 1 degenerates to a column of ones.
print(build_triangle(2, 5).rows)
print(build_triangle(1, 5).rows)
