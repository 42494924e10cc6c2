"""
Lattice paths behind the closed form
====================================

Cells of ``T^p`` count east/north paths from the origin to
``((p-1)n - 1, k)`` that never cross above ``x = (p-1)y``.
"""

# %%
from fusscat.lattice import CONVENTIONS, PathCountQuery, calibrate, count_constrained_paths, count_paths
from fusscat.triangle import triangle_closed_form_cell

# The line constraint can be read four ways. Only one reproduces the formula.
print(calibrate(triangle_closed_form_cell))

# %%
q = PathCountQuery(p=5, n=2, k=1)
print("target", q.target)
for convention in CONVENTIONS:
    print(f"{convention:>12}: {count_paths(q, convention)}")

# %%
# The dynamic program agrees with the formula far beyond the calibration grid.
for p in (2, 3, 6):
    row = [count_constrained_paths(PathCountQuery(p, 9, k)) for k in range(10)]
    print(p, row == [triangle_closed_form_cell(p, 9, k) for k in range(10)], row)
