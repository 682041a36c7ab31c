"""A walk through infinite friezes and their entry identities.

An infinite frieze is a filling of the discrete plane by integers with zero
diagonal, ones just above it, antisymmetry, positivity above the diagonal,
and every adjacent 2x2 determinant equal to 1.  It is determined by its
quiddity sequence a_i = t(i-1, i+1), here presented as periodic tails around
a finite core.
"""

from friezes import FriezeView, QuiddityDescriptor, entry_from_fg, validate
from friezes.render import render_frieze

# the simplest infinite frieze: constant quiddity 2, entries t(i, j) = j - i
linear = QuiddityDescriptor.constant(2)
view = FriezeView(linear)
print("The linear frieze (quiddity ..., 2, 2, 2, ...):\n")
print(render_frieze(view, (-5, 5), (-5, 5)))

# the same f-row supports other friezes: bump a single quiddity value to 3
bumped = QuiddityDescriptor((2,), (3,), (2,), core_start=-1)
print("Same row (-1), different frieze (quiddity 3 at index -1):\n")
print(render_frieze(FriezeView(bumped), (-5, 5), (-5, 5)))
assert [FriezeView(bumped).entry(-1, j) for j in range(0, 6)] == \
       [view.entry(-1, j) for j in range(0, 6)]

# positivity is an infinite condition; validation certifies a band width
print("depth-64 validation of the bumped quiddity:", validate(bumped).status)

# every entry is a 2x2 determinant in the rows -1 and 0
bv = FriezeView(bumped)
f = {i: bv.entry(-1, i) for i in range(-8, 9)}
g = {i: bv.entry(0, i) for i in range(-8, 9)}
for (p, q) in [(-4, 2), (1, 4), (-6, 7)]:
    det = entry_from_fg(f[p], f[q], g[p], g[q])
    print(f"t({p}, {q}) = f_{p} g_{q} - f_{q} g_{p} = {det} "
          f"(recurrence gives {bv.entry(p, q)})")

# the Ptolemy relation ties any four indices together
i, j, p, q = -3, 1, 2, 5
lhs = bv.entry(i, p) * bv.entry(j, q)
rhs = bv.entry(i, j) * bv.entry(p, q) + bv.entry(i, q) * bv.entry(j, p)
print(f"Ptolemy at ({i}, {j}, {p}, {q}): {lhs} == {rhs}")

# and lets any entry be rebuilt from two rows with an exact division
print("t(2, 5) rebuilt from rows -1 and 0:", bv.reconstruct_entry(-1, 0, 2, 5))
