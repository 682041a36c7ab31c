"""Finite polygons: the two counting methods and the rank-n frieze pattern.

Vertex labels propagate from a source (0 at the source, 1 at its
neighbours, third vertex of a triangle = sum of the other two); boundary
walks count tuples of distinct triangles.  Both give the same numbers, and
those numbers tile a band of the plane by glide reflection.
"""

from friezes import FriezeView, bci_entry, cc_entry, polygon_from_quiddity, psi
from friezes.quiddity import QuiddityDescriptor

# a heptagon with triangle counts (1, 2, 3, 1, 3, 1, 4) per vertex
p = polygon_from_quiddity([1, 2, 3, 1, 3, 1, 4])
print("faces:", p.faces())

labels = p.cc_labels(1)
print("labels from vertex 1:", [labels[v] for v in range(1, 8)])

for b in (3, 5):
    clockwise = p.boundary_walk(1, b, +1)
    anticlockwise = p.boundary_walk(1, b, -1)
    print(f"walks 1 -> {b}: {clockwise} and {anticlockwise} count "
          f"{p.bci_count(clockwise)} == {p.bci_count(anticlockwise)} "
          f"== label {labels[b]}")

fp = p.frieze_pattern()
print("band column (8) repeats row (1) by glide reflection:",
      [fp.entry(x, 8) for x in range(2, 8)])

# the same counting runs on the infinite strip through a polygon cut
q = QuiddityDescriptor((3,), (4, 2, 1, 6), (2,), core_start=-3)
tri = psi(q, (-6, 6)).triangulation
view = FriezeView(q)
print("\nfrieze entries of the synthesized strip, three ways:")
for (i, j) in [(-2, 1), (0, 4), (-4, -1)]:
    print(f"  t({i}, {j}): recurrence {view.entry(i, j)}, "
          f"label count {cc_entry(tri, i, j)}, tuple count {bci_entry(tri, i, j)}")
