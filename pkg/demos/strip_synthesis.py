"""Realizing an infinite frieze as a triangulation of the infinite strip.

The synthesis consumes the quiddity sequence in two phases: peripheral arcs
swallow the 1s pass by pass, then upper marked points and bridging fountains
absorb whatever excess remains.  Which phases terminate determines the shape
of the upper marked point set: empty, finite, a half line, or all integers.
"""

from pathlib import Path

from friezes import QuiddityDescriptor, psi
from friezes.render import render_strip_svg
from friezes.serialize import m2_to_str

# left tail of 3s, core (4, 2, 1, 6) at indices -3..0, right tail of 2s
q = QuiddityDescriptor((3,), (4, 2, 1, 6), (2,), core_start=-3)
out = psi(q, (-8, 8))

print("phase A:", out.step_a_verdict, "after", out.step_a_passes, "passes")
for rec in out.trace:
    print(f"  pass {rec.index}: removed 1s at {list(rec.ones)}, "
          f"peripheral arcs {list(rec.arcs)}")
    print(f"    residual on [-5, 2]: {rec.residual_after.values(-5, 2)}")

print("upper boundary class:", m2_to_str(out.m2_class))
tri = out.triangulation
print("triangle counts on the window (must equal the quiddity):")
print("  ", list(tri.quiddity_of().values()))
print("special upper points:", tri.special_upper_points())
print("window admissible:", tri.is_admissible_window())

star = tri.lower_star(0)
print("arcs at the lower point 0:")
for arc in star:
    print("  ", arc)

svg_path = Path(__file__).with_name("strip_synthesis.svg")
svg_path.write_text(render_strip_svg(tri))
print("wrote", svg_path.name)

# a quiddity whose frieze has enough ones synthesizes with no upper points
zigzag = QuiddityDescriptor((5, 1), (2, 3), (1, 5), core_start=0)
z = psi(zigzag, (-5, 5))
print("\nzigzag quiddity:", zigzag.values(-4, 4))
print("phase A:", z.step_a_verdict, "->", m2_to_str(z.m2_class),
      "(a triangulation of the integer line alone)")

# on a bi-infinite upper boundary the realization is free up to a Dehn twist
three = psi(QuiddityDescriptor.constant(3), (-4, 4))
other = psi(QuiddityDescriptor.constant(3), (-4, 4), anchor=1)
shift = three.triangulation.dehn_equivalent(other.triangulation)
print("\nconstant-3 runs anchored at 0 and 1 differ by the twist power", shift)
