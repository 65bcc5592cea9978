"""Grading bookkeeping of the crossing chain complex.

A positive crossing with colors (n, m) becomes a complex whose k-th term
is the square resolution in homological degree m-k with quantum shift
-(m-k); equal-colored crossings get one extra normalization.  Taking
Euler characteristics collapses the complex back to the link invariant,
and every resolution's rotation parity matches the total color.
"""

from moykit import braid_closure, complex_euler, parity_check, resolve_crossing, rt_poly, total_color
from moykit.invariant import resolutions_iter
from moykit.moy import colored_rotation

print("== resolving one colored crossing ==")
for k, coeff, _ in resolve_crossing(+1, 2, 1, 3):
    print("k=%d with coefficient %s" % (k, coeff))

print()
print("== Euler characteristic equals the invariant ==")
for name, w in [
    ("kinked unknot", braid_closure([1, 1], [1])),
    ("trefoil", braid_closure([1, 1], [1, 1, 1])),
    ("(1,2)-Hopf", braid_closure([1, 2], [1, 1])),
]:
    for N in (2, 3):
        e = complex_euler(w, N)
        r = rt_poly(w, N)
        print("%-14s N=%d: %s  == rt: %s" % (name, N, e, e == r))

print()
print("== the same number out of actual homology ==")
kink = braid_closure([1, 1], [1])
print("homology-sourced Euler characteristic:",
      complex_euler(kink, 2, gdim_source="mf"))

print()
print("== rotation parity across all resolutions ==")
tref = braid_closure([1, 1], [1, 1, 1])
print("total color:", total_color(tref))
rotations = sorted({colored_rotation(res) for _, res, _ in resolutions_iter(tref, 2)})
print("resolution rotation numbers:", rotations)
print("parity check:", parity_check(tref, 2))
