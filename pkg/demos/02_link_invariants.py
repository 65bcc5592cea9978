"""Colored link invariants from crossing resolutions.

Every crossing expands into a sum of square diagrams with signed q-power
coefficients; the bracket of the diagram is the multilinear expansion.
Multiplying by one shift factor per equal-colored crossing gives the
re-normalized invariant, unchanged by all three Reidemeister moves.
At N = 2 with all colors 1 this is the unreduced Jones polynomial.
"""

from moykit import braid_closure, bracket_link, rt_poly, shift_factor, qbinom

print("== a positive kink is invisible after normalization ==")
kink = braid_closure([1, 1], [1])
for N in (2, 3):
    raw = bracket_link(kink, N)
    fixed = rt_poly(kink, N)
    print("N=%d: bracket %s,  shift %s,  invariant %s"
          % (N, raw, shift_factor(+1, 1, 1, N), fixed))
print("plain unknot:", qbinom(2, 1), "/", qbinom(3, 1))

print()
print("== chirality ==")
right = braid_closure([1, 1], [1, 1, 1])
left = braid_closure([1, 1], [-1, -1, -1])
for N in (2, 3):
    vr = rt_poly(right, N)
    vl = rt_poly(left, N)
    print("N=%d right trefoil: %s" % (N, vr))
    print("N=%d left  trefoil: %s" % (N, vl))
    print("mirror = bar:", vl == vr.bar())

print()
print("== the figure-eight knot is amphichiral ==")
fig8 = braid_closure([1, 1, 1], [1, -2, 1, -2])
v = rt_poly(fig8, 2)
print("N=2:", v)
print("self-conjugate:", v == v.bar())

print()
print("== colored cabling of the Hopf link ==")
for a, b in [(1, 1), (1, 2), (2, 2)]:
    hopf = braid_closure([a, b], [1, 1])
    print("colors (%d,%d), N=3: %s" % (a, b, rt_poly(hopf, 3)))
