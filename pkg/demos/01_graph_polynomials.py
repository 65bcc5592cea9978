"""Evaluating closed colored flow graphs.

A diagram is entered as a sweepline word: cups, caps, splits and merges
read bottom to top.  The value of a closed diagram is an integer Laurent
polynomial in q, computed either by brute-force enumeration of all label
states or by the frontier dynamic program; the two always agree.
"""

from moykit import SliceWord, Cup, Cap, Split, Merge
from moykit import bracket_dp, bracket_enumerate, circle, qbinom
from moykit.relations import digon_word, relation5, check_instance

N = 3

print("== circles ==")
for m in range(N + 1):
    value = bracket_dp(circle(m), N)
    print("m-colored circle, m=%d:  %s   (the Gaussian binomial [%d ch %d])"
          % (m, value, N, m))

print()
print("== a bigon collapses to a multiple of the plain strand ==")
w = digon_word(1, 2)
print("bigon(1,2) on a 3-circle:", bracket_dp(w, N))
print("[3 ch 1] * [3 ch 3]     :", qbinom(3, 1) * qbinom(3, 3))

print()
print("== the two engines agree ==")
word = SliceWord([
    Cup(2, "ccw", 0),
    Split(1, 1, 1),
    Merge(1, 1, 1),
    Cap(2, "ccw", 0),
])
print("dp       :", bracket_dp(word, N))
print("enumerate:", bracket_enumerate(word, N))

print()
print("== a recursion instance with a nontrivial coefficient ==")
lhs, terms = relation5(N, 1)
ok, left, right = check_instance(N, (lhs, terms))
print("ladder value :", left)
print("reduced form :", right)
print("identical    :", ok)
