"""Independent bracket oracle for uncolored diagrams at level N = 2.

Works directly on braid words over a completely different code path: the
unoriented Kauffman state sum (per-crossing two-way smoothing, loop count
per state), converted by

    P(braid closure) = (-1)^(#components) * (-A^3)^(-writhe) *
                       sum_states A^(a-b) * delta^(#loops),

with A = q^(-1/2) and delta = -A^2 - A^(-2).  The conversion constant is
pinned inside the oracle itself by first-Reidemeister invariance (asserted
in the tests), not by comparison against the library.
"""

from itertools import product

from moykit.qpoly import LaurentPoly

A = LaurentPoly.q_power(-1)        # A = q^(-1/2), doubled exponent -1
DELTA = LaurentPoly({-2: -1, 2: -1})  # -A^2 - A^(-2) = -q^(-1) - q


def braid_permutation(b, braid):
    perm = list(range(b))
    for g in braid:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def count_components(b, braid):
    perm = braid_permutation(b, braid)
    seen = [False] * b
    comps = 0
    for i in range(b):
        if not seen[i]:
            comps += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return comps


def _loops(b, braid, smoothing):
    """Loop count of one Kauffman state of the braid closure; smoothing[i]
    is 'id' (strands pass) or 'e' (cup-cap) for the i-th crossing."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    segs = list(range(b))
    nxt = b
    init = segs[:]
    for idx, g in enumerate(braid):
        i = abs(g) - 1
        if smoothing[idx] == "id":
            continue
        union(segs[i], segs[i + 1])
        segs[i] = segs[i + 1] = nxt
        nxt += 1
    for i in range(b):
        union(segs[i], init[i])
    return len({find(x) for x in range(nxt)})


def kauffman_rt(b, braid):
    """The oracle value of the closure of ``braid`` on ``b`` strands, all
    components colored 1, at level 2."""
    writhe = sum(1 if g > 0 else -1 for g in braid)
    total = LaurentPoly()
    for state in product(("id", "e"), repeat=len(braid)):
        exp = 0
        for g, s in zip(braid, state):
            # positive generator: A times the identity smoothing
            a_side = (s == "id") if g > 0 else (s == "e")
            exp += 1 if a_side else -1
        term = LaurentPoly.q_power(-exp) * DELTA ** _loops(b, braid, state)
        total = total + term
    frame = LaurentPoly.q_power(3 * writhe, -1 if writhe % 2 else 1)  # (-A^3)^(-w)
    sign = -1 if count_components(b, braid) % 2 else 1
    return sign * frame * total
