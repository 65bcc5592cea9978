"""Closed slice-word realizations of the graph-polynomial recursion
relations, each presented with a fixed closure so both sides are honest
closed diagrams, plus parameter sweeps used by the verify command and the
acceptance suite.

A relation instance is (lhs_word, [(coefficient, rhs_word), ...]) and holds
as an exact polynomial identity bracket(lhs) = sum coeff * bracket(rhs).
"""

from .moy import Cap, Cup, Merge, SliceWord, Split
from .qpoly import LaurentPoly, qbinom, qint
from .statesum import bracket_dp


def circle_word(m, turn="ccw"):
    return SliceWord([Cup(m, turn, 0), Cap(m, turn, 0)])


def digon_word(m, n):
    """Bigon with left color m, right color n on an (m+n)-circle."""
    return SliceWord(
        [Cup(m + n, "ccw", 0), Split(m, n, 1), Merge(m, n, 1), Cap(m + n, "ccw", 0)]
    )


def leaf_digon_word(m, n):
    """An m-circle carrying a reversed n-bubble on its right side."""
    return SliceWord(
        [
            Cup(m, "ccw", 0),
            Cup(n, "cw", 2),
            Merge(m, n, 1),
            Split(m, n, 1),
            Cap(n, "cw", 2),
            Cap(m, "ccw", 0),
        ]
    )


def _rainbow(total, inner_events):
    """Close an all-upward tangle by merging its top boundary into one
    strand routed around the right side back to its bottom boundary."""
    return SliceWord(
        [Cup(total, "cw", 0)] + list(inner_events) + [Cap(total, "cw", 0)]
    )


def relation1(N, m, turn="ccw"):
    lhs = circle_word(m, turn)
    return lhs, [(qbinom(N, m), SliceWord())]


def relation2(N, i, j, k):
    """Associativity of splitting: (i, (j, k)) against ((i, j), k)."""
    s = i + j + k
    closure = [Merge(i, j, 0), Merge(i + j, k, 0)]
    lhs = _rainbow(s, [Split(i, j + k, 0), Split(j, k, 1)] + closure)
    rhs = _rainbow(s, [Split(i + j, k, 0), Split(i, j, 0)] + closure)
    return lhs, [(LaurentPoly.const(1), rhs)]


def relation3(N, m, n):
    return digon_word(m, n), [(qbinom(m + n, n), circle_word(m + n))]


def relation4(N, m, n):
    return leaf_digon_word(m, n), [(qbinom(N - m, n), circle_word(m))]


def relation5(N, m):
    """The two-strand relation eliminating an (m+1)-ladder: equals the
    parallel strands plus [N-m-1] times the cross diagram with middle m-1.
    Needs m+1 <= N."""
    if m + 1 > N:
        raise ValueError("needs m+1 <= N")
    lhs = SliceWord(
        [
            Cup(1, "ccw", 0),
            Cup(m, "ccw", 1),
            Cup(m, "ccw", 4),
            Merge(m, 1, 2),
            Split(1, m, 2),
            Cap(m, "cw", 3),
            Merge(1, m, 2),
            Split(m, 1, 2),
            Cap(m, "ccw", 1),
            Cap(1, "ccw", 0),
        ]
    )
    parallel = SliceWord(
        [
            Cup(1, "ccw", 0),
            Cup(m, "ccw", 2),
            Cap(m, "ccw", 2),
            Cap(1, "ccw", 0),
        ]
    )
    cross = SliceWord(
        [
            Cup(1, "ccw", 0),
            Cup(m - 1, "ccw", 1),
            Merge(m - 1, 1, 2),
            Cup(m, "ccw", 3),
            Cap(m, "cw", 2),
            Cup(m, "cw", 2),
            Split(m - 1, 1, 2),
            Cap(m - 1, "ccw", 1),
            Cap(m, "ccw", 2),
            Cap(1, "ccw", 0),
        ]
    )
    return lhs, [(LaurentPoly.const(1), parallel), (qint(N - m - 1), cross)]


def relation6(N, m, n, l):
    """Square with rungs (l+n-1 leftward, n rightward) on columns
    (1, l+n, l | m+l-1, m-n, m): reduces with Gaussian binomial
    coefficients [m-1 ch n] and [m-1 ch n-1]."""
    if m - n < 0 or l < 1 or n < 0:
        raise ValueError("needs n <= m and l >= 1")
    s = m + l
    lhs = _rainbow(
        s,
        [
            Split(1, m + l - 1, 0),
            Split(l + n - 1, m - n, 1),
            Merge(1, l + n - 1, 0),
            Split(l, n, 0),
            Merge(n, m - n, 1),
            Merge(l, m, 0),
        ],
    )
    rhs1 = _rainbow(
        s,
        [
            Split(1, m + l - 1, 0),
            Split(l - 1, m, 1),
            Merge(1, l - 1, 0),
            Merge(l, m, 0),
        ],
    )
    rhs2 = _rainbow(
        s,
        [
            Split(1, m + l - 1, 0),
            Merge(1, m + l - 1, 0),
            Split(l, m, 0),
            Merge(l, m, 0),
        ],
    )
    return lhs, [(qbinom(m - 1, n), rhs1), (qbinom(m - 1, n - 1), rhs2)]


def square_word(n, m, k, l):
    """Rainbow closure of the general square: columns (n, n+k, m) and
    (m+l, m+l-k, n+l), bottom rung k leftward, top rung n+k-m rightward."""
    if min(n, m, k, l, n + k - m, m + l - k) < 0:
        raise ValueError("negative color in square")
    s = n + m + l
    return _rainbow(
        s,
        [
            Split(n, m + l, 0),
            Split(k, m + l - k, 1),
            Merge(n, k, 0),
            Split(m, n + k - m, 0),
            Merge(n + k - m, m + l - k, 1),
            Merge(m, n + l, 0),
        ],
    )


def square_sum_word(n, m, j, l):
    """A term of the square reduction: rungs n+j-m rightward then j
    leftward, columns (n, m-j, m) and (m+l, n+l+j, n+l)."""
    if min(n, m, j, l, n + j - m, m - j) < 0:
        raise ValueError("negative color in square term")
    s = n + m + l
    return _rainbow(
        s,
        [
            Split(n, m + l, 0),
            Split(m - j, n + j - m, 0),
            Merge(n + j - m, m + l, 1),
            Split(j, n + l, 1),
            Merge(m - j, j, 0),
            Merge(m, n + l, 0),
        ],
    )


def relation7(N, n, m, k, l):
    lhs = square_word(n, m, k, l)
    terms = []
    for j in range(max(m - n, 0), m + 1):
        coeff = qbinom(l, k - j)
        if coeff:
            terms.append((coeff, square_sum_word(n, m, j, l)))
    return lhs, terms


def check_instance(N, instance):
    """Evaluate both sides; returns (ok, lhs_value, rhs_value)."""
    lhs, terms = instance
    left = bracket_dp(lhs, N)
    right = LaurentPoly()
    for coeff, word in terms:
        right = right + coeff * bracket_dp(word, N)
    return left == right, left, right


def sweep(N, max_width=None, rel7_max_k=3, rel7_max_l=2):
    """All relation instances with every edge color at most max_width
    (default N).  Returns a list of failure records; empty means the whole
    calculus holds at this N."""
    W = max_width if max_width is not None else N
    failures = []

    def run(tag, instance):
        ok, left, right = check_instance(N, instance)
        if not ok:
            failures.append((tag, str(left), str(right)))

    for m in range(0, W + 1):
        for turn in ("ccw", "cw"):
            run(("rel1", m, turn), relation1(N, m, turn))
    for i in range(0, W + 1):
        for j in range(0, W + 1 - i):
            for k in range(0, W + 1 - i - j):
                run(("rel2", i, j, k), relation2(N, i, j, k))
    for m in range(0, W + 1):
        for n in range(0, W + 1 - m):
            run(("rel3", m, n), relation3(N, m, n))
    for m in range(0, W + 1):
        for n in range(0, W + 1 - m):
            run(("rel4", m, n), relation4(N, m, n))
    for m in range(1, min(W, N - 1) + 1):
        run(("rel5", m), relation5(N, m))
    for m in range(1, W + 1):
        for n in range(0, m + 1):
            for l in range(1, W + 1 - m):
                if max(m + l - 1, l + n, m) <= W:
                    run(("rel6", m, n, l), relation6(N, m, n, l))
    for n in range(0, W + 1):
        for m in range(0, W + 1):
            for l in range(0, min(rel7_max_l, W) + 1):
                for k in range(0, rel7_max_k + 1):
                    if n + k - m < 0 or m + l - k < 0:
                        continue
                    if max(n + k, m + l, n + m + l) > W:
                        continue
                    run(("rel7", n, m, k, l), relation7(N, n, m, k, l))
    return failures
