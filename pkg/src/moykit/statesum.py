"""The colored sl(N) graph polynomial of a closed crossing-free slice word,
by exhaustive state enumeration (the oracle) and by a sweepline dynamic
program over label distributions (the fast path).

A state assigns to every edge of color c a c-element subset of
N_set = {-N+1, -N+3, ..., N-1}, compatibly with unions at vertices.  Each
vertex contributes q^(c1*c2/2 - pi(A1, A2)) where pi counts decreasing
pairs, and each state adds q^(rotation), the rotation read off extremum by
extremum.  Exponents are half-integers along the way; the total of a closed
word is always integral (asserted).
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .moy import Cap, Cross, Cup, Merge, Split, UP, is_closed, snapshots, trace_graph, validate
from .qpoly import LaurentPoly


def label_set(N):
    """The ground set {-N+1, -N+3, ..., N-1}."""
    return tuple(range(-N + 1, N, 2))


def labels_of_size(N, c):
    """All c-element labels, as sorted tuples."""
    return [tuple(sorted(s)) for s in combinations(label_set(N), c)]


def pi(A, B):
    """#{(a, b) in A x B with a > b}."""
    return sum(1 for a in A for b in B if a > b)


def vertex_weight(c1, c2, A, B):
    """q^(c1*c2/2 - pi(A, B)); the labels must be disjoint."""
    if len(A) != c1 or len(B) != c2:
        raise ValueError("label sizes must match the colors")
    if set(A) & set(B):
        raise ValueError("overlapping labels")
    return LaurentPoly.q_power(c1 * c2 - 2 * pi(A, B))


def _vertex_exp(c1, c2, A, B):
    # doubled exponent of the vertex weight
    return c1 * c2 - 2 * pi(A, B)


def _check_evaluable(word):
    diags = validate(word)
    if diags:
        raise ValueError("invalid word: %s" % (diags[0],))
    if not is_closed(word):
        raise ValueError("evaluation needs a closed word")
    if any(isinstance(ev, Cross) for ev in word.events):
        raise ValueError("evaluation needs a crossing-free word (resolve first)")


def enumerate_states(word, N):
    """Yield (labels_per_edge, doubled_exponent) over all states.

    Backtracks over edges; at every vertex the parent label must be the
    disjoint union of the branch labels.
    """
    _check_evaluable(word)
    g = trace_graph(word)
    ne = len(g.edges)
    if any(c > N for c in g.edges):
        return
    choices = {c: labels_of_size(N, c) for c in set(g.edges)}

    # constraints per vertex: (e1, e2, parent)
    cons = [(v[1][0], v[1][1], v[2]) for v in g.vertices]
    touching = [[] for _ in range(ne)]
    for ci, (a, b, p) in enumerate(cons):
        for e in (a, b, p):
            touching[e].append(ci)

    # choose edges in an order that hits constraints early
    order = []
    seen = set()
    for a, b, p in cons:
        for e in (p, a, b):
            if e not in seen:
                seen.add(e)
                order.append(e)
    for e in range(ne):
        if e not in seen:
            order.append(e)

    assignment = [None] * ne

    def consistent(ci):
        a, b, p = cons[ci]
        A, B, P = assignment[a], assignment[b], assignment[p]
        if A is not None and B is not None:
            if set(A) & set(B):
                return False
            if P is not None and tuple(sorted(A + B)) != P:
                return False
        elif P is not None:
            part = A if A is not None else B
            if part is not None and not set(part) <= set(P):
                return False
        return True

    def weight():
        doubled = 0
        for a, b, p in cons:
            doubled += _vertex_exp(
                len(assignment[a]), len(assignment[b]), assignment[a], assignment[b]
            )
        for e, sign in g.extrema:
            doubled += sign * sum(assignment[e])
        return doubled

    def rec(k):
        if k == ne:
            yield tuple(assignment), weight()
            return
        e = order[k]
        for lab in choices[g.edges[e]]:
            assignment[e] = lab
            if all(consistent(ci) for ci in touching[e]):
                yield from rec(k + 1)
        assignment[e] = None

    yield from rec(0)


def bracket_enumerate(word, N, threads=1):
    """Graph polynomial by exhaustive enumeration of states."""
    _check_evaluable(word)
    states = list(enumerate_states(word, N))

    def tally(chunk):
        terms = {}
        for _, doubled in chunk:
            terms[doubled] = terms.get(doubled, 0) + 1
        return terms

    if threads > 1 and len(states) > 1024:
        size = (len(states) + threads - 1) // threads
        chunks = [states[i: i + size] for i in range(0, len(states), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(tally, chunks))
    else:
        partials = [tally(states)]
    total = {}
    for part in partials:
        for e, c in part.items():
            total[e] = total.get(e, 0) + c
    result = LaurentPoly(total)
    assert result.is_integral(), "closed bracket must be integral"
    return result


def bracket_dp(word, N):
    """Graph polynomial by folding the events over a frontier distribution:
    a map from label tuples (one per live strand) to accumulated weight.
    Merging equal keys after every event is what keeps this fast."""
    _check_evaluable(word)
    state = snapshots(word)
    frontier = {(): {0: 1}}  # key -> {doubled exponent: multiplicity}

    def add(dst, key, terms, extra):
        slot = dst.setdefault(key, {})
        for e, c in terms.items():
            k = e + extra
            v = slot.get(k, 0) + c
            if v:
                slot[k] = v
            elif k in slot:
                del slot[k]

    for idx, ev in enumerate(word.events):
        strands = state[idx]
        nxt = {}
        if isinstance(ev, Cup):
            if ev.color > N:
                return LaurentPoly()
            opts = labels_of_size(N, ev.color)
            sign = 1 if ev.turn == "ccw" else -1
            for key, terms in frontier.items():
                for A in opts:
                    nk = key[: ev.pos] + (A, A) + key[ev.pos:]
                    add(nxt, nk, terms, sign * sum(A))
        elif isinstance(ev, Cap):
            sign = 1 if ev.turn == "ccw" else -1
            for key, terms in frontier.items():
                A, B = key[ev.pos], key[ev.pos + 1]
                if A != B:
                    continue
                nk = key[: ev.pos] + key[ev.pos + 2:]
                add(nxt, nk, terms, sign * sum(A))
        elif isinstance(ev, Split):
            up = strands[ev.pos].direction == UP
            for key, terms in frontier.items():
                A = key[ev.pos]
                for A1 in combinations(A, ev.m):
                    A2 = tuple(x for x in A if x not in A1)
                    e1, e2 = (A1, A2) if up else (A2, A1)
                    w = _vertex_exp(len(e1), len(e2), e1, e2)
                    nk = key[: ev.pos] + (A1, A2) + key[ev.pos + 1:]
                    add(nxt, nk, terms, w)
        elif isinstance(ev, Merge):
            up = strands[ev.pos].direction == UP
            for key, terms in frontier.items():
                A1, A2 = key[ev.pos], key[ev.pos + 1]
                if set(A1) & set(A2):
                    continue
                e1, e2 = (A1, A2) if up else (A2, A1)
                w = _vertex_exp(len(e1), len(e2), e1, e2)
                nk = key[: ev.pos] + (tuple(sorted(A1 + A2)),) + key[ev.pos + 2:]
                add(nxt, nk, terms, w)
        else:
            raise AssertionError("unreachable")
        frontier = nxt
        if not frontier:
            return LaurentPoly()
    result = LaurentPoly(frontier.get((), {}))
    assert result.is_integral(), "closed bracket must be integral"
    return result
