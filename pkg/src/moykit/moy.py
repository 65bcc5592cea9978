"""Sweepline (Morse) presentations of embedded trivalent flow graphs and
colored link diagrams: slice words of cups, caps, splits, merges and
crossings, with a validator, a text format, and rotation-number machinery.

Conventions (pinned by the calculus identities in the test suite):
  * a strand records the color and the direction (+1 up / -1 down) in which
    its edge passes the sweepline;
  * Cup/Cap turn 'ccw' means the strand pair reads (down, up) left to right,
    'cw' means (up, down); a ccw extremum contributes +color/2 to the
    rotation number, a cw one -color/2, so a ccw circle totals +1;
  * Split(m, n) consumes one strand of color m+n and produces colors (m, n)
    left to right with the same direction; Merge is the reverse;
  * at an upward vertex the left branch is the first weight argument, at a
    downward vertex the two branches swap roles (the picture is rotated).
"""

from typing import NamedTuple

UP = 1
DOWN = -1


class Strand(NamedTuple):
    color: int
    direction: int  # UP or DOWN


class Cup(NamedTuple):
    color: int
    turn: str  # 'ccw' | 'cw'
    pos: int


class Cap(NamedTuple):
    color: int
    turn: str
    pos: int


class Split(NamedTuple):
    m: int
    n: int
    pos: int


class Merge(NamedTuple):
    m: int
    n: int
    pos: int


class Cross(NamedTuple):
    sign: int  # +1 | -1
    pos: int


class SliceWord:
    """A sweepline word: initial boundary strands plus an event sequence."""

    def __init__(self, events=(), initial=(), n_hint=None):
        self.initial = tuple(initial)
        self.events = tuple(events)
        self.n_hint = n_hint

    def __eq__(self, other):
        return (
            isinstance(other, SliceWord)
            and self.initial == other.initial
            and self.events == other.events
        )

    def __repr__(self):
        return "SliceWord(%r, initial=%r)" % (list(self.events), list(self.initial))


class Diagnostic(NamedTuple):
    index: int  # event index, -1 for word-level issues
    message: str


def _apply(strands, ev):
    """Apply one event to a strand tuple; raise ValueError when illegal."""
    n = len(strands)
    if isinstance(ev, Cup):
        if not (0 <= ev.pos <= n):
            raise ValueError("cup position out of range")
        if ev.color < 0:
            raise ValueError("negative color")
        if ev.turn == "ccw":
            pair = (Strand(ev.color, DOWN), Strand(ev.color, UP))
        elif ev.turn == "cw":
            pair = (Strand(ev.color, UP), Strand(ev.color, DOWN))
        else:
            raise ValueError("unknown turn %r" % (ev.turn,))
        return strands[: ev.pos] + pair + strands[ev.pos:]
    if isinstance(ev, Cap):
        if not (0 <= ev.pos <= n - 2):
            raise ValueError("cap position out of range")
        a, b = strands[ev.pos], strands[ev.pos + 1]
        if a.color != ev.color or b.color != ev.color:
            raise ValueError("cap color mismatch")
        want = (DOWN, UP) if ev.turn == "ccw" else (UP, DOWN) if ev.turn == "cw" else None
        if want is None:
            raise ValueError("unknown turn %r" % (ev.turn,))
        if (a.direction, b.direction) != want:
            raise ValueError("cap direction mismatch")
        return strands[: ev.pos] + strands[ev.pos + 2:]
    if isinstance(ev, Split):
        if not (0 <= ev.pos <= n - 1):
            raise ValueError("split position out of range")
        s = strands[ev.pos]
        if ev.m < 0 or ev.n < 0:
            raise ValueError("negative color")
        if s.color != ev.m + ev.n:
            raise ValueError(
                "color mismatch: strand %d cannot split into %d+%d"
                % (s.color, ev.m, ev.n)
            )
        out = (Strand(ev.m, s.direction), Strand(ev.n, s.direction))
        return strands[: ev.pos] + out + strands[ev.pos + 1:]
    if isinstance(ev, Merge):
        if not (0 <= ev.pos <= n - 2):
            raise ValueError("merge position out of range")
        a, b = strands[ev.pos], strands[ev.pos + 1]
        if (a.color, b.color) != (ev.m, ev.n):
            raise ValueError(
                "color mismatch: strands (%d,%d), event (%d,%d)"
                % (a.color, b.color, ev.m, ev.n)
            )
        if a.direction != b.direction:
            raise ValueError("merge needs strands of one direction")
        return (
            strands[: ev.pos]
            + (Strand(ev.m + ev.n, a.direction),)
            + strands[ev.pos + 2:]
        )
    if isinstance(ev, Cross):
        if not (0 <= ev.pos <= n - 2):
            raise ValueError("crossing position out of range")
        if ev.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        a, b = strands[ev.pos], strands[ev.pos + 1]
        return strands[: ev.pos] + (b, a) + strands[ev.pos + 2:]
    raise ValueError("unknown event %r" % (ev,))


def snapshots(word):
    """Strand tuples before each event and after the last; raises on an
    invalid word (use validate for diagnostics instead of exceptions)."""
    cur = word.initial
    out = [cur]
    for ev in word.events:
        cur = _apply(cur, ev)
        out.append(cur)
    return out


def validate(word):
    """Left fold over the events; returns a list of diagnostics, empty when
    every event type-checks against the running strand list."""
    diags = []
    cur = word.initial
    for s in cur:
        if s.color < 0:
            diags.append(Diagnostic(-1, "negative boundary color"))
            return diags
    for i, ev in enumerate(word.events):
        try:
            cur = _apply(cur, ev)
        except ValueError as exc:
            diags.append(Diagnostic(i, str(exc)))
            return diags
    return diags


def is_closed(word):
    return not word.initial and not snapshots(word)[-1]


def has_crossings(word):
    return any(isinstance(ev, Cross) for ev in word.events)


def colored_rotation(word):
    """Sum over extrema of +-color/2 (+ for ccw); equals the total rotation
    number of the circles obtained by splitting every edge into parallel
    1-colored strands.  Requires a closed, crossing-free word."""
    if not is_closed(word):
        raise ValueError("colored rotation needs a closed word")
    if has_crossings(word):
        raise ValueError("colored rotation needs a crossing-free word")
    doubled = 0
    for ev in word.events:
        if isinstance(ev, (Cup, Cap)):
            doubled += ev.color if ev.turn == "ccw" else -ev.color
    assert doubled % 2 == 0, "rotation contributions must pair up"
    return doubled // 2


def _segment_flow(word):
    """Walk the word assigning an id to every strand segment.

    Returns (n_segments, seg_color, links, events_out) where links are
    (a, b) pairs of segments belonging to one edge (cup, cap and crossing
    continuations) and events_out records per event the consumed and
    produced segment ids at that level.
    """
    seg_color = []
    links = []
    events_out = []

    def new_seg(color):
        seg_color.append(color)
        return len(seg_color) - 1

    cur = [new_seg(s.color) for s in word.initial]
    dirs = list(word.initial)
    state = snapshots(word)
    for idx, ev in enumerate(word.events):
        strands = state[idx]
        if isinstance(ev, Cup):
            a, b = new_seg(ev.color), new_seg(ev.color)
            links.append((a, b))
            cur[ev.pos: ev.pos] = [a, b]
            events_out.append(("cup", ev, (), (a, b)))
        elif isinstance(ev, Cap):
            a, b = cur[ev.pos], cur[ev.pos + 1]
            links.append((a, b))
            del cur[ev.pos: ev.pos + 2]
            events_out.append(("cap", ev, (a, b), ()))
        elif isinstance(ev, Split):
            s = cur[ev.pos]
            a, b = new_seg(ev.m), new_seg(ev.n)
            cur[ev.pos: ev.pos + 1] = [a, b]
            d = strands[ev.pos].direction
            events_out.append(("split", ev, (s,), (a, b), d))
        elif isinstance(ev, Merge):
            a, b = cur[ev.pos], cur[ev.pos + 1]
            s = new_seg(ev.m + ev.n)
            cur[ev.pos: ev.pos + 2] = [s]
            d = strands[ev.pos].direction
            events_out.append(("merge", ev, (a, b), (s,), d))
        elif isinstance(ev, Cross):
            a, b = cur[ev.pos], cur[ev.pos + 1]
            strands_ab = strands[ev.pos: ev.pos + 2]
            a2 = new_seg(strands_ab[1].color)
            b2 = new_seg(strands_ab[0].color)
            # strand at pos continues to pos+1 above and vice versa
            links.append((a, b2))
            links.append((b, a2))
            cur[ev.pos: ev.pos + 2] = [a2, b2]
            events_out.append(("cross", ev, (a, b), (a2, b2)))
        else:
            raise ValueError("unknown event %r" % (ev,))
    return len(seg_color), seg_color, links, events_out, dirs


class GraphData(NamedTuple):
    """Vertex/edge structure of a closed word.

    edges: list of colors, one per edge.
    vertices: (kind, branches, parent, entering, leaving) with branches the
        weight-ordered pair (e1, e2) of edge ids on the two-branch side and
        entering/leaving edge-id tuples for the factorization layer.
    extrema: (edge, +-1) per cup/cap.
    seg_edge: segment id -> edge id.
    """

    edges: list
    vertices: list
    extrema: list
    seg_edge: list


def trace_graph(word):
    """Edge/vertex structure of a validated closed word (crossings allowed
    only for component tracing, not for vertices/extrema)."""
    nseg, seg_color, links, events_out, _ = _segment_flow(word)
    parent = list(range(nseg))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a, b in links:
        union(a, b)
    roots = sorted({find(i) for i in range(nseg)})
    edge_of_root = {r: i for i, r in enumerate(roots)}
    seg_edge = [edge_of_root[find(i)] for i in range(nseg)]
    edges = [None] * len(roots)
    for s in range(nseg):
        e = seg_edge[s]
        if edges[e] is None:
            edges[e] = seg_color[s]
        elif edges[e] != seg_color[s]:
            raise ValueError("inconsistent edge colors (crossing mid-edge?)")

    vertices = []
    extrema = []
    for rec in events_out:
        kind, ev = rec[0], rec[1]
        if kind in ("cup", "cap"):
            seg = rec[2][0] if kind == "cap" else rec[3][0]
            extrema.append((seg_edge[seg], 1 if ev.turn == "ccw" else -1))
        elif kind == "split":
            (s,), (a, b), d = rec[2], rec[3], rec[4]
            ea, eb, es = seg_edge[a], seg_edge[b], seg_edge[s]
            branches = (ea, eb) if d == UP else (eb, ea)
            if d == UP:
                vertices.append(("split", branches, es, (es,), (ea, eb)))
            else:
                # downward split is a graph merge: the two strands above
                # flow into the vertex, the one below leaves it
                vertices.append(("merge", branches, es, (ea, eb), (es,)))
        elif kind == "merge":
            (a, b), (s,), d = rec[2], rec[3], rec[4]
            ea, eb, es = seg_edge[a], seg_edge[b], seg_edge[s]
            branches = (ea, eb) if d == UP else (eb, ea)
            if d == UP:
                vertices.append(("merge", branches, es, (ea, eb), (es,)))
            else:
                vertices.append(("split", branches, es, (es,), (ea, eb)))
    return GraphData(edges, vertices, extrema, seg_edge)


def total_color(word):
    """Sum of the colors of the link components (traced through crossings);
    the word must contain no splits or merges."""
    if any(isinstance(ev, (Split, Merge)) for ev in word.events):
        raise ValueError("total color is defined for link diagrams only")
    g = trace_graph(word)
    return sum(g.edges)


def reverse_mirror(word):
    """Left-right reflection of the word: positions mirrored, cup/cap turns
    flipped, crossing signs kept.  On crossingless closed words this negates
    the rotation number and conjugates the graph polynomial (q -> q^-1)."""
    state = snapshots(word)
    out = []
    for idx, ev in enumerate(word.events):
        n = len(state[idx])
        flip = {"ccw": "cw", "cw": "ccw"}
        if isinstance(ev, Cup):
            out.append(Cup(ev.color, flip[ev.turn], n - ev.pos))
        elif isinstance(ev, Cap):
            out.append(Cap(ev.color, flip[ev.turn], n - 2 - ev.pos))
        elif isinstance(ev, Split):
            out.append(Split(ev.n, ev.m, n - 1 - ev.pos))
        elif isinstance(ev, Merge):
            out.append(Merge(ev.n, ev.m, n - 2 - ev.pos))
        elif isinstance(ev, Cross):
            out.append(Cross(ev.sign, n - 2 - ev.pos))
    initial = tuple(reversed(word.initial))
    return SliceWord(out, initial, word.n_hint)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_DIR_TOKEN = {UP: "^", DOWN: "v"}
_DIR_FROM = {"^": UP, "v": DOWN}


class ParseError(ValueError):
    def __init__(self, line, column, message):
        super().__init__("line %d, col %d: %s" % (line, column, message))
        self.line = line
        self.column = column


def parse(text):
    """Parse the slice-word text format.

    Grammar, one item per line ('#' starts a comment):
        N <int>
        boundary: <color><^|v> ...
        cup <c> <ccw|cw> @<i>
        cap <c> <ccw|cw> @<i>
        split <m> <n> @<i>
        merge <m> <n> @<i>
        x+ @<i>
        x- @<i>
    """
    events = []
    initial = []
    n_hint = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()

        def bad(msg, col=1):
            raise ParseError(lineno, col, msg)

        def intat(i, what):
            try:
                return int(toks[i])
            except (IndexError, ValueError):
                bad("expected integer %s" % what, raw.find(toks[i]) + 1 if i < len(toks) else len(raw))

        def posat(i):
            try:
                tok = toks[i]
            except IndexError:
                bad("expected @<position>")
            if not tok.startswith("@"):
                bad("expected @<position>, got %r" % tok, raw.find(tok) + 1)
            try:
                return int(tok[1:])
            except ValueError:
                bad("bad position %r" % tok, raw.find(tok) + 1)

        head = toks[0]
        if head == "N":
            n_hint = intat(1, "after N")
        elif head == "boundary:":
            for tok in toks[1:]:
                if len(tok) < 2 or tok[-1] not in _DIR_FROM:
                    bad("bad boundary strand %r" % tok, raw.find(tok) + 1)
                try:
                    c = int(tok[:-1])
                except ValueError:
                    bad("bad boundary color %r" % tok, raw.find(tok) + 1)
                initial.append(Strand(c, _DIR_FROM[tok[-1]]))
        elif head in ("cup", "cap"):
            c = intat(1, "color")
            turn = toks[2] if len(toks) > 2 else ""
            if turn not in ("ccw", "cw"):
                bad("expected ccw or cw")
            pos = posat(3)
            events.append((Cup if head == "cup" else Cap)(c, turn, pos))
        elif head in ("split", "merge"):
            m = intat(1, "color")
            n = intat(2, "color")
            pos = posat(3)
            events.append((Split if head == "split" else Merge)(m, n, pos))
        elif head in ("x+", "x-"):
            pos = posat(1)
            events.append(Cross(1 if head == "x+" else -1, pos))
        else:
            bad("unknown event token %r" % head)
    return SliceWord(events, initial, n_hint)


def serialize(word):
    lines = []
    if word.n_hint is not None:
        lines.append("N %d" % word.n_hint)
    if word.initial:
        lines.append(
            "boundary: "
            + " ".join("%d%s" % (s.color, _DIR_TOKEN[s.direction]) for s in word.initial)
        )
    for ev in word.events:
        if isinstance(ev, Cup):
            lines.append("cup %d %s @%d" % (ev.color, ev.turn, ev.pos))
        elif isinstance(ev, Cap):
            lines.append("cap %d %s @%d" % (ev.color, ev.turn, ev.pos))
        elif isinstance(ev, Split):
            lines.append("split %d %d @%d" % (ev.m, ev.n, ev.pos))
        elif isinstance(ev, Merge):
            lines.append("merge %d %d @%d" % (ev.m, ev.n, ev.pos))
        elif isinstance(ev, Cross):
            lines.append("x%s @%d" % ("+" if ev.sign > 0 else "-", ev.pos))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def circle(color, turn="ccw"):
    return SliceWord([Cup(color, turn, 0), Cap(color, turn, 0)])


def random_closed_word(rng, max_grow=5, max_color=3):
    """Random valid closed crossing-free word: grow with cups, splits and
    merges, then close greedily with caps and merges; retries the rare
    layouts the greedy closure cannot finish."""
    for _ in range(200):
        events = []
        cur = ()

        def apply(ev):
            nonlocal cur
            cur = _apply(cur, ev)

        for _ in range(rng.randrange(1, max_grow + 1)):
            ops = ["cup"]
            if any(s.color >= 1 for s in cur):
                ops.append("split")
            pairs = [
                i
                for i in range(len(cur) - 1)
                if cur[i].direction == cur[i + 1].direction
            ]
            if pairs:
                ops.append("merge")
            op = rng.choice(ops)
            if op == "cup":
                ev = Cup(
                    rng.randrange(1, max_color + 1),
                    rng.choice(["ccw", "cw"]),
                    rng.randrange(len(cur) + 1),
                )
            elif op == "split":
                idx = rng.choice([i for i, s in enumerate(cur) if s.color >= 1])
                c = cur[idx].color
                m = rng.randrange(0, c + 1)
                ev = Split(m, c - m, idx)
            else:
                i = rng.choice(pairs)
                ev = Merge(cur[i].color, cur[i + 1].color, i)
            events.append(ev)
            apply(ev)
        ok = True
        guard = 0
        while cur and guard < 100:
            guard += 1
            for i in range(len(cur) - 1):
                a, b = cur[i], cur[i + 1]
                if a.color == b.color and (a.direction, b.direction) == (DOWN, UP):
                    ev = Cap(a.color, "ccw", i)
                    break
                if a.color == b.color and (a.direction, b.direction) == (UP, DOWN):
                    ev = Cap(a.color, "cw", i)
                    break
                if a.direction == b.direction:
                    ev = Merge(a.color, b.color, i)
                    break
            else:
                ok = False
                break
            events.append(ev)
            apply(ev)
        if ok and not cur:
            return SliceWord(events)
    raise RuntimeError("could not build a random closed word")


def braid_closure(colors, braid, n_hint=None):
    """Closure of a braid word on len(colors) strands.

    ``braid`` lists generators as +-(i+1): +(i+1) crosses strands i, i+1
    with a positive crossing.  Strands run upward; the closure returns each
    strand around the left, so a trivial braid closes into ccw circles.
    """
    b = len(colors)
    events = []
    # nested left returns: after the cups the layout is
    # [r_b, ..., r_1, s_1, ..., s_b]
    for i in range(b):
        events.append(Cup(colors[b - 1 - i], "ccw", i))
    perm = list(range(b))  # braid position -> original strand index
    for g in braid:
        i = abs(g) - 1
        if not (0 <= i < b - 1):
            raise ValueError("braid generator out of range")
        events.append(Cross(1 if g > 0 else -1, b + i))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    if perm != sorted(perm):
        # closure still type-checks only if colors match along components
        for i, p in enumerate(perm):
            if colors[p] != colors[i]:
                raise ValueError("braid permutation does not preserve colors")
    for _ in range(b):
        # innermost cap first: return r_1 sits just left of strand s_1
        events.append(Cap(colors[0], "ccw", b - 1))
        # after capping, relabel: the next pair is again at b'-1
        b -= 1
        colors = colors[1:]
    return SliceWord(events, n_hint=n_hint)
