import random

import pytest

from moykit import moy, statesum
from moykit.moy import Cap, Cup, Merge, SliceWord, Split
from moykit.qpoly import LaurentPoly, qbinom
from test_moy import random_closed_word


def test_pi_examples():
    assert statesum.pi((1,), (-1,)) == 1
    assert statesum.pi((-1,), (1,)) == 0
    assert statesum.pi((2, 0), (0, -2)) == 3


def test_vertex_weight_examples():
    # colors 1,1 at N=2: q^(1/2 - pi)
    assert statesum.vertex_weight(1, 1, (1,), (-1,)) == LaurentPoly.q_power(-1)
    assert statesum.vertex_weight(1, 1, (-1,), (1,)) == LaurentPoly.q_power(1)
    assert statesum.vertex_weight(1, 0, (1,), ()) == 1
    with pytest.raises(ValueError):
        statesum.vertex_weight(1, 1, (1,), (1,))


def test_circle_brackets_are_gaussian_binomials():
    for N in range(1, 7):
        for m in range(0, N + 1):
            want = qbinom(N, m)
            assert statesum.bracket_dp(moy.circle(m, "ccw"), N) == want
            assert statesum.bracket_dp(moy.circle(m, "cw"), N) == want
    assert statesum.bracket_enumerate(moy.circle(1, "ccw"), 2) == qbinom(2, 1)
    assert statesum.bracket_enumerate(moy.circle(2, "ccw"), 3) == qbinom(3, 2)


def test_circle_color_equal_N_and_overflow():
    assert statesum.bracket_dp(moy.circle(3), 3) == 1
    assert statesum.bracket_dp(moy.circle(4), 3) == 0
    assert statesum.bracket_enumerate(moy.circle(4), 3) == 0


def test_empty_word():
    assert statesum.bracket_dp(SliceWord(), 2) == 1
    assert statesum.bracket_enumerate(SliceWord(), 2) == 1


def digon(m, n):
    return SliceWord(
        [
            Cup(m + n, "ccw", 0),
            Split(m, n, 1),
            Merge(m, n, 1),
            Cap(m + n, "ccw", 0),
        ]
    )


def test_digon_value():
    # two-edge bigon: qbinom(m+n, n) times the plain circle
    got = statesum.bracket_enumerate(digon(1, 1), 3)
    want = qbinom(2, 1) * qbinom(3, 2)
    assert got == want
    assert statesum.bracket_dp(digon(1, 1), 3) == want
    for N in range(1, 5):
        for m in range(0, 3):
            for n in range(0, 3):
                want = qbinom(m + n, n) * qbinom(N, m + n)
                assert statesum.bracket_dp(digon(m, n), N) == want, (N, m, n)


def test_width_cap_digon_vanishes():
    for N in range(1, 4):
        m = (N + 1) // 2
        n = N + 1 - m
        assert statesum.bracket_dp(digon(m, n), N) == 0


def test_mirror_symmetry():
    rng = random.Random(3)
    for _ in range(40):
        w = random_closed_word(rng, max_grow=4, max_color=2)
        b = statesum.bracket_dp(w, 3)
        assert statesum.bracket_dp(moy.reverse_mirror(w), 3) == b.bar()


def test_dp_matches_enumeration_random():
    rng = random.Random(2024)
    for N in (2, 3):
        for _ in range(60):
            w = random_closed_word(rng, max_grow=3, max_color=N)
            assert statesum.bracket_dp(w, N) == statesum.bracket_enumerate(w, N)


def test_rejects_open_or_crossed_words():
    with pytest.raises(ValueError):
        statesum.bracket_dp(SliceWord([Cup(1, "ccw", 0)]), 2)
    with pytest.raises(ValueError):
        statesum.bracket_dp(moy.braid_closure([1, 1], [1]), 2)


def test_states_dump_matches_bracket():
    w = digon(1, 1)
    N = 2
    total = {}
    for labels, doubled in statesum.enumerate_states(w, N):
        total[doubled] = total.get(doubled, 0) + 1
    assert LaurentPoly(total) == statesum.bracket_dp(w, N)


def test_threaded_enumeration_same_answer():
    w = digon(1, 2)
    assert statesum.bracket_enumerate(w, 4, threads=4) == statesum.bracket_enumerate(w, 4)
