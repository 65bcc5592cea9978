import pytest

from moykit import invariant, moy, statesum
from moykit.moy import SliceWord, braid_closure
from moykit.qpoly import LaurentPoly, qbinom

from kauffman import kauffman_rt


def test_resolution_terms_uncolored_positive():
    res = invariant.resolve_crossing(+1, 1, 1, 2)
    assert [r.k for r in res] == [0, 1]
    assert res[0].coefficient == LaurentPoly.q_power(-2, -1)  # -q^-1
    assert res[1].coefficient == 1


def test_resolution_terms_uncolored_negative():
    res = invariant.resolve_crossing(-1, 1, 1, 2)
    assert res[0].coefficient == LaurentPoly.q_power(2, -1)  # -q
    assert res[1].coefficient == 1


def test_resolution_lower_bound():
    res = invariant.resolve_crossing(+1, 2, 1, 3)
    assert [r.k for r in res] == [1, 2]
    assert res[0].coefficient == LaurentPoly.q_power(-2, -1)
    assert res[1].coefficient == 1


def test_shift_factor_values():
    assert invariant.shift_factor(+1, 1, 1, 2) == LaurentPoly.q_power(4, -1)   # -q^2
    assert invariant.shift_factor(-1, 2, 2, 3) == LaurentPoly.q_power(-8, 1)   # q^-4
    assert invariant.shift_factor(+1, 1, 2, 5) == 1


def test_unknot_bracket_and_rt():
    for N in (2, 3):
        for m in range(0, N + 1):
            w = braid_closure([m], [])
            assert invariant.bracket_link(w, N) == qbinom(N, m)
            assert invariant.rt_poly(w, N) == qbinom(N, m)


def test_kinked_unknot_shift():
    # one positive kink: raw bracket = s(c)^(-1) * unknot value
    w = braid_closure([1, 1], [1])
    N = 2
    raw = invariant.bracket_link(w, N)
    unknot = qbinom(2, 1)
    assert invariant.shift_factor(+1, 1, 1, N) * raw == unknot
    assert invariant.rt_poly(w, N) == unknot
    w_neg = braid_closure([1, 1], [-1])
    assert invariant.rt_poly(w_neg, N) == unknot


def test_r2_pair_equals_unlink():
    # opposite crossings cancel at the bracket level already
    N = 2
    pair = braid_closure([1, 1], [1, -1])
    assert invariant.bracket_link(pair, N) == qbinom(2, 1) ** 2


def test_r2_bracket_invariance_colored():
    for N in (3, 4):
        for a in (1, 2):
            for b in (1, 2):
                pair = braid_closure([a, b], [1, -1])
                flat = braid_closure([a, b], [])
                assert invariant.bracket_link(pair, N) == invariant.bracket_link(
                    flat, N
                ), (N, a, b)


def test_r3_bracket_and_rt_invariance():
    for N in (2, 3, 4):
        for a in (1, 2):
            for b in (1, 2):
                colors = [a, b, a]
                lhs = braid_closure(colors, [1, 2, 1])
                rhs = braid_closure(colors, [2, 1, 2])
                bl = invariant.bracket_link(lhs, N)
                br = invariant.bracket_link(rhs, N)
                assert bl == br, (N, a, b)
                assert invariant.rt_poly(lhs, N) == invariant.rt_poly(rhs, N)


def test_r1_rt_invariance_colored():
    for N in (2, 3, 4):
        for m in (1, 2):
            if m > N:
                continue
            for sign in (1, -1):
                kinked = braid_closure([m, m], [sign])
                assert invariant.rt_poly(kinked, N) == qbinom(N, m), (N, m, sign)


# ------------------------------------------------- independent skein oracle

def test_oracle_self_consistency():
    # the conversion constant is pinned by Reidemeister moves inside the
    # oracle itself, before it is compared with anything else
    unknot = kauffman_rt(1, [])
    assert unknot == qbinom(2, 1)
    assert kauffman_rt(2, [1]) == unknot
    assert kauffman_rt(2, [-1]) == unknot
    assert kauffman_rt(2, [1, -1]) == unknot * unknot
    assert kauffman_rt(3, [1, 2, 1]) == kauffman_rt(3, [2, 1, 2])


@pytest.mark.parametrize(
    "b,braid",
    [
        (2, [1, 1, 1]),       # right trefoil
        (2, [-1, -1, -1]),    # left trefoil
        (3, [1, -2, 1, -2]),  # figure eight
        (2, [1, 1]),          # Hopf link
        (2, [-1, -1]),        # mirror Hopf
        (2, []),              # unlink
        (3, [1, 1, 2, 2]),    # a 3-braid link
    ],
)
def test_rt_matches_kauffman_oracle(b, braid):
    w = braid_closure([1] * b, braid)
    assert invariant.rt_poly(w, 2) == kauffman_rt(b, braid)


def test_trefoil_value_is_jones_shape():
    # unreduced, 5 terms, spans 8 quantum degrees
    v = invariant.rt_poly(braid_closure([1, 1], [1, 1, 1]), 2)
    assert v == v  # exactness sanity
    assert len(v.terms) == 4
    assert v.max_exp() - v.min_exp() == 2 * 8


# ---------------------------------------------------------- Euler bookkeeping

def corpus():
    yield braid_closure([1], [])
    yield braid_closure([1, 1], [1])
    yield braid_closure([1, 1], [-1])
    yield braid_closure([1, 1], [1, -1])
    yield braid_closure([1, 1], [1, 1, 1])
    yield braid_closure([3], [])
    yield braid_closure([1, 2, 1], [1, 2, 1])
    yield braid_closure([2, 2], [1])
    yield braid_closure([1, 2], [1, 1])


def test_complex_euler_equals_rt():
    for w in corpus():
        for N in (2, 3):
            assert invariant.complex_euler(w, N) == invariant.rt_poly(w, N)


def test_complex_euler_from_homology():
    w = braid_closure([1, 1], [1])
    got = invariant.complex_euler(w, 2, gdim_source="mf")
    assert got == invariant.rt_poly(w, 2) == qbinom(2, 1)


def test_parity_check_corpus():
    for w in corpus():
        assert invariant.parity_check(w, 3), w
    assert invariant.parity_check(braid_closure([1, 1], [1, 1, 1]), 2)


def test_rejects_open_diagram():
    with pytest.raises(ValueError):
        invariant.rt_poly(SliceWord([moy.Cup(1, "ccw", 0)]), 2)
