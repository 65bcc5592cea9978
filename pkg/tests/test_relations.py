from moykit import relations
from moykit.qpoly import LaurentPoly, qbinom, qint
from moykit.statesum import bracket_dp


def test_relation4_hand_value():
    # m = n = 1 at N = 2: bubble strips off qbinom(1,1) = 1 leaving a circle
    lhs, terms = relations.relation4(2, 1, 1)
    assert bracket_dp(lhs, 2) == qbinom(2, 1)
    ok, left, right = relations.check_instance(2, (lhs, terms))
    assert ok, (left, right)


def test_relation5_hand_value():
    # m = 1, N = 2: [N-m-1] = [0] = 0, so the ladder equals two circles
    lhs, terms = relations.relation5(2, 1)
    assert bracket_dp(lhs, 2) == qbinom(2, 1) * qbinom(2, 1)
    ok, left, right = relations.check_instance(2, (lhs, terms))
    assert ok, (left, right)


def test_relation5_nontrivial_coefficient():
    ok, left, right = relations.check_instance(3, relations.relation5(3, 1))
    assert ok, (left, right)
    assert qint(1) == LaurentPoly.const(1)


def test_relation6_smallest():
    ok, left, right = relations.check_instance(3, relations.relation6(3, 1, 0, 1))
    assert ok, (left, right)
    ok, left, right = relations.check_instance(3, relations.relation6(3, 2, 1, 1))
    assert ok, (left, right)


def test_relation7_crossing_square_shape():
    ok, left, right = relations.check_instance(3, relations.relation7(3, 1, 1, 1, 1))
    assert ok, (left, right)


def test_sweeps_small():
    assert relations.sweep(1) == []
    assert relations.sweep(2) == []
    assert relations.sweep(3) == []
