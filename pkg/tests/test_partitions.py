from hypothesis import given, settings
from hypothesis import strategies as st

from crystalagt.partitions import (
    arm,
    check_stats,
    conjugate,
    enumerate_tuples,
    from_obj,
    interleavings,
    leg,
    n_stat,
    partition_count,
    partitions_of,
    size,
    star_greater,
    tuple_text,
    wstar,
    z_stat,
)

E = ()


def test_enumerate_tuples_examples():
    assert list(enumerate_tuples(0, 2)) == [(E, E)]
    assert list(enumerate_tuples(1, 2)) == [(E, (1,)), ((1,), E)]
    assert list(enumerate_tuples(3, 1)) == [((3,),), ((2, 1),), ((1, 1, 1),)]


def test_stats_examples():
    assert n_stat((2, 1)) == 1 and z_stat((2, 1)) == 2
    assert n_stat((1, 1, 1)) == 3 and conjugate((1, 1, 1)) == (3,)
    assert size(E) == 0 and n_stat(E) == 0 and z_stat(E) == 1


def test_arm_leg():
    assert arm((2, 1), 1, 1) == 1
    assert leg((2, 1), 1, 1) == 1
    assert arm(E, 1, 1) == -1


def test_check_partition():
    assert check_stats((5, 3, 3, 1)).check == (4, 2, 2)
    assert check_stats((1, 1, 1)).check == E and check_stats((1, 1, 1)).I == 0
    assert check_stats((2, 1)).check == (1,) and check_stats((2, 1)).I == 2


def test_star_order_examples():
    assert star_greater((E, (1,), (2,)), ((1,), (1,), (1,)))
    assert not star_greater((E, E, (3,)), (E, E, (2, 1)))
    lam = ((1,), (1,))
    assert not star_greater(lam, lam)
    assert wstar(lam, lam)


def test_interleavings():
    assert set(interleavings((2, 1, 1))) == {
        ((2, 1, 1), E), ((2, 1), (1,)), ((2,), (1, 1)), ((1, 1), (2,)), ((1,), (2, 1)), (E, (2, 1, 1)),
    }
    assert interleavings(E) == [(E, E)]
    assert set(interleavings((1, 1))) == {((1, 1), E), ((1,), (1,)), (E, (1, 1))}


def test_text_round_trip():
    for lams in enumerate_tuples(3, 2):
        import json

        assert from_obj(json.loads(tuple_text(lams))) == lams


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 9))
def test_partition_properties(n):
    parts = partitions_of(n)
    assert len(parts) == partition_count(n) == len(set(parts))
    for lam in parts:
        assert conjugate(conjugate(lam)) == lam
        assert size(conjugate(lam)) == n
        assert n_stat(lam) == sum(lc * (lc - 1) // 2 for lc in conjugate(lam))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5), st.integers(1, 3))
def test_tuple_counts(n, N):
    tuples = enumerate_tuples(n, N)
    assert len(set(tuples)) == len(tuples)
    assert all(sum(size(x) for x in lams) == n for lams in tuples)
    for a in tuples:
        assert not (star_greater(a, a))
        for b in tuples:
            assert not (star_greater(a, b) and star_greater(b, a))
