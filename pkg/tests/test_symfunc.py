import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalagt.exactfield import ONE, ZERO, limit_to_zero, var
from crystalagt.partitions import n_stat, partitions_of
from crystalagt.symfunc import (
    DegreeBoundError,
    SymFunc,
    b_lambda,
    basis_convert,
    elementary,
    fact_a2_rhs,
    hall_littlewood_Q,
    hl_pairing,
    hl_pairing_signed,
    inner_qt,
    is_dominance_triangular,
    jing_apply,
    macdonald_P,
    monomial,
    principal_specialize,
)

q, t, r = var("q"), var("t"), var("r")
p = SymFunc.p


def test_monomial_and_elementary():
    assert monomial((1,)) == p(1)
    half = (p(1, 1) - p(2)).scale(ONE / 2)
    assert monomial((1, 1)) == half
    assert elementary(2) == half


def test_inner_product_examples():
    assert inner_qt(p(1), p(1), q, t) == (1 - q) / (1 - t)
    assert inner_qt(p(2), p(1, 1), q, t) == ZERO


def test_macdonald_small():
    assert macdonald_P((1,)) == p(1)
    assert macdonald_P((1, 1)) == monomial((1, 1))
    P2 = macdonald_P((2,))
    assert is_dominance_triangular((2,), P2)
    assert inner_qt(P2, macdonald_P((1, 1)), q, t) == ZERO


def test_hall_littlewood_columns():
    assert hall_littlewood_Q((1,), t) == p(1).scale(1 - t)
    for s in range(1, 5):
        lam = (1,) * s
        assert hall_littlewood_Q(lam, t) == elementary(s).scale(b_lambda(lam, t))


def test_hall_littlewood_is_macdonald_at_q_zero():
    for lam in partitions_of(3):
        P = macdonald_P(lam)
        P0 = SymFunc({k: limit_to_zero(c) for k, c in P.coeffs.items()})
        assert hall_littlewood_Q(lam, t) == P0.scale(b_lambda(lam, t))


def test_jing_operator():
    one = SymFunc.one()
    assert jing_apply(-1, one, t) == hall_littlewood_Q((1,), t)
    assert jing_apply(-2, jing_apply(-1, one, t), t) == hall_littlewood_Q((2, 1), t)
    assert jing_apply(0, one, t) == one


def test_hall_littlewood_norms():
    for n in range(5):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                want = b_lambda(lam, t) if lam == mu else ZERO
                assert hl_pairing(lam, mu, t) == want


def test_principal_specialization():
    assert principal_specialize(p(1), r, t) == (1 - r) / (1 - t)
    for n in range(6):
        for lam in partitions_of(n):
            Q = hall_littlewood_Q(lam, t)
            assert principal_specialize(Q, r, t) == fact_a2_rhs(lam, r, t)
            assert principal_specialize(Q, ZERO, t) == t ** n_stat(lam)


def test_signed_pairings():
    assert hl_pairing_signed((), (), t) == ONE
    for s in range(1, 5):
        for lam in partitions_of(s):
            want = t ** (s + n_stat(lam))
            for k in range(1, len(lam) + 1):
                want = want * (1 - t**-k)
            assert hl_pairing_signed((s,), lam, t) == want
            got = inner_qt(elementary(s).negate_p(), hall_littlewood_Q(lam, t), ZERO, t)
            assert got == (-1) ** s * t ** n_stat(lam)


def test_degree_bound():
    with pytest.raises(DegreeBoundError):
        hall_littlewood_Q((3, 2), t, bound=4)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4), st.data())
def test_basis_round_trip(n, data):
    lam = data.draw(st.sampled_from(partitions_of(n)))
    f = monomial(lam)
    m = basis_convert(f.coeffs, "powersum", "monomial")
    assert m == {lam: ONE}
    e = basis_convert(f.coeffs, "powersum", "elementary")
    assert SymFunc(basis_convert(e, "elementary", "powersum")) == f
