import pytest

from crystalagt import nekrasov
from crystalagt.exactfield import ONE, ZERO, limit_to_zero, substitute, var
from crystalagt.partitions import conjugate, n_stat, partitions_of

q, t, Q = var("q"), var("t"), var("Q")


def test_tilde_factor_examples():
    for n in range(5):
        for lam in partitions_of(n):
            assert nekrasov.nekrasov_factor(lam, (), Q, "tilde") == ONE
    assert nekrasov.nekrasov_factor((), (1,), Q, "tilde") == 1 - Q
    assert nekrasov.nekrasov_factor((), (), Q) == ONE


def test_tilde_factor_is_limit():
    for a in range(4):
        for b in range(4):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    lim = limit_to_zero(q ** n_stat(conjugate(mu)) * nekrasov.nekrasov_factor(lam, mu, q / t * Q), "q")
                    assert lim == nekrasov.nekrasov_factor(lam, mu, Q, "tilde")


def test_z_pure_low_orders():
    z = nekrasov.z_pure(1)
    assert z[0] == ONE
    want = nekrasov.z_pure_term((1,), ()) + nekrasov.z_pure_term((), (1,))
    assert z[1] == want


def test_z_tilde_low_orders():
    zt = nekrasov.z_tilde_pure(2)
    assert zt[0] == ONE
    assert zt[1] == 1 / (1 - 1 / t)
    by_hand = 1 / ((1 - 1 / t) * (1 - 1 / Q)) + 1 / ((1 - 1 / t) * (1 - Q))
    assert by_hand == 1 / (1 - 1 / t)


def test_z_tilde_is_q_independent():
    assert all(c.variables() <= {"t"} for c in nekrasov.z_tilde_pure(5))


def test_termwise_limit():
    assert nekrasov.z_pure_limit(3) == nekrasov.z_tilde_pure(3)


def test_pole_bookkeeping():
    for n in range(1, 4):
        for (lam, mu), (lim, val) in nekrasov.z_pure_limit_terms(n).items():
            single = nekrasov.is_single_column(lam) and nekrasov.is_single_column(mu)
            assert (nekrasov.pole_order_E(lam, mu) == 0) == single
            assert val == nekrasov.pole_order_E(lam, mu)
            assert (lim != ZERO) == single


def test_nf4_orders():
    assert nekrasov.z_nf4(0) == [ONE]
    scaling = {"M": (0, 0, -1, -1), "A": (0, 0)}
    want = [substitute(c, {"Q": var("v1p") / var("v2p")}) for c in nekrasov.z_tilde_pure(2)]
    assert nekrasov.z_nf4(2, scaling) == want


def test_bad_exponents():
    with pytest.raises(ValueError):
        nekrasov.check_exponents((0, 0, 0, 0), (0, 0))
