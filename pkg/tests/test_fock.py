import pytest

from crystalagt import linalg
from crystalagt.exactfield import ONE, ZERO, var
from crystalagt.fock import (
    RELATION_PAIRS,
    commutator_check,
    dim_module,
    dvir_module,
    dvir_pbw_state,
    pbw_bra,
    pbw_state,
    pm_basis_bra,
    pm_basis_states,
)
from crystalagt.partitions import enumerate_tuples, partitions_of
from crystalagt.symfunc import hall_littlewood_Q
from crystalagt.vertex import state_scale

q, t, k, u1, u2 = var("q"), var("t"), var("k"), var("u1"), var("u2")
E = ()


def test_vacuum_eigenvalues():
    crys = dim_module(2, "crystal")
    assert crys.mode("X1_tilde", 0, crys.vacuum()) == {crys.basis(0)[0]: u1 + u2}
    gen = dim_module(2, "generic")
    assert gen.mode("X1", 0, gen.vacuum()) == {gen.basis(0)[0]: u1 + u2}
    vir = dvir_module("generic")
    assert vir.mode("T", 0, vir.vacuum()) == {vir.basis(0)[0]: k + 1 / k}


def test_heisenberg_normalization():
    gen = dim_module(2, "generic")
    key = ((1,), ())
    assert gen.pairing({key: ONE}, {key: ONE}) == (1 - q) / (1 - t)
    assert gen.pairing(gen.vacuum(), gen.vacuum()) == ONE
    assert gen.pairing(gen.vacuum(), {key: ONE}) == ZERO


def test_crystal_dvir_pbw_is_hall_littlewood():
    mod = dvir_module("crystal")
    for n in range(5):
        for lam in partitions_of(n):
            want = state_scale(hall_littlewood_Q(lam, 1 / t).to_state(0, 1), k ** len(lam))
            assert dvir_pbw_state(mod, lam) == want


def test_crystal_pbw_vectors():
    mod = dim_module(2, "crystal")
    assert pbw_state(mod, (E, E)) == mod.vacuum()
    for n in range(4):
        for lams in enumerate_tuples(n, 2):
            assert pbw_state(mod, lams) == pm_basis_states(*lams)
            assert pbw_bra(mod, lams) == pm_basis_bra(*lams)


def test_modes_lower_level():
    mod = dim_module(2, "crystal")
    assert mod.operator_matrix("X1_tilde", 2, 1) == []
    assert mod.mode("X2_tilde", 1, mod.vacuum()) == {}


@pytest.mark.parametrize("name", list(RELATION_PAIRS))
def test_relations_small(name):
    for n in range(-2, 3):
        for m in range(-2, n):
            assert commutator_check(name, n, m, 1)


def test_x1_level_one_triangular():
    mod = dim_module(2, "generic")
    X0 = mod.operator_matrix("X1", 0, 1)
    assert linalg.is_upper_triangular(X0) or linalg.is_upper_triangular(linalg.transpose(X0))
