from crystalagt import dvir, linalg
from crystalagt.exactfield import ONE, var
from crystalagt.fock import dvir_pbw_bra, dvir_pbw_state
from crystalagt.nekrasov import z_pure, z_tilde_pure
from crystalagt.partitions import partitions_of
from crystalagt.symfunc import b_lambda

t = var("t")


def test_kac_level_zero_and_one():
    assert dvir.kac_matrix(0, "generic") == [[ONE]]
    mod = dvir.module("generic")
    direct = mod.pairing(dvir_pbw_bra(mod, (1,)), dvir_pbw_state(mod, (1,)))
    assert dvir.kac_matrix(1, "generic") == [[direct]]


def test_crystal_kac_is_diagonal():
    for n in range(5):
        K = dvir.kac_matrix(n, "crystal")
        assert K == dvir.crystal_kac_closed(n)
        assert linalg.is_identity(linalg.matmul(K, dvir.crystal_kac_closed(n, inverse=True)))


def test_crystal_kac_level_two():
    diag = [b_lambda(lam, 1 / t) for lam in partitions_of(2)]
    K = dvir.kac_matrix(2, "crystal")
    assert [K[0][0], K[1][1]] == diag


def test_crystal_kac_differs_from_inverse_diagonal():
    # the Fock pairing gives b_lam(1/t) on the diagonal, not 1/b_lam(1/t)
    assert dvir.kac_matrix(1, "crystal") != dvir.crystal_kac_closed(1, inverse=True)


def test_whittaker_norms():
    crys = dvir.whittaker_norm(3, "crystal")
    assert crys[0] == ONE
    assert crys[1] == 1 / (1 - 1 / t)
    assert crys[2] == 1 / ((1 - 1 / t) * (1 - t**-2))
    assert dvir.whittaker_norm(0, "generic") == [ONE]


def test_whittaker_vector_property():
    assert dvir.whittaker_vector(0, "crystal") == dvir.module("crystal").vacuum()
    assert dvir.whittaker_property(3, "crystal")
    assert dvir.whittaker_property(2, "generic")


def test_norms_match_partition_functions():
    assert dvir.norm_in_Q(2) == list(z_pure(2))
    assert dvir.whittaker_norm(5, "crystal") == list(z_tilde_pure(5))
