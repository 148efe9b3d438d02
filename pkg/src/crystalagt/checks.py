"""Named verification checks shared by the command line and the test suite.

Each check takes a level bound and returns True when the identity holds.
``kind`` is "theorem" (a mismatch is a failure), "conjecture" (a mismatch is a
finding) or "literal" (a statement as printed, kept to document a known
deviation; its outcome never fails a run).
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from . import dvir, gmac, intertwiner, laurent, linalg, nekrasov
from .exactfield import ZERO, substitute, var
from .fock import (
    RELATION_PAIRS,
    commutator_check,
    dim_module,
    dvir_pbw_bra,
    dvir_pbw_state,
    pbw_bra,
    pbw_state,
    pm_basis_bra,
    pm_basis_states,
)
from .partitions import enumerate_tuples, n_stat, partitions_of
from .symfunc import (
    b_lambda,
    fact_a2_rhs,
    hall_littlewood_Q,
    hl_pairing_signed,
    inner_qt,
    is_dominance_triangular,
    macdonald_family,
    principal_specialize,
)
from .vertex import state_scale

q, t, k = var("q"), var("t"), var("k")


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    anchor: str
    kind: str
    cap: int
    fn: Callable[[int], bool]


REGISTRY: dict[str, Check] = {}


def check(suite: str, anchor: str, kind: str = "theorem", cap: int = 4):
    def deco(fn):
        name = fn.__name__.replace("_", "-")
        REGISTRY[name] = Check(name, suite, anchor, kind, cap, fn)
        return fn

    return deco


def run(name: str, level: int) -> bool:
    c = REGISTRY[name]
    return bool(c.fn(min(level, c.cap)))


def suites() -> list[str]:
    return sorted({c.suite for c in REGISTRY.values()})


# dvir ----------------------------------------------------------------------------------------

@check("dvir", "Whittaker norm equals the pure SU(2) partition function (k^2 = Q)", cap=3)
def whittaker_norm_vs_z_pure(L):
    return all(a == b for a, b in zip(dvir.norm_in_Q(L), nekrasov.z_pure(L)))


@check("dvir", "crystal Whittaker norm equals the crystal pure partition function", cap=6)
def crystal_norm_vs_z_tilde_pure(L):
    zt = nekrasov.z_tilde_pure(L)
    return all(a == b for a, b in zip(dvir.whittaker_norm(L, "crystal"), zt))


@check("dvir", "Whittaker vector defining property, generic and crystal", cap=3)
def whittaker_property(L):
    return dvir.whittaker_property(L, "generic") and dvir.whittaker_property(L, "crystal")


@check("dvir", "crystal PBW vectors are Hall-Littlewood functions (ket and bra)")
def crystal_pbw_hall_littlewood(L):
    mod = dvir.module("crystal")
    for n in range(L + 1):
        for lam in partitions_of(n):
            Qf = hall_littlewood_Q(lam, 1 / t)
            ket = state_scale(Qf.to_state(0, 1), k ** len(lam))
            bra = state_scale(Qf.negate_p().to_state(0, 1), k ** -len(lam) * t ** n)
            if dvir_pbw_state(mod, lam) != ket or dvir_pbw_bra(mod, lam) != bra:
                return False
    return True


@check("dvir", "crystal Kac matrix is diag(b_lam(1/t)) and its inverse diag(1/b_lam(1/t))")
def crystal_kac_diagonal(L):
    return all(
        dvir.kac_matrix(n, "crystal") == dvir.crystal_kac_closed(n)
        and linalg.is_identity(linalg.matmul(dvir.kac_matrix(n, "crystal"), dvir.crystal_kac_closed(n, inverse=True)))
        for n in range(L + 1)
    )


@check("dvir", "crystal Kac matrix as printed: diag(1/b_lam(1/t))", kind="literal")
def crystal_kac_stated(L):
    return all(dvir.kac_matrix(n, "crystal") == dvir.crystal_kac_closed(n, inverse=True) for n in range(L + 1))


def _relations(names, L):
    r = min(L, 3)
    return all(
        commutator_check(name, n, m, r)
        for name in names
        for n in range(-r, r + 1)
        for m in range(-r, n)
    )


@check("dvir", "deformed Virasoro relations and their crystal limit", cap=3)
def dvir_relations(L):
    return _relations(["T", "T_tilde"], L)


# nekrasov ------------------------------------------------------------------------------------

@check("nekrasov", "termwise q -> 0 limit of the pure partition function", cap=4)
def z_pure_limit(L):
    return all(a == b for a, b in zip(nekrasov.z_pure_limit(L), nekrasov.z_tilde_pure(L)))


@check("nekrasov", "crystal pure partition function does not depend on Q", cap=6)
def z_tilde_q_independent(L):
    Q2 = var("Q") + 1
    return all(substitute(c, {"Q": Q2}) == c for c in nekrasov.z_tilde_pure(L))


@check("nekrasov", "q-pole order of each pure term is E, zero iff both are single columns", cap=3)
def pole_order_bookkeeping(L):
    for n in range(L + 1):
        for (lam, mu), (_, val) in nekrasov.z_pure_limit_terms(n).items():
            E = nekrasov.pole_order_E(lam, mu)
            if val != E or (E == 0) != (nekrasov.is_single_column(lam) and nekrasov.is_single_column(mu)):
                return False
    return True


@check("nekrasov", "residue antisymmetry in the crystal pure partition function", cap=5)
def residue_antisymmetry(L):
    for total in range(L + 1):
        for n in range(total + 1):
            m = total - n
            for M in range(-m, n + 1):
                if m + M > total or n - M < 0:
                    continue
                a = nekrasov.antisymmetry_term(n, m, M)
                b = nekrasov.antisymmetry_term(m + M, n - M, M)
                if not (a + b).is_zero():
                    return False
    return True


@check("nekrasov", "crystal Nekrasov factor is the limit of the generic one", cap=3)
def tilde_factor_limit(L):
    Qv = var("Q")
    for a in range(L + 1):
        for b in range(L + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    if nekrasov.nekrasov_limit(lam, mu, Qv) != nekrasov.nekrasov_factor(lam, mu, Qv, "tilde"):
                        return False
    return True


SCALING = {"M": (0, 0, -1, -1), "A": (0, 0)}


@check("nekrasov", "scaled N_f = 4 partition function tends to the crystal pure one", cap=3)
def nf4_scaled_limit(L):
    zs = nekrasov.z_nf4(L, SCALING)
    want = [substitute(c, {"Q": var("v1p") / var("v2p")}) for c in nekrasov.z_tilde_pure(L)]
    if not all(a == b for a, b in zip(zs, want)):
        return False
    for n in range(L + 1):
        keys = set(nekrasov.z_nf4_scaled_terms(n, SCALING["M"], SCALING["A"]))
        if not all(all(p == 1 for p in lam) for lams in keys for lam in lams):
            return False
    return True


# symmetric functions -------------------------------------------------------------------------

@check("symfunc", "Macdonald polynomials: orthogonality and dominance triangularity", cap=5)
def macdonald_orthogonal_triangular(L):
    for n in range(L + 1):
        fam = macdonald_family(n)
        items = list(fam.items())
        for i, (lam, P) in enumerate(items):
            if not is_dominance_triangular(lam, P):
                return False
            for mu, R in items[i + 1:]:
                if not inner_qt(P, R, q, t).is_zero():
                    return False
    return True


@check("symfunc", "principal specialization of Hall-Littlewood Q", cap=5)
def principal_specialization(L):
    r = var("r")
    return all(
        principal_specialize(hall_littlewood_Q(lam, t), r, t) == fact_a2_rhs(lam, r, t)
        for n in range(L + 1)
        for lam in partitions_of(n)
    )


@check("symfunc", "Hall-Littlewood Q pairings: orthogonality and the one-row signed pairing", cap=4)
def hall_littlewood_pairings(L):
    for n in range(L + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                v = inner_qt(hall_littlewood_Q(lam, t), hall_littlewood_Q(mu, t), ZERO, t)
                if v != (b_lambda(lam, t) if lam == mu else ZERO):
                    return False
            want = t ** (n + n_stat(lam))
            for j in range(1, len(lam) + 1):
                want = want * (1 - t ** -j)
            if n and hl_pairing_signed((n,), lam, t) != want:
                return False
            e_pair = hl_pairing_signed((1,) * n, lam, t) / b_lambda((1,) * n, t)
            if e_pair != (-1) ** n * t ** n_stat(lam):
                return False
    return True


# gmac ----------------------------------------------------------------------------------------

@check("gmac", "generalized Macdonald eigenvectors of X1_0", cap=3)
def generic_eigenvectors(L):
    return all(gmac.check_generic_eigen(n, 2) for n in range(1, L + 1))


@check("gmac", "eigenvector coefficients vanish outside the star and wstar orders", cap=3)
def triangularity(L):
    return all(
        not gmac.triangularity_report(n, N, ordering)
        for n in range(1, L + 1)
        for N in (1, 2, 3)
        for ordering in ("star", "wstar")
    )


@check("gmac", "generalized Hall-Littlewood eigenvectors and eigenvalues", cap=3)
def crystal_eigenvectors(L):
    return all(gmac.check_crystal_eigen(n) for n in range(1, L + 1))


@check("gmac", "degenerate crystal eigenvalues for ((1),(2)) and ((2),(1))", cap=0)
def degenerate_eigenvalues(L):
    return gmac.degenerate_witness()


@check("gmac", "crystal PBW vectors in terms of Hall-Littlewood functions", cap=4)
def crystal_pbw_pm_basis(L):
    mod = dim_module(2, "crystal")
    for n in range(L + 1):
        for lams in enumerate_tuples(n, 2):
            if pbw_state(mod, lams) != pm_basis_states(*lams) or pbw_bra(mod, lams) != pm_basis_bra(*lams):
                return False
    return True


@check("gmac", "crystal Shapovalov matrix, Hall-Littlewood closed form and its inverse", cap=4)
def crystal_shapovalov(L):
    for n in range(L + 1):
        try:
            gmac.shapovalov(n)
        except AssertionError:
            return False
    return True


@check("gmac", "crystal Shapovalov closed form as printed", kind="literal", cap=4)
def crystal_shapovalov_stated(L):
    for n in range(L + 1):
        try:
            gmac.shapovalov(n, literal=True)
        except AssertionError:
            return False
    return True


@check("gmac", "inverse Shapovalov entries in the row (0,(1^n))", cap=4)
def inverse_shapovalov_column(L):
    for n in range(L + 1):
        basis = list(enumerate_tuples(n, 2))
        inv = linalg.inverse([list(r) for r in gmac.shapovalov_fock(n, "crystal")])
        i = basis.index(((), (1,) * n))
        for lam in partitions_of(n):
            if inv[i][basis.index(((), lam))] != gmac.lemma_inverse_column(lam):
                return False
    return True


@check("gmac", "norm of the crystal integral forms", kind="conjecture", cap=3)
def crystal_norms(L):
    return all(ok for n in range(1, L + 1) for *_, ok in gmac.norm_conjecture_check(n, "crystal"))


@check("gmac", "norm of the generic integral forms, N = 2", kind="conjecture", cap=2)
def generic_norms(L):
    return all(ok for n in range(1, L + 1) for *_, ok in gmac.norm_conjecture_check(n, "generic", 2))


@check("gmac", "alpha and beta are Laurent polynomials", kind="conjecture", cap=2)
def integral_form_polynomiality(L):
    return all(not gmac.polynomiality_report(n, 2) for n in range(1, L + 1))


@check("gmac", "eta_n P_lam only involves partitions contained in lam", kind="conjecture", cap=4)
def eta_inclusion(L):
    return not gmac.eta_inclusion_check(L)


@check("gmac", "level-N relations for X1, X2 and their crystal limits", cap=3)
def dim_relations(L):
    return _relations([n for n in RELATION_PAIRS if n.startswith("X")], L)


# laurent -------------------------------------------------------------------------------------

def _parts(L):
    return [lam for n in range(1, L + 1) for lam in partitions_of(n)]


@check("laurent", "F_lam = t^{n(lam)} by the engine in two integration orders and both recursions", cap=5)
def contour_F(L):
    return all(
        laurent.contour_coefficient(laurent.F_spec(lam, order)) == laurent.F_closed(lam)
        for lam in _parts(L)
        for order in ("w1_first", "wl_first")
    ) and all(
        laurent.F_recursive(lam) == laurent.F_reverse_recursion(lam) == laurent.F_closed(lam) for lam in _parts(L)
    )


@check("laurent", "G^0 closed form and the G^k recursion", cap=5)
def contour_G(L):
    ok = all(laurent.contour_coefficient(laurent.G_spec(lam, 0)) == laurent.G_closed(lam) for lam in _parts(L))
    return ok and all(
        laurent.contour_coefficient(laurent.G_spec(lam, kk)) == laurent.G_recursive(lam, kk)
        for lam in _parts(min(L, 4))
        for kk in (1, 2)
    )


@check("laurent", "frakF and frakG closed forms and recursions", cap=5)
def contour_frak(L):
    return all(
        laurent.contour_coefficient(laurent.frakF_spec(lam)) == laurent.frakF_closed(lam) == laurent.frakF_recursive(lam)
        and laurent.contour_coefficient(laurent.frakG_spec(lam)) == laurent.frakG_closed(lam)
        == laurent.frakG_recursive(lam)
        for lam in _parts(L)
    )


@check("laurent", "frakG closed form as printed", kind="literal", cap=3)
def contour_frakG_stated(L):
    return all(
        laurent.contour_coefficient(laurent.frakG_spec(lam)) == laurent.frakG_closed(lam, literal=True)
        for lam in _parts(L)
    )


@check("laurent", "N = 1 crystal matrix elements: contour integral equals the N~ product", kind="conjecture", cap=3)
def n1_crystal_conjecture(L):
    return all(ok for *_, ok in intertwiner.n1_conjecture_check(L, literal=False))


@check("laurent", "N = 1 crystal matrix elements with the right side as printed", kind="literal", cap=3)
def n1_crystal_conjecture_stated(L):
    return all(ok for *_, ok in intertwiner.n1_conjecture_check(L, literal=True))


# intertwiner ---------------------------------------------------------------------------------

@check("intertwiner", "N = 1 crystal vertex operator is the limit of the generic one", cap=4)
def n1_crystal_limit(L):
    return intertwiner.crystal_is_limit(L)


@check("intertwiner", "N = 1 crystal matrix elements: Fock and contour pipelines agree", cap=3)
def n1_pipelines(L):
    try:
        for a in range(L + 1):
            for b in range(L + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        intertwiner.n1_matrix_element(lam, mu)
    except AssertionError:
        return False
    return True


@check("intertwiner", "crystal intertwiner relations are consistent and fix a unique solution", cap=3)
def crystal_intertwiner_solvable(L):
    try:
        intertwiner.solve_intertwiner(L, "crystal")
    except (AssertionError, linalg.InconsistentSystemError, linalg.UnderdeterminedSystemError):
        return False
    return True


def _prop_checks(L, literal):
    z = var("z")
    data = intertwiner.solve_intertwiner(min(L, 3), "crystal")
    src, tgt = data.source, data.target
    for n in range(1, L + 1):
        for i, lams in ((1, ((n,), ())), (2, ((), (n,)))):
            got = intertwiner.vacuum_row_element(pbw_state(src, lams), z=z)
            if got != intertwiner.single_mode_closed(i, n, z, literal=literal):
                return False
    for n in range(min(L, 3) + 1):
        for lams in enumerate_tuples(n, 2):
            if data.element(pbw_bra(tgt, lams), src.vacuum(), z) != intertwiner.vacuum_bra_closed(lams, z):
                return False
    return True


@check("intertwiner", "vacuum matrix elements of the crystal intertwiner with one mode", cap=3)
def crystal_single_modes(L):
    return _prop_checks(L, literal=False)


@check("intertwiner", "vacuum matrix elements with one X1 mode, sign as printed", kind="literal", cap=3)
def crystal_single_modes_stated(L):
    return _prop_checks(L, literal=True)


@check("intertwiner", "vacuum row on X2 PBW vectors", cap=4)
def pbw_row_closed(L):
    src = dim_module(2, "crystal")
    z = var("z")
    return all(
        intertwiner.vacuum_row_element(pbw_state(src, ((), lam)), z=z) == intertwiner.pbw_matrix_element_closed(lam, z)
        for n in range(L + 1)
        for lam in partitions_of(n)
    )


@check("intertwiner", "crystal four-point function: PBW insertion equals the closed sum", cap=4)
def four_point_theorem(L):
    return all(a == b for a, b in zip(intertwiner.four_point(L, "pbw"), intertwiner.four_point(L, "closed")))


@check("intertwiner", "crystal four-point function through generalized Hall-Littlewood states", kind="conjecture", cap=3)
def four_point_aflt(L):
    return all(a == b for a, b in zip(intertwiner.four_point(L, "aflt"), intertwiner.four_point(L, "closed")))


@check("intertwiner", "crystal matrix elements of integral forms", kind="conjecture", cap=2)
def crystal_matrix_elements(L):
    return all(ok for *_, ok in intertwiner.crystal_element_check(L))


@check("intertwiner", "generic N = 2 matrix elements of integral forms", kind="conjecture", cap=2)
def generic_matrix_elements(L):
    return all(ok for *_, ok in intertwiner.generic_element_check(L))


@check("intertwiner", "generic N = 1 matrix elements of integral forms", kind="conjecture", cap=2)
def n1_generic_matrix_elements(L):
    return all(ok for *_, ok in intertwiner.n1_generic_element_check(L))


@check("intertwiner", "summed comparison of the two four-point expansions", kind="conjecture", cap=3)
def summed_comparison(L):
    return all(ok for _, ok in intertwiner.summed_comparison(L))


@check("intertwiner", "strange factorization with ratio-only dependence", kind="conjecture", cap=4)
def strange_factorization(L):
    for n in range(L + 1):
        for lam in partitions_of(n):
            rep = intertwiner.strange_factorization_check(lam)
            if not (rep.holds and rep.ratio_only):
                return False
    return True


@check("intertwiner", "strange factorization with I_lam = sum of lam'_j", kind="literal", cap=4)
def strange_factorization_stated(L):
    return all(
        intertwiner.strange_factorization_check(lam, "simplified").holds
        for n in range(L + 1)
        for lam in partitions_of(n)
    )

