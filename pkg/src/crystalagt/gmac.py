"""Generalized Macdonald and Hall-Littlewood functions, integral forms, Shapovalov
matrices and the norm checks.

Eigenvectors of X1_0 are found by triangular back-substitution in the basis of
products of Macdonald functions prod_i P_{lam^i}(a^i), ordered canonically.
The crystal objects are the q -> 0 limits of the generic ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from . import linalg
from .exactfield import ONE, ZERO, RatFunc, limit_to_zero, var
from .fock import FockModule, dim_module, eta, gram_matrix, pbw_bra, pbw_matrix
from .nekrasov import nekrasov_factor
from .partitions import (
    Partition,
    PartitionTuple,
    conjugate,
    dual_sort,
    enumerate_tuples,
    n_stat,
    partitions_of,
    star_greater,
    wstar,
)
from .symfunc import b_lambda, hl_pairing_signed, macdonald_P
from .vertex import Heisenberg, state_mul

q, t = var("q"), var("t")


class DiagonalCollisionError(ArithmeticError):
    pass


@dataclass
class GMacTable:
    level: int
    N: int
    kind: str
    order: list  # canonical order of tuples (ket side)
    dual_order: list  # order used on the bra side
    c: dict = field(default_factory=dict)  # c[lam][mu]
    c_star: dict = field(default_factory=dict)
    e: dict = field(default_factory=dict)
    e_star: dict = field(default_factory=dict)
    alpha: dict = field(default_factory=dict)
    beta: dict = field(default_factory=dict)

    def matrix(self, name: str, rows=None, cols=None) -> list:
        data = getattr(self, name)
        if rows is None:
            rows = self.dual_order if name == "c_star" else self.order
        if cols is None:
            cols = rows
        return [[data[r].get(cc, ZERO) for cc in cols] for r in rows]


# modules ---------------------------------------------------------------------------------------

_MODULES: dict = {}


def module(N: int, kind: str) -> FockModule:
    key = (N, kind)
    if key not in _MODULES:
        _MODULES[key] = dim_module(N, kind)
    return _MODULES[key]


def _x1(kind: str) -> str:
    return "X1" if kind == "generic" else "X1_tilde"


# product bases ---------------------------------------------------------------------------------

def _species_P(lam: Partition, kind: str):
    if kind == "generic":
        return macdonald_P(lam, q, t)
    return macdonald_P(lam, ZERO, t)


def product_state(lams: PartitionTuple, kind: str = "generic") -> dict:
    """prod_i P_{lam^i}(a^i_{-n}) |u> (Macdonald for generic, Hall-Littlewood for crystal)."""
    N = len(lams)
    st = {tuple(() for _ in range(N)): ONE}
    for i, lam in enumerate(lams):
        st = state_mul(st, _species_P(lam, kind).to_state(i, N))
    return st


@cache
def _product_basis(level: int, N: int, kind: str):
    basis = list(enumerate_tuples(level, N))
    cols = [product_state(lams, kind) for lams in basis]
    mat = linalg.transpose([[st.get(b, ZERO) for b in basis] for st in cols])
    return basis, mat, linalg.inverse(mat)


def _x1_zero_matrix(level: int, N: int, kind: str, side: str) -> list:
    """Matrix of X1_0 in the product basis.

    side="ket": column j is the image of basis vector j.
    side="bra": row j is the image of the j-th dual basis vector under right action.
    """
    mod = module(N, kind)
    fam = _x1(kind)
    basis, B, Binv = _product_basis(level, N, kind)
    if side == "ket":
        M = mod.operator_matrix(fam, 0, level)
        return linalg.matmul(Binv, linalg.matmul(M, B))
    # bra: <0| prod P(a_n) corresponds to pairing coefficients; right action matrix R in monomial bras
    R = [[ZERO] * len(basis) for _ in basis]
    index = {b: i for i, b in enumerate(basis)}
    for i, b in enumerate(basis):
        img = mod.mode_bra(fam, 0, {b: ONE})
        for k2, c in img.items():
            R[i][index[k2]] = c
    # bra basis rows: row j of Bt = coefficients of j-th product bra in monomial bras
    Bt = linalg.transpose(B)
    Btinv = linalg.transpose(Binv)
    return linalg.matmul(Bt, linalg.matmul(R, Btinv))


def _triangular_eigen(A: list, order_idx: list, side: str, *, rows_are_images: bool):
    """Back-substitution for eigenvectors of a matrix triangular in ``order_idx``.

    ``order_idx`` lists basis indices from highest to lowest.  For the ket side
    A[i][j] is the coefficient of basis i in the image of basis j; for the bra
    side A[j][i] is the coefficient of dual basis i in the image of dual basis j.
    Returns (eigenvalues, vectors) keyed by basis index.
    """
    n = len(order_idx)

    def entry(i, j):  # coefficient of i in image of j
        return A[j][i] if rows_are_images else A[i][j]

    # triangularity: image of j involves only basis elements at or after j in order_idx
    pos = {b: k for k, b in enumerate(order_idx)}
    for j in order_idx:
        for i in order_idx:
            if pos[i] < pos[j] and not entry(i, j).is_zero():
                raise AssertionError("X1_0 is not triangular in the chosen order")
    eig = {j: entry(j, j) for j in order_idx}
    vecs = {}
    for kj, j in enumerate(order_idx):
        v = {j: ONE}
        for ki in range(kj + 1, n):
            i = order_idx[ki]
            s = ZERO
            for kk in range(kj, ki):
                k = order_idx[kk]
                if k in v:
                    a = entry(i, k)
                    if not a.is_zero():
                        s = s + a * v[k]
            if s.is_zero():
                continue
            d = eig[j] - eig[i]
            if d.is_zero():
                raise DiagonalCollisionError(f"equal eigenvalues at positions {kj}, {ki}")
            v[i] = s / d
        vecs[j] = v
    return eig, vecs


@cache
def generalized_macdonald(level: int, N: int = 2) -> GMacTable:
    """Eigenvectors |P_lam> and <P_lam| of X1_0 with their transition matrices."""
    basis, _, _ = _product_basis(level, N, "generic")
    idx = {b: i for i, b in enumerate(basis)}
    dual = dual_sort(basis)
    table = GMacTable(level, N, "generic", basis, dual)
    A = _x1_zero_matrix(level, N, "generic", "ket")
    eig, vecs = _triangular_eigen(A, list(range(len(basis))), "ket", rows_are_images=False)
    for j, lam in enumerate(basis):
        table.e[lam] = eig[j]
        table.c[lam] = {basis[i]: c for i, c in vecs[j].items()}
    R = _x1_zero_matrix(level, N, "generic", "bra")
    eig_s, vecs_s = _triangular_eigen(R, [idx[b] for b in dual], "bra", rows_are_images=True)
    for lam in dual:
        j = idx[lam]
        table.e_star[lam] = eig_s[j]
        table.c_star[lam] = {basis[i]: c for i, c in vecs_s[j].items()}
    return table


def eigen_state(table: GMacTable, lam: PartitionTuple) -> dict:
    """|P_lam> as a Fock state."""
    out: dict = {}
    from .vertex import add_into

    for mu, c in table.c[lam].items():
        for k, v in product_state(mu, _basis_kind(table)).items():
            add_into(out, k, c * v)
    return out


def eigen_bra(table: GMacTable, lam: PartitionTuple) -> dict:
    """<P_lam| as a bra state (keys are dual monomials <0| prod a_rho)."""
    from .vertex import add_into

    out: dict = {}
    for mu, c in table.c_star[lam].items():
        for k, v in product_state(mu, _basis_kind(table)).items():
            add_into(out, k, c * v)
    return out


def _basis_kind(table: GMacTable) -> str:
    return "generic" if table.kind == "generic" else "crystal"


def eigenvalue_formula(lams: PartitionTuple, u=None) -> RatFunc:
    """sum_i u_i (1 + (t-1) sum_k (q^{lam^i_k} - 1) t^{-k})."""
    u = u or [var(f"u{i + 1}") for i in range(len(lams))]
    out = ZERO
    for ui, lam in zip(u, lams):
        s = ZERO
        for k, part in enumerate(lam, 1):
            s = s + (q ** part - 1) * t ** -k
        out = out + ui * (1 + (t - 1) * s)
    return out


def crystal_eigenvalue(lams: PartitionTuple) -> RatFunc:
    """tilde-e = sum_k u_k (1 + (1-t) sum_{i=1}^{l(lam^k)} t^{-i})."""
    out = ZERO
    for k, lam in enumerate(lams):
        s = sum((t ** -i for i in range(1, len(lam) + 1)), ZERO)
        out = out + var(f"u{k + 1}") * (1 + (1 - t) * s)
    return out


# integral forms --------------------------------------------------------------------------------

def _normalize(coords: dict, key) -> dict:
    c0 = coords.get(key, ZERO)
    if c0.is_zero():
        raise ZeroDivisionError(f"normalizing coordinate at {key} vanishes")
    return {k: v / c0 for k, v in coords.items() if not v.is_zero()}


def _pbw_coordinates(mod: FockModule, level: int, state: dict) -> dict:
    basis = mod.basis(level)
    P = _pbw_matrix_cached(mod, level)
    x = linalg.solve_vector(P, mod.to_vector(state, level))
    return {b: c for b, c in zip(basis, x) if not c.is_zero()}


_PBW_MATS: dict = {}


def _pbw_matrix_cached(mod: FockModule, level: int) -> list:
    key = (id(mod), level)
    if key not in _PBW_MATS:
        _PBW_MATS[key] = pbw_matrix(mod, level)
    return _PBW_MATS[key]


def _pbw_bra_matrix(mod: FockModule, level: int) -> list:
    key = (id(mod), level, "bra")
    if key not in _PBW_MATS:
        basis = mod.basis(level)
        cols = [mod.to_vector(pbw_bra(mod, lams), level) for lams in basis]
        _PBW_MATS[key] = linalg.transpose(cols)
    return _PBW_MATS[key]


def _pbw_bra_coordinates(mod: FockModule, level: int, bra: dict) -> dict:
    basis = mod.basis(level)
    x = linalg.solve_vector(_pbw_bra_matrix(mod, level), mod.to_vector(bra, level))
    return {b: c for b, c in zip(basis, x) if not c.is_zero()}


def _anchor(level: int, N: int) -> PartitionTuple:
    return tuple(() for _ in range(N - 1)) + ((1,) * level,)


def integral_form(table: GMacTable) -> GMacTable:
    """Fill alpha and beta: |K_lam> = sum alpha |X_mu>, <K_lam| = sum beta <X_mu|."""
    if table.alpha:
        return table
    mod = module(table.N, table.kind)
    anchor = _anchor(table.level, table.N)
    for lam in table.order:
        table.alpha[lam] = _normalize(_pbw_coordinates(mod, table.level, eigen_state(table, lam)), anchor)
        table.beta[lam] = _normalize(_pbw_bra_coordinates(mod, table.level, eigen_bra(table, lam)), anchor)
    return table


@cache
def generic_integral(level: int, N: int = 2) -> GMacTable:
    return integral_form(generalized_macdonald(level, N))


# crystal ---------------------------------------------------------------------------------------

@cache
def crystal_generalized_hl(level: int) -> GMacTable:
    """q -> 0 limits of the generic transition matrices (N = 2)."""
    gen = generalized_macdonald(level, 2)
    table = GMacTable(level, 2, "crystal", gen.order, gen.dual_order)
    for lam in gen.order:
        table.c[lam] = {mu: limit_to_zero(c, "q") for mu, c in gen.c[lam].items()}
        table.c[lam] = {mu: c for mu, c in table.c[lam].items() if not c.is_zero()}
        table.c_star[lam] = {mu: limit_to_zero(c, "q") for mu, c in gen.c_star[lam].items()}
        table.c_star[lam] = {mu: c for mu, c in table.c_star[lam].items() if not c.is_zero()}
        table.e[lam] = limit_to_zero(gen.e[lam], "q")
        table.e_star[lam] = limit_to_zero(gen.e_star[lam], "q")
    return table


@cache
def crystal_integral(level: int) -> GMacTable:
    return integral_form(crystal_generalized_hl(level))


def check_crystal_eigen(level: int) -> bool:
    """X1~_0 |P~> = e~ |P~> and <P~| X1~_0 = e~ <P~|, with e~ the closed form."""
    table = crystal_generalized_hl(level)
    mod = module(2, "crystal")
    from .vertex import state_scale, state_sub

    for lam in table.order:
        e = crystal_eigenvalue(lam)
        if table.e[lam] != e or table.e_star[lam] != e:
            return False
        ket = eigen_state(table, lam)
        if state_sub(mod.mode("X1_tilde", 0, ket), state_scale(ket, e)):
            return False
        bra = eigen_bra(table, lam)
        if state_sub(mod.mode_bra("X1_tilde", 0, bra), state_scale(bra, e)):
            return False
    return True


def check_generic_eigen(level: int, N: int = 2) -> bool:
    table = generalized_macdonald(level, N)
    mod = module(N, "generic")
    from .vertex import state_scale, state_sub

    for lam in table.order:
        ket = eigen_state(table, lam)
        if state_sub(mod.mode("X1", 0, ket), state_scale(ket, table.e[lam])):
            return False
        bra = eigen_bra(table, lam)
        if state_sub(mod.mode_bra("X1", 0, bra), state_scale(bra, table.e_star[lam])):
            return False
    return True


def triangularity_report(level: int, N: int = 2, ordering: str = "star") -> list:
    """(lam, mu) pairs with c_{lam mu} != 0 that violate mu <= lam in the ordering."""
    table = generalized_macdonald(level, N)
    bad = []
    for lam in table.order:
        for mu, c in table.c[lam].items():
            if mu == lam or c.is_zero():
                continue
            ok = star_greater(lam, mu) if ordering == "star" else wstar(lam, mu)
            if not ok:
                bad.append((lam, mu))
        for mu, c in table.c_star[lam].items():
            if mu == lam or c.is_zero():
                continue
            ok = star_greater(mu, lam) if ordering == "star" else wstar(mu, lam)
            if not ok:
                bad.append((lam, mu, "dual"))
    return bad


def degenerate_witness() -> bool:
    """e~((1),(2)) = e~((2),(1)) although ((1),(2)) is star-above ((2),(1))."""
    a, b = ((1,), (2,)), ((2,), (1,))
    return crystal_eigenvalue(a) == crystal_eigenvalue(b) and star_greater(a, b)


# Shapovalov ------------------------------------------------------------------------------------

@cache
def shapovalov_fock(level: int, kind: str = "crystal", N: int = 2) -> tuple:
    return tuple(tuple(r) for r in gram_matrix(module(N, kind), level))


def _u():
    return var("u1"), var("u2")


def shapovalov_closed_entry(lams: PartitionTuple, mus: PartitionTuple, literal: bool = False) -> RatFunc:
    """S_{lam mu} from the Hall-Littlewood pairing.

    The lam^1 sector contributes b_{lam^1}(1/t), as for the crystal Kac matrix;
    ``literal=True`` uses 1/b_{lam^1}(1/t) instead, which disagrees with the Fock pairing.
    """
    (l1, l2), (m1, m2) = lams, mus
    if l1 != m1:
        return ZERO
    u1, u2 = _u()
    ti = 1 / t
    pref = (u1 * u2) ** (len(l2) + len(m2)) * u1 ** len(l1) * u2 ** len(m1)
    # <Q_{l2}(p), Q_{m2}(-p)> = <Q_{m2}(-p), Q_{l2}(p)> by symmetry of the pairing
    b1 = 1 / b_lambda(l1, ti) if literal else b_lambda(l1, ti)
    return pref * b1 * hl_pairing_signed(m2, l2, ti)


def shapovalov_inverse_entry(lams: PartitionTuple, mus: PartitionTuple, literal: bool = False) -> RatFunc:
    (l1, l2), (m1, m2) = lams, mus
    if l1 != m1:
        return ZERO
    u1, u2 = _u()
    ti = 1 / t
    pref = (u1 * u2) ** (-len(m2) - len(l2)) * u1 ** -len(m1) * u2 ** -len(l1)
    b1 = b_lambda(m1, ti) if literal else 1 / b_lambda(m1, ti)
    return pref * b1 / (b_lambda(l2, ti) * b_lambda(m2, ti)) * hl_pairing_signed(l2, m2, ti)


def shapovalov(level: int, literal: bool = False) -> tuple[list, list]:
    """(S, S^{-1}) for the crystal PBW basis; the Fock and closed forms must agree."""
    basis = list(enumerate_tuples(level, 2))
    S = [list(r) for r in shapovalov_fock(level, "crystal")]
    closed = [[shapovalov_closed_entry(a, b, literal) for b in basis] for a in basis]
    if S != closed:
        raise AssertionError("Shapovalov matrix: Fock pairing and closed form disagree")
    Sinv = [[shapovalov_inverse_entry(a, b, literal) for b in basis] for a in basis]
    if not linalg.is_identity(linalg.matmul(S, Sinv)):
        raise AssertionError("closed-form inverse Shapovalov matrix is not the inverse")
    return S, Sinv


def lemma_inverse_column(lam: Partition) -> RatFunc:
    """(-1)^{|lam|} t^{-n(lam)} (u1 u2)^{-|lam|-l(lam)} / b_lam(1/t)."""
    u1, u2 = _u()
    n = sum(lam)
    return (-1) ** n * t ** -n_stat(lam) * (u1 * u2) ** (-n - len(lam)) / b_lambda(lam, 1 / t)


# norms -----------------------------------------------------------------------------------------

def _norm_from_tables(table: GMacTable, lam) -> RatFunc:
    mod = module(table.N, table.kind)
    basis = mod.basis(table.level)
    S = shapovalov_fock(table.level, table.kind, table.N)
    a = [table.alpha[lam].get(b, ZERO) for b in basis]
    bvec = [table.beta[lam].get(b, ZERO) for b in basis]
    total = ZERO
    for i, bi in enumerate(bvec):
        if bi.is_zero():
            continue
        for j, aj in enumerate(a):
            if aj.is_zero() or S[i][j].is_zero():
                continue
            total = total + bi * S[i][j] * aj
    return total


def generic_norm_conjecture(lams: PartitionTuple, u=None, sign: str = "literal") -> RatFunc:
    """Conjectured <K|K>.  sign="literal" uses (-1)^N; sign="size" uses (-1)^{N|lam|},
    which agrees with the literal sign for even N and also fits N = 1."""
    N = len(lams)
    u = u or [var(f"u{i + 1}") for i in range(N)]
    eN = ONE
    for x in u:
        eN = eN * x
    size = sum(sum(l) for l in lams)
    out = (-1) ** (N * size if sign == "size" else N) * eN ** size
    for ui, lam in zip(u, lams):
        out = out * t ** (-N * n_stat(lam)) * q ** (N * n_stat(conjugate(lam))) * ui ** (N * sum(lam))
    for i in range(N):
        for j in range(N):
            out = out * nekrasov_factor(lams[i], lams[j], q * u[i] / (t * u[j]))
    return out


def crystal_norm_conjecture(lams: PartitionTuple) -> RatFunc:
    u1, u2 = _u()
    l1, l2 = lams
    out = (u1 * u2) ** (sum(l1) + sum(l2)) * u1 ** (2 * sum(l1)) * u2 ** (2 * sum(l2))
    out = out * t ** (-2 * (n_stat(l1) + n_stat(l2)))
    u = (u1, u2)
    for i in range(2):
        for j in range(2):
            out = out * nekrasov_factor(lams[i], lams[j], u[i] / u[j], "tilde")
    return out


def norm_conjecture_check(level: int, which: str = "crystal", N: int = 2, sign: str = "literal") -> list:
    """[(lam, computed, conjectured, holds)] for every tuple of the level."""
    table = generic_integral(level, N) if which == "generic" else crystal_integral(level)
    out = []
    for lam in table.order:
        got = _norm_from_tables(table, lam)
        want = generic_norm_conjecture(lam, sign=sign) if which == "generic" else crystal_norm_conjecture(lam)
        out.append((lam, got, want, got == want))
    return out


# Conjecture on eta_n -------------------------------------------------------------------------

def eta_inclusion_check(level: int) -> list:
    """Partitions mu not contained in lam that appear in eta_n P_lam, for |lam|, n <= level."""
    from .partitions import contains

    heis = Heisenberg([lambda n: (1 - q ** n) / (1 - t ** n)])
    op = eta(0, 1)
    bad = []
    for size in range(level + 1):
        for lam in partitions_of(size):
            st = macdonald_P(lam, q, t).to_state(0, 1)
            for n in range(1, level + 1):
                img = op.mode(n, st, heis)
                target = size - n
                if target < 0:
                    if img:
                        bad.append((lam, n, None))
                    continue
                coeffs = _expand_in_macdonald(img, target)
                for mu, c in coeffs.items():
                    if not c.is_zero() and not contains(lam, mu):
                        bad.append((lam, n, mu))
    return bad


@cache
def _macdonald_inverse(n: int):
    parts = list(partitions_of(n))
    keys = [(p,) for p in parts]
    cols = [macdonald_P(mu, q, t).to_state(0, 1) for mu in parts]
    mat = linalg.transpose([[st.get(k, ZERO) for k in keys] for st in cols])
    return parts, keys, linalg.inverse(mat)


def _expand_in_macdonald(state: dict, n: int) -> dict:
    parts, keys, inv = _macdonald_inverse(n)
    vec = [state.get(k, ZERO) for k in keys]
    coords = linalg.matvec(inv, vec)
    return {mu: c for mu, c in zip(parts, coords) if not c.is_zero()}


def is_laurent_polynomial(x: RatFunc) -> bool:
    """True when the reduced denominator is a single monomial."""
    return len(x.den) == 1


def polynomiality_report(level: int, N: int = 2) -> list:
    """(side, lam, mu) for alpha/beta entries that are not Laurent polynomials."""
    table = generic_integral(level, N)
    return [
        (side, lam, mu)
        for side in ("alpha", "beta")
        for lam, row in getattr(table, side).items()
        for mu, x in row.items()
        if not is_laurent_polynomial(x)
    ]
