"""Fock modules with concrete free-field operators.

Generic-q operators are written in a frame where only integer powers of
p = q/t occur.  For the deformed Virasoro current the bosons are conjugated by
p^{D/2} (D the degree operator), which replaces T_n by p^{n/2} T_n.  For the
Ding-Iohara-Miki currents the spectral variable is shifted instead,
X^{(1)}(z) -> X^{(1)}(p^{-(N-1)/2} z) and X^{(2)}(z) -> X^{(2)}(p^{-1/2} z),
which again multiplies the n-th mode by a power p^{c n}.  In both cases the
commutation relations keep their form, every PBW vector of a level is
rescaled by one common factor, and all Gram matrices, eigenvectors and
normalized transition matrices are unchanged.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from . import linalg
from .exactfield import ONE, ZERO, RatFunc, var
from .partitions import Partition, PartitionTuple, enumerate_tuples, partition
from .symfunc import SymFunc, hall_littlewood_Q
from .vertex import (
    Current,
    Heisenberg,
    VertexOp,
    add_into,
    exp_series,
    normal_product,
    state_add,
    state_mul,
    state_scale,
    state_sub,
)

q, t, k = var("q"), var("t"), var("k")
p = q / t


def generic_kappa(n: int) -> RatFunc:
    return (1 - q ** n) / (1 - t ** n)


def crystal_kappa(n: int) -> RatFunc:
    return 1 / (1 - t ** n)


KAPPA = {"generic": generic_kappa, "crystal": crystal_kappa}


# building blocks ---------------------------------------------------------------------

def eta(species: int, nspecies: int, alpha: RatFunc = ONE) -> VertexOp:
    """eta^{(s)}(alpha z)."""
    cre = [None] * nspecies
    ann = [None] * nspecies
    cre[species] = lambda n: (1 - t ** -n) / n * alpha ** n
    ann[species] = lambda n: -(1 - t ** n) / n * alpha ** -n
    return VertexOp(tuple(cre), tuple(ann), name=f"eta{species + 1}")


def phi(species: int, nspecies: int, alpha: RatFunc = ONE) -> VertexOp:
    """varphi^{(s)}(alpha z): creation part only."""
    cre = [None] * nspecies
    cre[species] = lambda n: (1 - t ** -n) * (1 - p ** -n) / n * alpha ** n
    return VertexOp(tuple(cre), (None,) * nspecies, name=f"phi{species + 1}")


def weight_vars(N: int) -> tuple[RatFunc, ...]:
    return tuple(var(f"u{i}") for i in range(1, N + 1))


# modules ---------------------------------------------------------------------------------

@dataclass(eq=False)
class FockModule:
    """A Fock module with a boson normalization and named currents."""

    nspecies: int
    kind: str
    weights: tuple
    currents: dict
    heis: Heisenberg = field(init=False)
    _matrix_cache: dict = field(default_factory=dict, repr=False)
    _mode_cache: dict = field(default_factory=dict, repr=False)
    _pbw_cache: dict = field(default_factory=dict, repr=False)
    _pbw_bra_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.heis = Heisenberg([KAPPA[self.kind]] * self.nspecies)

    def vacuum(self) -> dict:
        return self.heis.vacuum()

    def basis(self, level: int) -> list:
        return list(enumerate_tuples(level, self.nspecies))

    def mode(self, family: str, n: int, state: dict) -> dict:
        out: dict = {}
        for key, c in state.items():
            img = self.mode_key(family, n, key)
            for k2, v in img.items():
                add_into(out, k2, c * v)
        return out

    def mode_key(self, family: str, n: int, key) -> dict:
        """Image of one monomial basis vector (cached)."""
        ck = (family, n, key)
        hit = self._mode_cache.get(ck)
        if hit is None:
            hit = self._mode_cache[ck] = self.currents[family].mode(n, {key: ONE}, self.heis)
        return hit

    def mode_bra(self, family: str, n: int, bra: dict) -> dict:
        return self.currents[family].mode_bra(n, bra, self.heis)

    def apply_word(self, word: Sequence[tuple[str, int]], state: dict) -> dict:
        """Apply the operator product word[0] word[1] ... (rightmost first)."""
        for fam, n in reversed(word):
            state = self.mode(fam, n, state)
            if not state:
                break
        return state

    def apply_word_bra(self, bra: dict, word: Sequence[tuple[str, int]]) -> dict:
        """<bra| word[0] word[1] ... (leftmost first)."""
        for fam, n in word:
            bra = self.mode_bra(fam, n, bra)
            if not bra:
                break
        return bra

    def pairing(self, bra: dict, ket: dict) -> RatFunc:
        return self.heis.pairing(bra, ket)

    def operator_matrix(self, family: str, n: int, level_from: int) -> list:
        """Matrix of the mode from level_from to level_from - n in the canonical bases."""
        key = (family, n, level_from)
        hit = self._matrix_cache.get(key)
        if hit is not None:
            return hit
        level_to = level_from - n
        if level_to < 0:
            mat = []
        else:
            rows = self.basis(level_to)
            index = {b: i for i, b in enumerate(rows)}
            cols = self.basis(level_from)
            mat = [[ZERO] * len(cols) for _ in rows]
            for j, b in enumerate(cols):
                img = self.mode(family, n, {b: ONE})
                for kk, c in img.items():
                    mat[index[kk]][j] = c
        self._matrix_cache[key] = mat
        return mat

    def to_vector(self, state: dict, level: int) -> list:
        return [state.get(b, ZERO) for b in self.basis(level)]

    def from_vector(self, vec: Sequence[RatFunc], level: int) -> dict:
        return {b: c for b, c in zip(self.basis(level), vec) if not c.is_zero()}


# deformed Virasoro ----------------------------------------------------------------------------

def dvir_module(kind: str = "generic") -> FockModule:
    """One boson with T(z) = Lambda^+(z) + Lambda^-(z); highest weight h = k + 1/k."""
    if kind == "generic":
        plus = VertexOp(
            (lambda n: -(1 - t ** n) / (n * (t ** n + q ** n)),),
            (lambda n: -(1 - t ** n) / n,),
            k,
            "Lambda+",
        )
        minus = VertexOp(
            (lambda n: p ** n * (1 - t ** n) / (n * (t ** n + q ** n)),),
            (lambda n: p ** -n * (1 - t ** n) / n,),
            1 / k,
            "Lambda-",
        )
        current = Current([(plus, None), (minus, None)], "T")
        return FockModule(1, "generic", (k,), {"T": current})
    if kind == "crystal":
        plus = VertexOp((lambda n: (1 - t ** -n) / n,), (lambda n: -(1 - t ** n) / n,), k, "Lambda~+")
        minus = VertexOp((lambda n: -(1 - t ** -n) / n,), (lambda n: (1 - t ** n) / n,), 1 / k, "Lambda~-")
        current = Current([(plus, "le0"), (minus, "ge0")], "T_tilde")
        return FockModule(1, "crystal", (k,), {"T_tilde": current})
    raise ValueError(f"unknown kind {kind!r}")


# Ding-Iohara-Miki, level N ------------------------------------------------------------------

def lambda_i(i: int, N: int, weights: Sequence[RatFunc]) -> VertexOp:
    """Lambda^i(p^{-(N-1)/2} z) = phi^1(z) phi^2(z/p) ... phi^{i-1}(z p^{2-i}) eta^i(z p^{1-i}) U_i (1-based i)."""
    factors = [phi(j, N, p ** -j) for j in range(i - 1)]
    factors.append(eta(i - 1, N, p ** (1 - i)))
    op = normal_product(*factors, name=f"Lambda{i}")
    return op.times(weights[i - 1])


def dim_module(N: int = 2, kind: str = "generic", weights: Sequence[RatFunc] | None = None) -> FockModule:
    """Level-N representation.  Generic: X1 for any N and X2 for N = 2.  Crystal: N = 2 only."""
    w = tuple(weights) if weights is not None else weight_vars(N)
    if kind == "generic":
        lams = [lambda_i(i, N, w) for i in range(1, N + 1)]
        currents = {"X1": Current([(op, None) for op in lams], "X1")}
        if N == 2:
            # :Lambda^1(z) Lambda^2(p z): in the shifted frame
            x2 = normal_product(lams[0], lams[1].rescaled(p), name="X2")
            currents["X2"] = Current([(x2, None)], "X2")
        return FockModule(N, "generic", w, currents)
    if kind == "crystal":
        if N != 2:
            raise ValueError("the crystal currents are implemented for N = 2")
        l1 = VertexOp((lambda n: (1 - t ** -n) / n, None), (lambda n: -(1 - t ** n) / n, None), w[0], "Lambda~1")
        l2 = VertexOp(
            (lambda n: -(1 - t ** -n) / n, lambda n: (1 - t ** -n) / n),
            (None, lambda n: -(1 - t ** n) / n),
            w[1],
            "Lambda~2",
        )
        x2 = VertexOp(
            (None, lambda n: (1 - t ** -n) / n),
            (lambda n: -(1 - t ** n) / n, lambda n: -(1 - t ** n) / n),
            w[0] * w[1],
            "X~2",
        )
        currents = {
            "X1_tilde": Current([(l1, "ge0"), (l2, "le0")], "X1_tilde"),
            "X2_tilde": Current([(x2, None)], "X2_tilde"),
        }
        return FockModule(2, "crystal", w, currents)
    raise ValueError(f"unknown kind {kind!r}")


def family_names(module: FockModule) -> tuple[str, str]:
    if "X1_tilde" in module.currents:
        return "X1_tilde", "X2_tilde"
    return "X1", "X2"


# PBW vectors ------------------------------------------------------------------------------------

def pbw_word(lams: PartitionTuple, module: FockModule, sign: int = -1) -> list:
    """Operator word of |X_lam> (sign=-1), reading left to right."""
    fams = family_names(module)
    word = []
    for i in reversed(range(len(lams))):
        word.extend((fams[i], sign * part) for part in lams[i])
    return word


def pbw_state(module: FockModule, lams: PartitionTuple) -> dict:
    """X^{(N)}_{-lam^N_1} ... X^{(1)}_{-lam^1_1} X^{(1)}_{-lam^1_2} ... |u>."""
    lams = tuple(partition(x) for x in lams)
    hit = module._pbw_cache.get(lams)
    if hit is None:
        hit = module._pbw_cache[lams] = module.apply_word(pbw_word(lams, module), module.vacuum())
    return hit


def pbw_bra(module: FockModule, lams: PartitionTuple) -> dict:
    """<u| ... X^{(1)}_{lam^1_2} X^{(1)}_{lam^1_1} ... X^{(N)}_{lam^N_1}."""
    lams = tuple(partition(x) for x in lams)
    hit = module._pbw_bra_cache.get(lams)
    if hit is None:
        word = list(reversed(pbw_word(lams, module, sign=1)))
        hit = module._pbw_bra_cache[lams] = module.apply_word_bra(module.vacuum(), word)
    return hit


def dvir_pbw_state(module: FockModule, lam: Partition) -> dict:
    fam = next(iter(module.currents))
    return module.apply_word([(fam, -part) for part in lam], module.vacuum())


def dvir_pbw_bra(module: FockModule, lam: Partition) -> dict:
    fam = next(iter(module.currents))
    return module.apply_word_bra(module.vacuum(), [(fam, part) for part in reversed(lam)])


def pbw_matrix(module: FockModule, level: int) -> list:
    """Columns are the PBW vectors expanded in the monomial basis (canonical order)."""
    basis = module.basis(level)
    cols = [module.to_vector(pbw_state(module, lams), level) for lams in basis]
    return linalg.transpose(cols)


def gram_matrix(module: FockModule, level: int) -> list:
    """S_{lam,mu} = <X_lam | X_mu>."""
    basis = module.basis(level)
    kets = [pbw_state(module, lams) for lams in basis]
    bras = [pbw_bra(module, lams) for lams in basis]
    return [[module.pairing(b, kt) for kt in kets] for b in bras]


# Hall-Littlewood forms ------------------------------------------------------------------------

def embed_symfunc(f: SymFunc, combo: dict, nspecies: int) -> dict:
    """Replace p_n by sum_s combo[s] * a^{(s)}_{-n} (coefficients independent of n)."""
    out: dict = {}
    empty = tuple(() for _ in range(nspecies))
    cache: dict = {}

    def power_sum(n):
        if n not in cache:
            st = {}
            for s, c in combo.items():
                key = list(empty)
                key[s] = (n,)
                st[tuple(key)] = c if isinstance(c, RatFunc) else RatFunc.const(c)
            cache[n] = st
        return cache[n]

    for lam, coef in f.coeffs.items():
        st = {empty: coef}
        for n in lam:
            st = state_mul(st, power_sum(n))
        for kk, c in st.items():
            add_into(out, kk, c)
    return out


def pm_basis_states(lam: Partition, mu: Partition, weights: Sequence[RatFunc] | None = None) -> dict:
    """(u1 u2)^{l(mu)} u2^{l(lam)} Q_mu(b^+_{-n}; 1/t) Q_lam(b^-_{-n}; 1/t) |u>.

    b^+_{-n} = b^2_{-n} and b^-_{-n} = -b^1_{-n} + b^2_{-n}.
    """
    u1, u2 = weights if weights is not None else weight_vars(2)
    ti = 1 / t
    plus = embed_symfunc(hall_littlewood_Q(mu, ti), {1: 1}, 2)
    minus = embed_symfunc(hall_littlewood_Q(lam, ti), {0: -1, 1: 1}, 2)
    return state_scale(state_mul(plus, minus), (u1 * u2) ** len(mu) * u2 ** len(lam))


def pm_basis_bra(lam: Partition, mu: Partition, weights: Sequence[RatFunc] | None = None) -> dict:
    """u1^{l(lam)} (u1 u2)^{l(mu)} t^{|lam|+|mu|} <u| Q_lam(b^-_n; 1/t) Q_mu(b^+_n; 1/t).

    b^+_n = b^1_n + b^2_n and b^-_n = b^1_n.
    """
    u1, u2 = weights if weights is not None else weight_vars(2)
    ti = 1 / t
    plus = embed_symfunc(hall_littlewood_Q(mu, ti), {0: 1, 1: 1}, 2)
    minus = embed_symfunc(hall_littlewood_Q(lam, ti), {0: 1}, 2)
    scale = u1 ** len(lam) * (u1 * u2) ** len(mu) * t ** (sum(lam) + sum(mu))
    return state_scale(state_mul(plus, minus), scale)


# commutation relations --------------------------------------------------------------------------

def structure_constants(kind: str, order: int) -> list:
    """f_0..f_order for the structure function of each relation."""
    if kind == "dvir":
        g = lambda n: (1 - q ** n) * (1 - t ** -n) / ((1 + p ** n) * n)
    elif kind == "f1":
        g = lambda n: (1 - q ** n) * (1 - t ** -n) / n
    elif kind == "f2":
        g = lambda n: (1 - q ** n) * (1 - t ** -n) * (1 + p ** n) / n
    else:
        raise ValueError(kind)
    return exp_series(g, order)


class TruncationError(AssertionError):
    pass


def _prod(module, fa, na, fb, nb, st):
    """fa_{na} fb_{nb} applied to st."""
    return module.mode(fa, na, module.mode(fb, nb, st))


def _tail_sum(module, st, level, terms, l_start, coeff):
    """sum_{l >= l_start} coeff(l) * (product term l), truncated by grading.

    ``terms(l)`` returns (fa, na, fb, nb): the right factor fb_{nb} lowers the
    level by nb.  Terms vanish once nb exceeds the level; the first dropped term
    is evaluated to confirm it is zero.
    """
    out: dict = {}
    l = l_start
    while True:
        fa, na, fb, nb = terms(l)
        if nb > level:
            extra = _prod(module, fa, na, fb, nb, st)
            if extra:
                raise TruncationError("dropped tail term does not vanish")
            break
        c = coeff(l)
        if not c.is_zero():
            img = _prod(module, fa, na, fb, nb, st)
            for kk, v in img.items():
                add_into(out, kk, c * v)
        l += 1
    return out


def _commutator(module, fa, n, fb, m, st):
    return state_sub(_prod(module, fa, n, fb, m, st), _prod(module, fb, m, fa, n, st))


def relation_residual(
    module: FockModule, pair: tuple[str, str], n: int, m: int, st: dict, level: int, literal: bool = False
) -> dict:
    """LHS - RHS of the commutation relation [A_n, B_m] applied to a state.

    ``level`` is the truncation cutoff for the infinite sums: a term whose right
    factor lowers the level by more than the cutoff is dropped after checking
    that it annihilates the state.
    """
    fa, fb = pair
    lhs = _commutator(module, fa, n, fb, m, st)
    rhs = _relation_rhs(module, pair, n, m, st, level, literal)
    return state_sub(lhs, rhs)


def _relation_rhs(module, pair, n, m, st, level, literal=False):
    order = level + abs(n) + abs(m) + 3
    if pair == ("T", "T"):
        f = structure_constants("dvir", order)
        a = _tail_sum(module, st, level, lambda l: ("T", n - l, "T", m + l), 1, lambda l: -f[l])
        b = _tail_sum(module, st, level, lambda l: ("T", m - l, "T", n + l), 1, lambda l: f[l])
        out = state_add(a, b)
        if n + m == 0:
            central = -(1 - q) * (1 - 1 / t) / (1 - p) * (p ** n - p ** -n)
            out = state_add(out, state_scale(st, central))
        return out
    if pair == ("X1", "X1"):
        f = structure_constants("f1", order)
        a = _tail_sum(module, st, level, lambda l: ("X1", n - l, "X1", m + l), 1, lambda l: -f[l])
        b = _tail_sum(module, st, level, lambda l: ("X1", m - l, "X1", n + l), 1, lambda l: f[l])
        c = (1 - q) * (1 - 1 / t) / (1 - p) * (p ** m - p ** n)
        return state_add(a, b, state_scale(module.mode("X2", n + m, st), c))
    if pair == ("X2", "X2"):
        f = structure_constants("f2", order)
        a = _tail_sum(module, st, level, lambda l: ("X2", n - l, "X2", m + l), 1, lambda l: -f[l])
        b = _tail_sum(module, st, level, lambda l: ("X2", m - l, "X2", n + l), 1, lambda l: f[l])
        return state_add(a, b)
    if pair == ("X1", "X2"):
        f = structure_constants("f1", order)
        a = _tail_sum(module, st, level, lambda l: ("X1", n - l, "X2", m + l), 1, lambda l: -f[l] * p ** l)
        b = _tail_sum(module, st, level, lambda l: ("X2", m - l, "X1", n + l), 1, lambda l: f[l])
        return state_add(a, b)
    g = 1 - 1 / t
    if pair == ("T_tilde", "T_tilde"):
        return _crystal_dvir_rhs(module, "T_tilde", n, m, st, level)
    if pair == ("X1_tilde", "X1_tilde"):
        return _crystal_x1x1_rhs(module, n, m, st, level, literal)
    if pair == ("X1_tilde", "X2_tilde"):
        A, B = "X1_tilde", "X2_tilde"
        if n > 0:
            return _tail_sum(module, st, level, lambda l: (B, m - l, A, n + l), 1, lambda l: g)
        if n == 0:
            a = _tail_sum(module, st, level, lambda l: (A, -l, B, m + l), 1, lambda l: -g)
            b = _tail_sum(module, st, level, lambda l: (B, m - l, A, l), 1, lambda l: g)
            return state_add(a, b)
        return _tail_sum(module, st, level, lambda l: (A, n - l, B, m + l), 1, lambda l: -g)
    if pair == ("X2_tilde", "X2_tilde"):
        B = "X2_tilde"
        a = _tail_sum(module, st, level, lambda l: (B, n - l, B, m + l), 1, lambda l: -g)
        b = _tail_sum(module, st, level, lambda l: (B, m - l, B, n + l), 1, lambda l: g)
        return state_add(a, b)
    raise ValueError(f"no relation for {pair}")


def _finite_sum(module, st, terms, lo, hi, coeff):
    out: dict = {}
    for l in range(lo, hi + 1):
        fa, na, fb, nb = terms(l)
        img = _prod(module, fa, na, fb, nb, st)
        c = coeff(l)
        for kk, v in img.items():
            add_into(out, kk, c * v)
    return out


def _crystal_dvir_rhs(module, T, n, m, st, level):
    g = 1 - 1 / t
    h = t - 1 / t
    if n == m:
        return {}
    if n < m:
        return state_scale(_crystal_dvir_rhs(module, T, m, n, st, level), -1)
    # now n > m
    if m > 0 or n < 0:
        return _finite_sum(module, st, lambda l: (T, n - l, T, m + l), 1, n - m, lambda l: -g)
    if m == 0:
        a = _finite_sum(module, st, lambda l: (T, n - l, T, l), 1, n, lambda l: -g)
        b = _tail_sum(module, st, level, lambda l: (T, -l, T, n + l), 1, lambda l: -h * t ** -l)
        return state_add(a, b)
    if n == 0:
        a = _finite_sum(module, st, lambda l: (T, -l, T, m + l), 1, -m, lambda l: -g)
        b = _tail_sum(module, st, level, lambda l: (T, m - l, T, l), 1, lambda l: -h * t ** -l)
        return state_add(a, b)
    # n > 0 > m
    a = state_scale(_prod(module, T, m, T, n, st), -g)
    b = _tail_sum(module, st, level, lambda l: (T, m - l, T, n + l), 1, lambda l: -h * t ** -l)
    out = state_add(a, b)
    if n + m == 0:
        out = state_add(out, state_scale(st, g))
    return out


def _crystal_x1x1_rhs(module, n, m, st, level, literal=False):
    """With literal=True the finite sums in the zero-mode cases stop one term early
    (upper limits n-1 and -m-1); that form does not hold on the Fock module."""
    A, B = "X1_tilde", "X2_tilde"
    g = 1 - 1 / t
    cut = 1 if literal else 0
    if n == m:
        return {}
    if n < m:
        return state_scale(_crystal_x1x1_rhs(module, m, n, st, level, literal), -1)
    if m > 0 or n < 0:
        return _finite_sum(module, st, lambda l: (A, n - l, A, m + l), 1, n - m, lambda l: -g)
    if m == 0:
        a = _finite_sum(module, st, lambda l: (A, n - l, A, l), 1, n - cut, lambda l: -g)
        b = _tail_sum(module, st, level, lambda l: (A, -l, A, n + l), 1, lambda l: -g)
        return state_add(a, b, state_scale(module.mode(B, n, st), g))
    if n == 0:
        a = _finite_sum(module, st, lambda l: (A, -l, A, m + l), 1, -m - cut, lambda l: -g)
        b = _tail_sum(module, st, level, lambda l: (A, m - l, A, l), 1, lambda l: -g)
        return state_add(a, b, state_scale(module.mode(B, m, st), g))
    a = _tail_sum(module, st, level, lambda l: (A, m - l, A, n + l), 0, lambda l: -g)
    return state_add(a, state_scale(module.mode(B, n + m, st), g))


RELATION_PAIRS = {
    "T": ("T", "T"),
    "T_tilde": ("T_tilde", "T_tilde"),
    "X1": ("X1", "X1"),
    "X2": ("X2", "X2"),
    "X1X2": ("X1", "X2"),
    "X1_tilde": ("X1_tilde", "X1_tilde"),
    "X2_tilde": ("X2_tilde", "X2_tilde"),
    "X1X2_tilde": ("X1_tilde", "X2_tilde"),
}


def module_for(pair_name: str) -> FockModule:
    if pair_name == "T":
        return dvir_module("generic")
    if pair_name == "T_tilde":
        return dvir_module("crystal")
    if pair_name in ("X1", "X2", "X1X2"):
        return dim_module(2, "generic")
    return dim_module(2, "crystal")


def commutator_check(
    pair_name: str,
    n: int,
    m: int,
    level: int,
    tail_bound: int | None = None,
    module: FockModule | None = None,
    literal: bool = False,
) -> bool:
    """Does the relation for [A_n, B_m] hold on every basis vector of the level?

    Raises TruncationError when a term beyond ``tail_bound`` (default: the
    level) does not annihilate the state.
    """
    module = module or module_for(pair_name)
    pair = RELATION_PAIRS[pair_name]
    cutoff = level if tail_bound is None else tail_bound
    for b in module.basis(level):
        if relation_residual(module, pair, n, m, {b: ONE}, cutoff, literal):
            return False
    return True
