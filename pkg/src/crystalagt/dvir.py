"""Whittaker sector of the deformed Virasoro algebra and of its crystal limit."""

from __future__ import annotations

from functools import cache

from . import linalg
from .exactfield import ONE, ZERO, RatFunc, substitute_square, var
from .fock import dvir_module, dvir_pbw_bra, dvir_pbw_state
from .partitions import partitions_of
from .symfunc import b_lambda
from .vertex import state_add, state_scale, state_sub

t = var("t")

_MODULES: dict = {}


def module(which: str):
    if which not in _MODULES:
        _MODULES[which] = dvir_module(which)
    return _MODULES[which]


def _family(which: str) -> str:
    return "T" if which == "generic" else "T_tilde"


@cache
def _kac(level: int, which: str) -> tuple:
    mod = module(which)
    parts = partitions_of(level)
    kets = [dvir_pbw_state(mod, mu) for mu in parts]
    bras = [dvir_pbw_bra(mod, lam) for lam in parts]
    return tuple(tuple(mod.pairing(b, k) for k in kets) for b in bras)


def kac_matrix(level: int, which: str = "generic") -> list:
    """B_{lam mu} = <h| T_lam T_{-mu} |h> over partitions of the level (reverse-lex order)."""
    mat = [list(row) for row in _kac(level, which)]
    if which == "crystal" and not linalg.is_diagonal(mat):
        raise AssertionError("crystal Kac matrix is not diagonal")
    return mat


def crystal_kac_closed(level: int, inverse: bool = False) -> list:
    """diag(b_lam(1/t)), the pairing implied by the Hall-Littlewood forms of the
    PBW vectors; inverse=True gives diag(1/b_lam(1/t))."""
    parts = partitions_of(level)
    diag = [b_lambda(lam, 1 / t) for lam in parts]
    if inverse:
        diag = [1 / x for x in diag]
    return [[diag[i] if i == j else ZERO for j in range(len(parts))] for i in range(len(parts))]


@cache
def _whittaker_column(level: int, which: str) -> tuple:
    """B^{lam,(1^n)}: the (1^n) column of the inverse Kac matrix."""
    parts = partitions_of(level)
    target = [ONE if lam == (1,) * level else ZERO for lam in parts]
    if which == "crystal":
        diag = kac_matrix(level, which)
        return tuple(x / diag[i][i] for i, x in enumerate(target))
    return tuple(linalg.solve_vector(kac_matrix(level, which), target))


def whittaker_norm(level: int, which: str = "generic") -> list[RatFunc]:
    """Coefficients of Lambda^{4n} in <G|G> for n = 0..level."""
    out = []
    for n in range(level + 1):
        col = _whittaker_column(n, which)
        out.append(col[-1])  # (1^n) is last in reverse-lex order
    return out


def whittaker_vector(level: int, which: str = "generic") -> dict:
    """Level-n component of |G>, without its Lambda^{2n} factor."""
    mod = module(which)
    col = _whittaker_column(level, which)
    out: dict = {}
    for lam, c in zip(partitions_of(level), col):
        if not c.is_zero():
            out = state_add(out, state_scale(dvir_pbw_state(mod, lam), c))
    return out


def whittaker_property(level: int, which: str = "generic") -> bool:
    """T_1 G_n = G_{n-1} and T_m G_n = 0 (1 < m <= n) for n <= level."""
    mod = module(which)
    fam = _family(which)
    for n in range(1, level + 1):
        g = whittaker_vector(n, which)
        if state_sub(mod.mode(fam, 1, g), whittaker_vector(n - 1, which)):
            return False
        for m in range(2, n + 1):
            if mod.mode(fam, m, g):
                return False
    return True


def norm_in_Q(level: int) -> list[RatFunc]:
    """Generic Whittaker norm coefficients with k^2 replaced by Q."""
    return [substitute_square(c, "k", var("Q")) for c in whittaker_norm(level, "generic")]
