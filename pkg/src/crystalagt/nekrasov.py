"""Nekrasov factors and instanton partition functions, generic and crystallized."""

from __future__ import annotations

from collections.abc import Sequence
from functools import cache
from itertools import product

from .exactfield import ONE, ZERO, RatFunc, limit_to_zero, substitute, var
from .partitions import (
    Partition,
    cells,
    check_partition,
    conjugate,
    enumerate_tuples,
    part,
)

q, t, Q = var("q"), var("t"), var("Q")
p = q / t


def _arm(lam, i, j):
    return part(lam, i) - j


def _leg(lam, i, j):
    return part(conjugate(lam), j) - i


def nekrasov_factor(lam: Partition, mu: Partition, Qv: RatFunc, which: str = "generic") -> RatFunc:
    """N_{lam mu}(Q) (generic) or its crystal counterpart (which="tilde")."""
    lam, mu = tuple(lam), tuple(mu)
    if which == "generic":
        out = ONE
        for i, j in cells(lam):
            out = out * (1 - Qv * q ** _arm(lam, i, j) * t ** (_leg(mu, i, j) + 1))
        for i, j in cells(mu):
            out = out * (1 - Qv * q ** (-_arm(mu, i, j) - 1) * t ** (-_leg(lam, i, j)))
        return out
    if which == "tilde":
        chk = check_partition(mu)
        chk_cells = set(cells(chk))
        out = (-Qv / t) ** len(chk_cells)
        for i, j in chk_cells:
            out = out * t ** (-_leg(lam, i, j))
        for i, j in cells(mu):
            if (i, j) not in chk_cells:
                out = out * (1 - Qv * t ** (-_leg(lam, i, j) - 1))
        return out
    raise ValueError(f"unknown kind {which!r}")


def nekrasov_limit(lam: Partition, mu: Partition, Qv: RatFunc = Q) -> RatFunc:
    """lim_{q -> 0} q^{n(mu')} N_{lam mu}((q/t) Q)."""
    from .partitions import n_stat

    return limit_to_zero(q ** n_stat(conjugate(mu)) * nekrasov_factor(lam, mu, p * Qv), "q")


# pure SU(2) ------------------------------------------------------------------------------------

def z_pure_term(lam: Partition, mu: Partition) -> RatFunc:
    """Coefficient of Lambda^{4(|lam|+|mu|)} contributed by (lam, mu), with (t/q)^n kept inside."""
    n = sum(lam) + sum(mu)
    den = (
        nekrasov_factor(lam, lam, ONE)
        * nekrasov_factor(lam, mu, Q)
        * nekrasov_factor(mu, mu, ONE)
        * nekrasov_factor(mu, lam, 1 / Q)
    )
    return (t / q) ** n / den


@cache
def z_pure(order: int) -> tuple[RatFunc, ...]:
    """Coefficients of Lambda^{4n}, n = 0..order."""
    out = []
    for n in range(order + 1):
        s = ZERO
        for lam, mu in enumerate_tuples(n, 2):
            s = s + z_pure_term(lam, mu)
        out.append(s)
    return tuple(out)


def z_tilde_term(n: int, m: int, Qv: RatFunc = Q) -> RatFunc:
    den = ONE
    for s in range(1, n + 1):
        den = den * (1 - t ** -s) * (1 - t ** (n - m - s) / Qv)
    for s in range(1, m + 1):
        den = den * (1 - t ** -s) * (1 - Qv * t ** (m - n - s))
    return 1 / den


@cache
def z_tilde_pure(order: int) -> tuple[RatFunc, ...]:
    """Coefficients of tilde-Lambda^{4N}, N = 0..order."""
    out = []
    for N in range(order + 1):
        s = ZERO
        for n in range(N + 1):
            s = s + z_tilde_term(n, N - n)
        out.append(s)
    return tuple(out)


def pole_order_E(lam: Partition, mu: Partition) -> int:
    """E_{lam mu} = 2 (sum_lam j + sum_mu j - |lam| - |mu|)."""
    return 2 * (sum(j for _, j in cells(lam)) + sum(j for _, j in cells(mu)) - sum(lam) - sum(mu))


def is_single_column(lam: Partition) -> bool:
    return all(x == 1 for x in lam)


def z_pure_limit_terms(n: int) -> dict:
    """lim_{q->0} of each (lam, mu) term with Lambda^4 = tilde-Lambda^4 t/q.

    Returns {(lam, mu): (limit, q-valuation)} where the valuation is the exponent
    of the leading power of q in the renormalized term.
    """
    from .exactfield import valuation

    out = {}
    for lam, mu in enumerate_tuples(n, 2):
        term = z_pure_term(lam, mu) * (t / q) ** n
        out[(lam, mu)] = (limit_to_zero(term, "q"), valuation(term, "q"))
    return out


def z_pure_limit(order: int) -> tuple[RatFunc, ...]:
    """Termwise q -> 0 limit of z_pure after Lambda^4 := tilde-Lambda^4 t/q."""
    out = []
    for n in range(order + 1):
        s = ZERO
        for lim, _ in z_pure_limit_terms(n).values():
            s = s + lim
        out.append(s)
    return tuple(out)


def antisymmetry_term(n: int, m: int, M: int) -> RatFunc:
    """Z^{(M)}_{(n,m)} from the residue computation of the crystal partition function."""
    if m + M < 0 or n - M < 0:
        raise ValueError("need m + M >= 0 and n - M >= 0")
    den = ONE
    for s in range(1, n + 1):
        den = den * (1 - t ** -s)
    for s in range(1, m + M + 1):
        den = den * (1 - t ** -s)
    for s in range(1, m + 1):
        den = den * (1 - t ** s)
    for s in range(1, n - M + 1):
        den = den * (1 - t ** s)
    return t ** ((n - M) * m) * (t ** (m + M) - t ** n) / den


def residue_at(n: int, m: int, M: int) -> RatFunc:
    """Res_{Q = t^M} of the (n, m) summand, computed directly (used as an oracle)."""
    term = z_tilde_term(n, m)
    # multiply by (Q - t^M) and evaluate at Q = t^M
    f = term * (Q - t ** M)
    return substitute(f, {"Q": t ** M})


# N_f = 4 ---------------------------------------------------------------------------------------

def _vars(prefix: str, primed: bool = False):
    suffix = "p" if primed else ""
    return var(f"{prefix}1{suffix}"), var(f"{prefix}2{suffix}")


def z_nf4_term(lams: Sequence[Partition], u, v, w) -> RatFunc:
    """Summand of the N_f = 4 partition function without the expansion variable."""
    num = ONE
    den = ONE
    for i, j in product(range(2), repeat=2):
        num = num * nekrasov_factor((), lams[j], q * w[i] / (t * v[j]))
        num = num * nekrasov_factor(lams[i], (), q * v[i] / (t * u[j]))
        den = den * nekrasov_factor(lams[i], lams[j], q * v[i] / (t * v[j]))
    return num / den


def z_nf4(order: int, scaled: dict | None = None) -> list[RatFunc]:
    """Coefficients of (u1 u2 z1 / (w1 w2 z2))^n.

    ``scaled`` = {"M": (M1, M2, M3, M4), "A": (A1, A2)} substitutes
    u_i = p^{-M_i} u_i', v_i = p^{-A_i} v_i', w_i = p^{-M_{i+2}} w_i' and takes the
    termwise q -> 0 limit (a pole raises PoleError).
    """
    if scaled is None:
        u, v, w = _vars("u"), _vars("v"), _vars("w")
    else:
        M, A = scaled["M"], scaled["A"]
        check_exponents(M, A)
        up, vp, wp = _vars("u", True), _vars("v", True), _vars("w", True)
        u = (p ** -M[0] * up[0], p ** -M[1] * up[1])
        v = (p ** -A[0] * vp[0], p ** -A[1] * vp[1])
        w = (p ** -M[2] * wp[0], p ** -M[3] * wp[1])
    out = []
    for n in range(order + 1):
        s = ZERO
        for lams in enumerate_tuples(n, 2):
            term = z_nf4_term(lams, u, v, w)
            if scaled is not None:
                term = limit_to_zero(term, "q")
            s = s + term
        out.append(s)
    return out


def z_nf4_scaled_terms(n: int, M, A) -> dict:
    """Nonzero limits of the individual scaled summands at level n."""
    check_exponents(M, A)
    up, vp, wp = _vars("u", True), _vars("v", True), _vars("w", True)
    u = (p ** -M[0] * up[0], p ** -M[1] * up[1])
    v = (p ** -A[0] * vp[0], p ** -A[1] * vp[1])
    w = (p ** -M[2] * wp[0], p ** -M[3] * wp[1])
    out = {}
    for lams in enumerate_tuples(n, 2):
        lim = limit_to_zero(z_nf4_term(lams, u, v, w), "q")
        if not lim.is_zero():
            out[lams] = lim
    return out


def check_exponents(M: Sequence[int], A: Sequence[int]) -> None:
    """M_i + 1 > A_j > M_{k+2} for all i, j, k and A_1 = A_2."""
    if len(M) != 4 or len(A) != 2:
        raise ValueError("need four M exponents and two A exponents")
    if A[0] != A[1]:
        raise ValueError("need A1 = A2")
    for a in A:
        if not all(m + 1 > a for m in M[:2]) or not all(a > m for m in M[2:]):
            raise ValueError(f"exponents M={tuple(M)}, A={tuple(A)} violate M_i+1 > A_j > M_(k+2)")
