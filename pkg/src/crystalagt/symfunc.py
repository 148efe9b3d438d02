"""Symmetric functions in power-sum coordinates.

A :class:`SymFunc` maps partitions rho to the coefficient of
p_rho = p_{rho_1} p_{rho_2} ...  Macdonald functions come from Gram-Schmidt
over the monomial basis, Hall-Littlewood Q functions from Jing's vertex
operator acting on the polynomial representation b_{-n} = p_n,
b_n = n/(1-t^n) d/dp_n.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import cache
from itertools import product

from . import linalg
from .exactfield import ONE, ZERO, RatFunc, to_text, var
from .partitions import (
    Partition,
    dominates,
    multiplicities,
    n_stat,
    partition,
    partitions_of,
    size,
    z_stat,
)
from .vertex import Heisenberg, VertexOp

DEFAULT_BOUND = 6


class DegreeBoundError(ValueError):
    pass


def check_degree(n: int, bound: int | None) -> None:
    limit = DEFAULT_BOUND if bound is None else bound
    if n > limit:
        raise DegreeBoundError(f"degree {n} exceeds the bound {limit}")


class SymFunc:
    """Finite linear combination of power-sum products p_rho."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Partition, RatFunc] | None = None):
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            c = c if isinstance(c, RatFunc) else RatFunc.const(c)
            if not c.is_zero():
                lam = partition(lam)
                prev = self.coeffs.get(lam)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.coeffs.pop(lam, None)
                else:
                    self.coeffs[lam] = c

    @classmethod
    def p(cls, *parts: int) -> SymFunc:
        return cls({tuple(sorted(parts, reverse=True)): ONE})

    @classmethod
    def one(cls) -> SymFunc:
        return cls({(): ONE})

    def __add__(self, other: SymFunc) -> SymFunc:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SymFunc(out)

    def __neg__(self) -> SymFunc:
        return SymFunc({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def scale(self, c) -> SymFunc:
        c = c if isinstance(c, RatFunc) else RatFunc.const(c)
        return SymFunc({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            out: dict = {}
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    k = tuple(sorted(a + b, reverse=True))
                    out[k] = out[k] + ca * cb if k in out else ca * cb
            return SymFunc(out)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((size(k) for k in self.coeffs), default=0)

    def substitute_p(self, images: Mapping[int, RatFunc] | None = None, *, fn=None) -> RatFunc:
        """Evaluate with p_n -> images[n] (or fn(n))."""
        total = ZERO
        cache: dict = {}
        for lam, c in self.coeffs.items():
            term = c
            for n in lam:
                if n not in cache:
                    cache[n] = images[n] if fn is None else fn(n)
                term = term * cache[n]
            total = total + term
        return total

    def negate_p(self) -> SymFunc:
        """f(-p_n)."""
        return SymFunc({k: (c if len(k) % 2 == 0 else -c) for k, c in self.coeffs.items()})

    def to_state(self, species: int = 0, nspecies: int = 1) -> dict:
        empty = [()] * nspecies
        out = {}
        for lam, c in self.coeffs.items():
            key = list(empty)
            key[species] = lam
            out[tuple(key)] = c
        return out

    @classmethod
    def from_state(cls, state: Mapping, species: int = 0) -> SymFunc:
        return cls({key[species]: c for key, c in state.items()})

    def text(self) -> str:
        items = sorted(self.coeffs.items(), key=lambda kv: (size(kv[0]), kv[0]), reverse=True)
        return " + ".join(f"({to_text(c)})*p{list(k)}" for k, c in items) or "0"

    def __repr__(self):
        return f"SymFunc({self.text()})"


# inner products -------------------------------------------------------------------

def pairing_weight(lam: Partition, q: RatFunc, t: RatFunc) -> RatFunc:
    w = RatFunc.const(z_stat(lam))
    for k in lam:
        w = w * (1 - q ** k) / (1 - t ** k)
    return w


def inner_qt(f: SymFunc, g: SymFunc, q: RatFunc, t: RatFunc) -> RatFunc:
    """<p_lam, p_mu>_{q,t} = z_lam prod (1-q^lam_k)/(1-t^lam_k) delta, extended bilinearly."""
    total = ZERO
    for lam, c in f.coeffs.items():
        d = g.coeffs.get(lam)
        if d is not None:
            total = total + c * d * pairing_weight(lam, q, t)
    return total


def b_lambda(lam: Partition, t: RatFunc) -> RatFunc:
    val = ONE
    for m in multiplicities(lam).values():
        for k in range(1, m + 1):
            val = val * (1 - t ** k)
    return val


# classical bases --------------------------------------------------------------------

def _count_assignments(mu: Partition, lam: Partition) -> int:
    """Number of maps from parts of mu to rows of lam whose fibres sum to lam's parts."""
    count = 0
    L = len(lam)
    for assign in product(range(L), repeat=len(mu)):
        sums = [0] * L
        for part_, row in zip(mu, assign):
            sums[row] += part_
        if tuple(sums) == lam:
            count += 1
    return count


@cache
def _monomial_table(n: int) -> dict:
    """m_lam in power sums for all partitions of n."""
    parts = partitions_of(n)
    # p_mu = sum_lam R[mu][lam] m_lam with R counted by assignments
    R = [[RatFunc.const(_count_assignments(mu, lam)) for lam in parts] for mu in parts]
    inv = linalg.inverse(R)  # m_lam = sum_mu inv[lam][mu] p_mu, since m = R^{-1} p
    return {lam: SymFunc({mu: inv[i][j] for j, mu in enumerate(parts)}) for i, lam in enumerate(parts)}


def monomial(lam: Partition) -> SymFunc:
    lam = partition(lam)
    return _monomial_table(size(lam))[lam]


@cache
def elementary(k: int) -> SymFunc:
    """e_k = sum_{|rho|=k} (-1)^{k-l(rho)} p_rho / z_rho."""
    return SymFunc({rho: RatFunc.const((-1) ** (k - len(rho))) / z_stat(rho) for rho in partitions_of(k)})


def elementary_product(lam: Partition) -> SymFunc:
    out = SymFunc.one()
    for k in lam:
        out = out * elementary(k)
    return out


def basis_convert(coeffs: Mapping[Partition, RatFunc], source: str, target: str) -> dict:
    """Change basis among 'powersum', 'monomial' and 'elementary'.

    ``coeffs`` gives the expansion in the source basis; the result is the
    expansion in the target basis.
    """
    builders = {"powersum": lambda lam: SymFunc.p(*lam), "monomial": monomial, "elementary": elementary_product}
    if source not in builders or target not in builders:
        raise ValueError("basis must be powersum, monomial or elementary")
    f = SymFunc()
    for lam, c in coeffs.items():
        f = f + builders[source](partition(lam)).scale(c)
    if target == "powersum":
        return dict(f.coeffs)
    out = {}
    for n in sorted({size(k) for k in f.coeffs}):
        parts = partitions_of(n)
        cols = [builders[target](lam) for lam in parts]
        A = [[col.coeffs.get(rho, ZERO) for col in cols] for rho in parts]
        b = [f.coeffs.get(rho, ZERO) for rho in parts]
        x = linalg.solve_vector(A, b)
        out.update({lam: c for lam, c in zip(parts, x) if not c.is_zero()})
    return out


# Macdonald ---------------------------------------------------------------------------

def _default_qt(q, t):
    return (var("q") if q is None else q), (var("t") if t is None else t)


_MAC_CACHE: dict = {}


def macdonald_family(n: int, q: RatFunc | None = None, t: RatFunc | None = None, bound: int | None = None) -> dict:
    """All P_lam(q,t) with |lam| = n, by Gram-Schmidt in reverse-lex order."""
    check_degree(n, bound)
    q, t = _default_qt(q, t)
    key = (n, q, t)
    fam = _MAC_CACHE.get(key)
    if fam is not None:
        return fam
    fam = {}
    done = []
    for lam in reversed(partitions_of(n)):  # (1^n) first
        P = monomial(lam)
        for mu, Pmu, norm in done:
            c = inner_qt(monomial(lam), Pmu, q, t) / norm
            if not c.is_zero():
                P = P - Pmu.scale(c)
        fam[lam] = P
        done.append((lam, P, inner_qt(P, P, q, t)))
    _MAC_CACHE[key] = fam
    return fam


def macdonald_P(lam: Partition, q: RatFunc | None = None, t: RatFunc | None = None, bound: int | None = None) -> SymFunc:
    lam = partition(lam)
    return macdonald_family(size(lam), q, t, bound)[lam]


def monomial_coefficients(f: SymFunc) -> dict:
    return basis_convert(f.coeffs, "powersum", "monomial")


# Jing operators and Hall-Littlewood functions ---------------------------------------------

_JING: dict = {}


def jing_heisenberg(t: RatFunc) -> Heisenberg:
    return Heisenberg([lambda n: 1 / (1 - t ** n)])


def jing_operator(t: RatFunc, dagger: bool = False) -> tuple[VertexOp, Heisenberg]:
    """H(z) or its dual, on bosons with [b_n, b_-n] = n/(1-t^n)."""
    key = (t, dagger)
    hit = _JING.get(key)
    if hit is None:
        s = -1 if dagger else 1
        op = VertexOp(
            (lambda n: s * (1 - t ** n) / n,),
            (lambda n: -s * (1 - t ** n) / n,),
            name="Hdag" if dagger else "H",
        )
        hit = _JING[key] = (op, jing_heisenberg(t))
    return hit


def jing_apply(mode: int, f: SymFunc, t: RatFunc, dagger: bool = False) -> SymFunc:
    op, heis = jing_operator(t, dagger)
    return SymFunc.from_state(op.mode(mode, f.to_state(), heis))


_HL: dict = {}


def hall_littlewood_Q(lam: Partition, t: RatFunc | None = None, bound: int | None = None) -> SymFunc:
    """Q_lam = H_{-lam_1} H_{-lam_2} ... 1."""
    lam = partition(lam)
    check_degree(size(lam), bound)
    t = var("t") if t is None else t
    key = (lam, t)
    hit = _HL.get(key)
    if hit is None:
        f = SymFunc.one()
        for part_ in reversed(lam):
            f = jing_apply(-part_, f, t)
        hit = _HL[key] = f
    return hit


def hall_littlewood_P(lam: Partition, t: RatFunc | None = None, bound: int | None = None) -> SymFunc:
    t = var("t") if t is None else t
    return hall_littlewood_Q(lam, t, bound).scale(1 / b_lambda(partition(lam), t))


def principal_specialize(f: SymFunc, r: RatFunc, t: RatFunc) -> RatFunc:
    """p_n -> (1-r^n)/(1-t^n)."""
    return f.substitute_p(fn=lambda n: (1 - r ** n) / (1 - t ** n))


def hl_pairing_signed(lam: Partition, mu: Partition, t: RatFunc | None = None) -> RatFunc:
    """<Q_lam(-p;t), Q_mu(p;t)>_{0,t}."""
    t = var("t") if t is None else t
    return inner_qt(hall_littlewood_Q(lam, t).negate_p(), hall_littlewood_Q(mu, t), ZERO, t)


def hl_pairing(lam: Partition, mu: Partition, t: RatFunc | None = None) -> RatFunc:
    t = var("t") if t is None else t
    return inner_qt(hall_littlewood_Q(lam, t), hall_littlewood_Q(mu, t), ZERO, t)


def fact_a2_rhs(lam: Partition, r: RatFunc, t: RatFunc) -> RatFunc:
    """t^{n(lam)} prod_{i=1}^{l(lam)} (1 - t^{1-i} r)."""
    val = t ** n_stat(lam)
    for i in range(1, len(lam) + 1):
        val = val * (1 - t ** (1 - i) * r)
    return val


def is_dominance_triangular(lam: Partition, f: SymFunc) -> bool:
    """Monomial coefficients of f vanish outside {mu <= lam}, with 1 at lam."""
    coeffs = monomial_coefficients(f)
    if coeffs.get(lam) != ONE:
        return False
    return all(dominates(lam, mu) for mu in coeffs)


__all__ = [
    "DEFAULT_BOUND",
    "DegreeBoundError",
    "SymFunc",
    "b_lambda",
    "basis_convert",
    "elementary",
    "fact_a2_rhs",
    "hall_littlewood_P",
    "hall_littlewood_Q",
    "hl_pairing",
    "hl_pairing_signed",
    "inner_qt",
    "jing_apply",
    "jing_operator",
    "macdonald_P",
    "macdonald_family",
    "monomial",
    "principal_specialize",
]
