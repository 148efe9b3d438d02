"""Multi-species boson Fock spaces and normal-ordered exponential operators.

A state is a dict mapping a key to a RatFunc coefficient.  The key is a tuple
with one partition per boson species and stands for the monomial
prod_s a^{(s)}_{-rho^{(s)}} |0>.  A bra uses the same keys for
<0| prod_s a^{(s)}_{rho^{(s)}}.

Annihilators act as derivations, a_n = n kappa_n d/dp_n with p_n = a_{-n}, so
the annihilation exponential of a vertex operator is a translation of the
power sums.  Bras are handled through the anti-involution a_n -> a_{-n}, under
which the transpose of the mode V_m is the mode V'_{-m} of the operator whose
creation and annihilation data are swapped.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial

from .exactfield import ONE, ZERO, RatFunc
from .partitions import partitions_of

Key = tuple[tuple[int, ...], ...]
State = dict


def merge_parts(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def merge_keys(k1: Key, k2: Key) -> Key:
    return tuple(merge_parts(a, b) for a, b in zip(k1, k2))


def key_level(key: Key) -> int:
    return sum(sum(lam) for lam in key)


def add_into(acc: dict, key, coeff: RatFunc) -> None:
    if coeff.is_zero():
        return
    prev = acc.get(key)
    if prev is None:
        acc[key] = coeff
    else:
        s = prev + coeff
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def state_add(*states: dict) -> dict:
    out: dict = {}
    for st in states:
        for k, c in st.items():
            add_into(out, k, c)
    return out


def state_scale(state: dict, c) -> dict:
    c = RatFunc.const(c) if not isinstance(c, RatFunc) else c
    if c.is_zero():
        return {}
    if c.is_one():
        return dict(state)
    return {k: v * c for k, v in state.items()}


def state_sub(a: dict, b: dict) -> dict:
    return state_add(a, state_scale(b, -1))


def state_combination(terms: Iterable[tuple[RatFunc, dict]]) -> dict:
    out: dict = {}
    for c, st in terms:
        if c.is_zero():
            continue
        for k, v in st.items():
            add_into(out, k, c * v)
    return out


def state_level(state: dict) -> int | None:
    levels = {key_level(k) for k in state}
    if len(levels) > 1:
        raise ValueError("state is not homogeneous")
    return levels.pop() if levels else None


def vacuum(nspecies: int) -> dict:
    return {tuple(() for _ in range(nspecies)): ONE}


def basis_keys(level: int, nspecies: int) -> list[Key]:
    """Monomial keys of a level, species-major with partitions in reverse-lex order."""
    from .partitions import enumerate_tuples

    return list(enumerate_tuples(level, nspecies))


class Heisenberg:
    """N commuting Heisenberg algebras with [a_m, a_n] = m kappa_s(|m|) delta_{m+n,0}."""

    def __init__(self, kappas: Sequence[Callable[[int], RatFunc]]):
        self.kappas = tuple(kappas)
        self.nspecies = len(self.kappas)
        self._kappa: dict = {}
        self._norm: dict = {}

    def kappa(self, s: int, n: int) -> RatFunc:
        key = (s, n)
        val = self._kappa.get(key)
        if val is None:
            val = self._kappa[key] = self.kappas[s](n)
        return val

    def norm(self, key: Key) -> RatFunc:
        """<0| a_rho a_{-rho} |0> for the monomial key rho."""
        val = self._norm.get(key)
        if val is None:
            val = ONE
            for s, lam in enumerate(key):
                counts: dict = {}
                for p in lam:
                    counts[p] = counts.get(p, 0) + 1
                for n, m in counts.items():
                    val = val * (self.kappa(s, n) * n) ** m * factorial(m)
            self._norm[key] = val
        return val

    def vacuum(self) -> dict:
        return vacuum(self.nspecies)

    def pairing(self, bra: dict, ket: dict) -> RatFunc:
        total = ZERO
        small, large = (bra, ket) if len(bra) <= len(ket) else (ket, bra)
        for k, c in small.items():
            d = large.get(k)
            if d is not None:
                total = total + c * d * self.norm(k)
        return total

    def create(self, s: int, n: int, state: dict) -> dict:
        """a^{(s)}_{-n} with n >= 1."""
        out: dict = {}
        for key, c in state.items():
            new = list(key)
            new[s] = merge_parts(key[s], (n,))
            add_into(out, tuple(new), c)
        return out

    def annihilate(self, s: int, n: int, state: dict) -> dict:
        """a^{(s)}_n with n >= 1, i.e. n kappa_n d/dp_n."""
        out: dict = {}
        kn = self.kappa(s, n) * n
        for key, c in state.items():
            m = key[s].count(n)
            if m == 0:
                continue
            parts = list(key[s])
            parts.remove(n)
            new = list(key)
            new[s] = tuple(parts)
            add_into(out, tuple(new), c * kn * m)
        return out

    def mode(self, s: int, n: int, state: dict) -> dict:
        if n < 0:
            return self.create(s, -n, state)
        if n > 0:
            return self.annihilate(s, n, state)
        raise ValueError("zero mode of a boson is not represented")

    def mode_bra(self, s: int, n: int, bra: dict) -> dict:
        """<bra| a^{(s)}_n, via the anti-involution a_n -> a_{-n}."""
        return self.mode(s, -n, bra)


Coeffs = Callable[[int], RatFunc]


@dataclass(eq=False)
class VertexOp:
    """zero * exp(sum_s sum_n c^s_n a^s_{-n} z^n) exp(sum_s sum_n d^s_n a^s_n z^{-n}).

    ``creation`` and ``annihilation`` hold one coefficient function per species
    (``None`` when the species does not occur).  Modes follow V(z) = sum_m V_m z^{-m}.
    """

    creation: tuple
    annihilation: tuple
    zero: RatFunc = ONE
    name: str = ""
    _c: dict = field(default_factory=dict, repr=False)
    _d: dict = field(default_factory=dict, repr=False)
    _ctab: dict = field(default_factory=dict, repr=False)
    _atab: dict = field(default_factory=dict, repr=False)

    @property
    def nspecies(self) -> int:
        return len(self.creation)

    def c(self, s: int, n: int) -> RatFunc:
        key = (s, n)
        val = self._c.get(key)
        if val is None:
            f = self.creation[s]
            val = self._c[key] = ZERO if f is None else f(n)
        return val

    def d(self, s: int, n: int) -> RatFunc:
        key = (s, n)
        val = self._d.get(key)
        if val is None:
            f = self.annihilation[s]
            val = self._d[key] = ZERO if f is None else f(n)
        return val

    def transpose(self) -> VertexOp:
        return VertexOp(self.annihilation, self.creation, self.zero, self.name + "^T")

    def times(self, scalar) -> VertexOp:
        return VertexOp(self.creation, self.annihilation, self.zero * scalar, self.name)

    def rescaled(self, alpha: RatFunc) -> VertexOp:
        """The operator V(alpha z)."""
        cre = tuple(None if f is None else _scaled(f, alpha, 1) for f in self.creation)
        ann = tuple(None if f is None else _scaled(f, alpha, -1) for f in self.annihilation)
        return VertexOp(cre, ann, self.zero, self.name)

    # tables ---------------------------------------------------------------
    def creation_table(self, J: int) -> list[tuple[Key, RatFunc]]:
        """Coefficient of z^J in the creation exponential, as (key, coeff) pairs."""
        tab = self._ctab.get(J)
        if tab is not None:
            return tab
        tab = []
        active = [s for s in range(self.nspecies) if self.creation[s] is not None]
        from .partitions import compositions

        empty = tuple(() for _ in range(self.nspecies))
        if J == 0:
            tab = [(empty, ONE)]
        elif active:
            for sizes in compositions(J, len(active)):
                per_species = []
                for s, sz in zip(active, sizes):
                    opts = []
                    for lam in partitions_of(sz):
                        coef = _exp_coeff(lam, lambda n, s=s: self.c(s, n))
                        if not coef.is_zero():
                            opts.append((lam, coef))
                    per_species.append(opts)
                for choice in product(*per_species):
                    key = list(empty)
                    coef = ONE
                    for s, (lam, cf) in zip(active, choice):
                        key[s] = lam
                        coef = coef * cf
                    tab.append((tuple(key), coef))
        self._ctab[J] = tab
        return tab

    def annihilation_table(self, key: Key, heis: Heisenberg) -> list[tuple[int, Key, RatFunc]]:
        """Translation p_n -> p_n + n kappa_n d_n z^{-n} applied to a monomial."""
        tab = self._atab.get((key, id(heis)))
        if tab is not None:
            return tab
        per_species = []
        for s, lam in enumerate(key):
            if self.annihilation[s] is None or not lam:
                per_species.append([(0, lam, ONE)])
                continue
            counts: dict = {}
            for p in lam:
                counts[p] = counts.get(p, 0) + 1
            items = sorted(counts.items(), reverse=True)
            opts = []
            for ks in product(*(range(m + 1) for _, m in items)):
                coef = ONE
                removed = 0
                rest = []
                for (n, m), k in zip(items, ks):
                    if k:
                        shift = self.d(s, n) * heis.kappa(s, n) * n
                        coef = coef * shift ** k * comb(m, k)
                        removed += n * k
                    rest.extend([n] * (m - k))
                if not coef.is_zero():
                    opts.append((removed, tuple(rest), coef))
            per_species.append(opts)
        tab = []
        for choice in product(*per_species):
            removed = sum(c[0] for c in choice)
            coef = ONE
            for c in choice:
                coef = coef * c[2]
            tab.append((removed, tuple(c[1] for c in choice), coef))
        self._atab[(key, id(heis))] = tab
        return tab

    # action ---------------------------------------------------------------
    def mode(self, m: int, state: dict, heis: Heisenberg) -> dict:
        """Apply V_m, the coefficient of z^{-m}."""
        out: dict = {}
        for key, c in state.items():
            for removed, rest, ac in self.annihilation_table(key, heis):
                J = removed - m
                if J < 0:
                    continue
                base = c * ac * self.zero
                for ckey, cc in self.creation_table(J):
                    add_into(out, merge_keys(rest, ckey), base * cc)
        return out

    def mode_bra(self, m: int, bra: dict, heis: Heisenberg) -> dict:
        """<bra| V_m."""
        t = self.__dict__.get("_transpose")
        if t is None:
            t = self.transpose()
            self.__dict__["_transpose"] = t
        return t.mode(-m, bra, heis)


def _scaled(f: Coeffs, alpha: RatFunc, sign: int) -> Coeffs:
    return lambda n: f(n) * alpha ** (sign * n)


def _exp_coeff(lam: tuple[int, ...], coeff: Callable[[int], RatFunc]) -> RatFunc:
    """Coefficient of p_lam in exp(sum_n coeff(n) p_n)."""
    counts: dict = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    val = ONE
    for n, m in counts.items():
        c = coeff(n)
        if c.is_zero():
            return ZERO
        val = val * c ** m / factorial(m)
    return val


def normal_product(*ops: VertexOp, name: str = "") -> VertexOp:
    """:V_1(z) V_2(z) ... : as a single exponential (coefficients add)."""
    ns = ops[0].nspecies

    def combine(getter, s):
        fs = [getter(op)[s] for op in ops if getter(op)[s] is not None]
        if not fs:
            return None
        if len(fs) == 1:
            return fs[0]
        return lambda n: sum((f(n) for f in fs), ZERO)

    cre = tuple(combine(lambda op: op.creation, s) for s in range(ns))
    ann = tuple(combine(lambda op: op.annihilation, s) for s in range(ns))
    zero = ONE
    for op in ops:
        zero = zero * op.zero
    return VertexOp(cre, ann, zero, name)


@dataclass(eq=False)
class Current:
    """A finite sum of vertex operators, each optionally gated on the mode sign.

    ``terms`` holds (op, gate) with gate one of None, "le0" (mode <= 0) or
    "ge0" (mode >= 0).
    """

    terms: list
    name: str = ""

    def active(self, m: int):
        for op, gate in self.terms:
            if gate == "le0" and m > 0:
                continue
            if gate == "ge0" and m < 0:
                continue
            yield op

    def mode(self, m: int, state: dict, heis: Heisenberg) -> dict:
        return state_add(*(op.mode(m, state, heis) for op in self.active(m)))

    def mode_bra(self, m: int, bra: dict, heis: Heisenberg) -> dict:
        return state_add(*(op.mode_bra(m, bra, heis) for op in self.active(m)))


def state_mul(a: dict, b: dict) -> dict:
    """Product of two creation polynomials (keys multiply by merging)."""
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            add_into(out, merge_keys(k1, k2), c1 * c2)
    return out


def exp_series(g: Callable[[int], RatFunc], order: int) -> list[RatFunc]:
    """Coefficients f_0..f_order of exp(sum_{n>=1} g(n) z^n)."""
    f = [ONE]
    gs = [ZERO] + [g(n) for n in range(1, order + 1)]
    for n in range(1, order + 1):
        s = ZERO
        for k in range(1, n + 1):
            if not gs[k].is_zero():
                s = s + gs[k] * f[n - k] * k
        f.append(s / n)
    return f
