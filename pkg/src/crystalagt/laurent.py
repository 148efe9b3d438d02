"""Iterated contour integrals evaluated as coefficients of formal Laurent expansions.

Every integration variable carries an integer weight: its modulus behaves like
eps**weight as eps -> 0, so a smaller weight means a larger modulus.  Parameters
(anything that is not an integration variable) have weight 0.  Each binomial
factor a + b is written as (dominant term) * (1 + ratio) with the ratio of
strictly positive weight, and expanded as a binomial series.  Positive weights
bound the number of expansion terms that can reach the target monomial.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .exactfield import ONE, ZERO, RatFunc, var
from .partitions import Partition, n_stat

t = var("t")


class ExpansionError(ValueError):
    """A factor has no dominant term under the declared magnitudes."""


@dataclass(frozen=True)
class Term:
    """coeff * prod v**exps[v] over integration variables."""

    coeff: RatFunc
    exps: tuple = ()  # sorted ((name, exponent), ...)

    @staticmethod
    def of(coeff, **exps) -> Term:
        c = coeff if isinstance(coeff, RatFunc) else ONE * coeff
        return Term(c, tuple(sorted((k, e) for k, e in exps.items() if e)))

    def exp_map(self) -> dict:
        return dict(self.exps)


@dataclass(frozen=True)
class Factor:
    """(a + b) ** power."""

    a: Term
    b: Term
    power: int = 1


@dataclass
class ContourSpec:
    """Integral of prod factors * prod v**exponents[v] against prod dv/(2 pi i v).

    ``weights`` maps each integration variable to its magnitude weight.
    """

    weights: dict
    factors: list = field(default_factory=list)
    exponents: dict = field(default_factory=dict)
    coeff: RatFunc = ONE


def ordering_weights(order: Sequence[str], anchor: str | None = None) -> dict:
    """Weights from a list ordered by decreasing modulus.

    If ``anchor`` (a parameter, such as x) appears in the list it gets weight 0
    and the others are numbered relative to it; the anchor is then dropped.
    """
    base = order.index(anchor) if anchor is not None else -1
    return {name: i - base for i, name in enumerate(order) if name != anchor}


def _weight(term: Term, weights: Mapping[str, int]) -> int:
    return sum(weights.get(v, 0) * e for v, e in term.exps)


def _integrated(term: Term, weights: Mapping[str, int]) -> bool:
    return any(v in weights for v, _ in term.exps)


def _mono_mul(x: dict, y: Mapping, k: int = 1) -> dict:
    out = dict(x)
    for v, e in y.items():
        out[v] = out.get(v, 0) + k * e
        if out[v] == 0:
            del out[v]
    return out


def _binom(p: int, n: int) -> int:
    num, den = 1, 1
    for i in range(n):
        num *= p - i
        den *= i + 1
    return num // den


def contour_coefficient(spec: ContourSpec) -> RatFunc:
    """Constant term of prod factors * prod v**exponents in the ordered expansion.

    Raises
    ------
    ExpansionError
        If a factor involving an integration variable has two terms of equal weight.
    """
    w = spec.weights
    coeff = spec.coeff
    base = {v: e for v, e in spec.exponents.items() if e}
    series = []  # (ratio coeff, ratio exps, ratio weight, power)
    for f in spec.factors:
        wa, wb = _weight(f.a, w), _weight(f.b, w)
        if wa == wb:
            if _integrated(f.a, w) or _integrated(f.b, w):
                raise ExpansionError(f"no dominant term in factor {f}")
            if f.a.exps or f.b.exps:
                raise ExpansionError(f"non-integration monomial in factor {f}")
            val = f.a.coeff + f.b.coeff
            if val.is_zero() and f.power < 0:
                raise ZeroDivisionError(f"factor {f} vanishes")
            coeff = coeff * val ** f.power
            continue
        lead, other = (f.a, f.b) if wa < wb else (f.b, f.a)
        coeff = coeff * lead.coeff ** f.power
        base = _mono_mul(base, lead.exp_map(), f.power)
        ratio_exps = _mono_mul(other.exp_map(), lead.exp_map(), -1)
        series.append((other.coeff / lead.coeff, ratio_exps, abs(wa - wb), f.power))
    budget = -sum(w.get(v, 0) * e for v, e in base.items())
    if budget < 0:
        return ZERO
    # states: (frozen monomial, weight used) -> coefficient
    states: dict = {(tuple(sorted(base.items())), 0): coeff}
    for rc, rexp, rw, power in series:
        new: dict = {}
        for (mono, used), c in states.items():
            n = 0
            m = dict(mono)
            rpow = ONE
            while used + n * rw <= budget and (power < 0 or n <= power):
                key = (tuple(sorted(m.items())), used + n * rw)
                val = c * _binom(power, n) * rpow
                new[key] = new.get(key, ZERO) + val
                n += 1
                m = _mono_mul(m, rexp)
                rpow = rpow * rc
        states = {k: v for k, v in new.items() if not v.is_zero()}
    total = ZERO
    for (mono, _), c in states.items():
        if not mono:
            total = total + c
    return total


# integrands ------------------------------------------------------------------------------------

def _w(i):
    return f"w{i}"


def _z(i):
    return f"z{i}"


def _ratio(num: tuple, den: tuple) -> list:
    """Factors for (num_a + num_b) / (den_a + den_b)."""
    return [Factor(*num, 1), Factor(*den, -1)]


def _pair_factors(names: Sequence[str], later_larger: bool) -> list:
    """prod (x_i - x_j)/(x_i - t x_j) over pairs, i < j or j < i."""
    out = []
    for i, j in combinations(range(len(names)), 2):
        a, b = (names[j], names[i]) if later_larger else (names[i], names[j])
        out += _ratio((Term.of(1, **{a: 1}), Term.of(-1, **{b: 1})), (Term.of(1, **{a: 1}), Term.of(-t, **{b: 1})))
    return out


def F_spec(lam: Sequence[int], order: str = "w1_first") -> ContourSpec:
    """Integral of prod 1/(1 - z w_i) prod_{i<j} (w_i - w_j)/(w_i - t w_j) z^{-|lam|} w^{-lam}.

    The contour is |1/z| > |w_1| > ... > |w_l|.  ``order`` only changes how the
    weights are assigned (both respect the contour), giving a second route.
    """
    l = len(lam)
    ws = [_w(i + 1) for i in range(l)]
    if order == "w1_first":
        weights = {w_: i + 1 for i, w_ in enumerate(ws)}
        weights["z"] = 0
    elif order == "wl_first":
        weights = {w_: 2 * i + 2 for i, w_ in enumerate(ws)}
        weights["z"] = -1
    else:
        raise ValueError(f"unknown order {order!r}")
    factors = [Factor(Term.of(1), Term.of(-1, z=1, **{w_: 1}), -1) for w_ in ws]
    factors += _pair_factors(ws, later_larger=False)
    exps = {"z": -sum(lam)}
    exps.update({w_: -lam[i] for i, w_ in enumerate(ws)})
    return ContourSpec(weights, factors, exps)


def G_spec(lam: Sequence[int], k: int = 0) -> ContourSpec:
    """Integral of prod (z - w_i)/(t^{-k} z - t w_i) prod_{i<j} (w_i - w_j)/(w_i - t w_j) z^{|lam|} w^{-lam},
    with |z| > |w_1| > ... > |w_l|."""
    l = len(lam)
    ws = [_w(i + 1) for i in range(l)]
    weights = ordering_weights(["z"] + ws)
    factors = []
    for w_ in ws:
        factors += _ratio((Term.of(1, z=1), Term.of(-1, **{w_: 1})), (Term.of(t ** -k, z=1), Term.of(-t, **{w_: 1})))
    factors += _pair_factors(ws, later_larger=False)
    exps = {"z": sum(lam)}
    exps.update({w_: -lam[i] for i, w_ in enumerate(ws)})
    return ContourSpec(weights, factors, exps)


def _N1_params(u, v, x):
    u = var("u") if u is None else u
    v = var("v") if v is None else v
    x = var("x") if x is None else x
    return u, v, x


def frakF_spec(lam: Sequence[int], u=None, x=None) -> ContourSpec:
    """prod w_i^{lam_i} w_i/(w_i - u x) prod_{j<i} (w_i - w_j)/(w_i - t w_j), |w_l| > ... > |w_1| > |x|."""
    u, _, x = _N1_params(u, None, x)
    l = len(lam)
    ws = [_w(i + 1) for i in range(l)]
    weights = ordering_weights(list(reversed(ws)) + ["x"], anchor="x")
    factors = [Factor(Term.of(1, **{w_: 1}), Term.of(-u * x), -1) for w_ in ws]
    factors += _pair_factors(ws, later_larger=True)
    exps = {w_: lam[i] + 1 for i, w_ in enumerate(ws)}
    return ContourSpec(weights, factors, exps)


def frakG_spec(mu: Sequence[int], u=None, v=None, x=None) -> ContourSpec:
    """prod z_i^{-mu_i} prod_{i<j} (z_i - z_j)/(z_i - t z_j) prod (x - (t/v) z_i)/(x - (t/u) z_i),
    |x| > |z_1| > ... > |z_m|."""
    u, v, x = _N1_params(u, v, x)
    zs = [_z(i + 1) for i in range(len(mu))]
    weights = ordering_weights(["x"] + zs, anchor="x")
    factors = []
    for z_ in zs:
        factors += _ratio((Term.of(x), Term.of(-t / v, **{z_: 1})), (Term.of(x), Term.of(-t / u, **{z_: 1})))
    factors += _pair_factors(zs, later_larger=False)
    exps = {z_: -mu[i] for i, z_ in enumerate(zs)}
    return ContourSpec(weights, factors, exps)


def frakI_spec(lam: Sequence[int], mu: Sequence[int], u=None, v=None, x=None) -> ContourSpec:
    """The N = 1 crystal integrand times z^{-mu} w^{lam},
    contour |w_l| > ... > |w_1| > |x| > |z_1| > ... > |z_m|."""
    u, v, x = _N1_params(u, v, x)
    ws = [_w(i + 1) for i in range(len(lam))]
    zs = [_z(i + 1) for i in range(len(mu))]
    weights = ordering_weights(list(reversed(ws)) + ["x"] + zs, anchor="x")
    factors = _pair_factors(ws, later_larger=True) + _pair_factors(zs, later_larger=False)
    for w_ in ws:
        for z_ in zs:
            factors += _ratio((Term.of(1, **{w_: 1}), Term.of(-t, **{z_: 1})), (Term.of(1, **{w_: 1}), Term.of(-1, **{z_: 1})))
    for z_ in zs:
        factors += _ratio((Term.of(x), Term.of(-t / v, **{z_: 1})), (Term.of(x), Term.of(-t / u, **{z_: 1})))
    for w_ in ws:
        factors.append(Factor(Term.of(1, **{w_: 1}), Term.of(-u * x), -1))
    exps = {w_: lam[i] + 1 for i, w_ in enumerate(ws)}
    exps.update({z_: -mu[i] for i, z_ in enumerate(zs)})
    return ContourSpec(weights, factors, exps)


# recursion oracles -----------------------------------------------------------------------------

def _n_comp(seq: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(seq))


def F_closed(lam: Sequence[int]) -> RatFunc:
    return t ** _n_comp(lam)


def F_recursive(lam: Sequence[int]) -> RatFunc:
    """Residue at w_1 = 1/z: F_lam = t^{lam_2 + ... + lam_l} F_{lam_2, ..., lam_l}."""
    if not lam:
        return ONE
    return t ** sum(lam[1:]) * F_recursive(lam[1:])


def _A(n: int) -> RatFunc:
    return ONE if n == 0 else (t - 1) * t ** (n - 1)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def F_reverse_recursion(lam: Sequence[int]) -> RatFunc:
    """Residue at w_l = 0 first: F_lam = sum_alpha prod A_{alpha_i} F_{lam_i + alpha_i}."""
    lam = tuple(lam)
    if not lam:
        return ONE
    if len(lam) == 1:
        return ONE
    l = len(lam)
    total = ZERO
    for alpha in _compositions(lam[-1], l):
        coeff = ONE
        for a in alpha[1:]:
            coeff = coeff * _A(a)
        total = total + coeff * F_reverse_recursion(tuple(x + a for x, a in zip(lam[:-1], alpha[1:])))
    return total


def G_closed(lam: Partition) -> RatFunc:
    """G^0_lam = t^{|lam| + n(lam)} prod_{k=1}^{l} (1 - t^{-k})."""
    out = t ** (sum(lam) + n_stat(lam))
    for k in range(1, len(lam) + 1):
        out = out * (1 - t ** -k)
    return out


def G_recursive(lam: Sequence[int], k: int = 0) -> RatFunc:
    """G^k_lam = t^{lam_1 (k+1) - l(lam)} (t^{k+1} - 1) G^{k+1}_{lam_2, ...}."""
    if not lam:
        return ONE
    return t ** (lam[0] * (k + 1) - len(lam)) * (t ** (k + 1) - 1) * G_recursive(lam[1:], k + 1)


def frakF_closed(lam: Sequence[int], u=None, x=None) -> RatFunc:
    """(u x)^{lam_1} (u t x)^{lam_2} ... (u t^{l-1} x)^{lam_l}."""
    u, _, x = _N1_params(u, None, x)
    out = ONE
    for i, part in enumerate(lam):
        out = out * (u * t ** i * x) ** part
    return out


def frakF_recursive(lam: Sequence[int], u=None, x=None) -> RatFunc:
    """frakF_lam(u) = (u x)^{lam_1} frakF_{lam_2, ...}(t u)."""
    u, _, x = _N1_params(u, None, x)
    if not lam:
        return ONE
    return (u * x) ** lam[0] * frakF_recursive(lam[1:], t * u, x)


def frakG_closed(mu: Sequence[int], u=None, v=None, x=None, literal: bool = False) -> RatFunc:
    """prod_{i=1}^{m} (1 - u/(v t^{i-1})) (t^i/(u x))^{mu_i}.

    ``literal=True`` gives the stated variant with (u/(x t^i))^{-mu_i}, which
    places x in the numerator and disagrees with the expansion.
    """
    u, v, x = _N1_params(u, v, x)
    out = ONE
    for i, part in enumerate(mu, 1):
        out = out * (1 - u / (v * t ** (i - 1)))
        out = out * ((u / (x * t ** i)) ** -part if literal else (t ** i / (u * x)) ** part)
    return out


def frakG_recursive(mu: Sequence[int], u=None, v=None, x=None) -> RatFunc:
    """Residue at infinity in z_1: frakG_mu(u) = (1 - u/v) (t/(u x))^{mu_1} frakG_{mu_2, ...}(u/t)."""
    u, v, x = _N1_params(u, v, x)
    if not mu:
        return ONE
    return (1 - u / v) * (t / (u * x)) ** mu[0] * frakG_recursive(mu[1:], u / t, v, x)


def recursion_oracles(which: str, lam: Sequence[int], **params) -> RatFunc:
    """Closed values of F, G^k, frakF and frakG computed without the expansion engine."""
    if which == "F":
        return F_recursive(lam)
    if which == "F_reverse":
        return F_reverse_recursion(lam)
    if which == "Gk":
        return G_recursive(lam, params.get("k", 0))
    if which == "frakF":
        return frakF_recursive(lam, params.get("u"), params.get("x"))
    if which == "frakG":
        return frakG_recursive(lam, params.get("u"), params.get("v"), params.get("x"))
    raise ValueError(f"unknown oracle {which!r}")
