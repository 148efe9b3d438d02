"""Exact rational functions over Q in a fixed, ordered set of variables.

Every scalar in the package is a :class:`RatFunc`.  Numerator and denominator
are sparse multivariate polynomials (python-flint ``fmpq_mpoly``) kept in lowest
terms with a monic denominator, so two equal functions always have identical
representations.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import flint

# Registry order fixes the graded-lex monomial order used in the text form.
VARIABLES: tuple[str, ...] = (
    "q", "t", "k", "Q",
    "u1", "u2", "u3", "v1", "v2", "w1", "w2",
    "u", "v", "x", "z", "r",
    "L4", "Lt4",
    "u1p", "u2p", "v1p", "v2p", "w1p", "w2p",
    *(f"a{i}" for i in range(1, 9)),
    *(f"b{i}" for i in range(1, 9)),
    "c0",
)

_CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "deglex")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)


class PoleError(ArithmeticError):
    """Raised when a q -> 0 limit does not exist; carries the pole order."""

    def __init__(self, order: int, variable: str = "q"):
        super().__init__(f"pole of order {order} at {variable}=0")
        self.order = order
        self.variable = variable


def var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown variable {name!r}") from None


def _poly_const(c) -> flint.fmpq_mpoly:
    return _CTX.constant(flint.fmpq(c.numerator, c.denominator) if isinstance(c, Fraction) else c)


def _as_poly(value) -> flint.fmpq_mpoly:
    if isinstance(value, flint.fmpq_mpoly):
        return value
    if isinstance(value, (int, Fraction)):
        return _poly_const(value)
    if isinstance(value, flint.fmpq):
        return _CTX.constant(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a polynomial")


class RatFunc:
    """A rational function num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("_hash", "den", "num")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def var(cls, name: str) -> RatFunc:
        return cls(_CTX.gen(var_index(name)), _reduced=True)

    @classmethod
    def const(cls, value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        return cls(_as_poly(Fraction(value)), _reduced=True)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> RatFunc:
        """coeff * prod name**e, with negative exponents allowed."""
        up = [0] * _NVARS
        down = [0] * _NVARS
        for name, e in exps.items():
            if e >= 0:
                up[var_index(name)] += e
            else:
                down[var_index(name)] -= e
        c = Fraction(coeff)
        num = _CTX.term(exp_vec=tuple(up), coeff=flint.fmpq(c.numerator, c.denominator))
        den = _CTX.term(exp_vec=tuple(down), coeff=1)
        return cls(num, den, _reduced=True)

    # predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def variables(self) -> set[str]:
        used = set()
        for poly in (self.num, self.den):
            for i, d in enumerate(poly.degrees()):
                if d > 0:
                    used.add(VARIABLES[i])
        return used

    def depends_on(self, name: str) -> bool:
        i = var_index(name)
        return self.num.degrees()[i] > 0 or self.den.degrees()[i] > 0

    # arithmetic --------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_one():
            return RatFunc(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den.is_one():
            return RatFunc(other.num * self.den + self.num, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        if g.is_one():
            return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)
        d1 = self.den / g
        d2 = other.den / g
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, self.den, _reduced=True)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num, other.den) if g1.is_one() else (self.num / g1, other.den / g1)
        n2, d1 = (other.num, self.den) if g2.is_one() else (other.num / g2, self.den / g2)
        return _normalized(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return _normalized(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n == 0:
            return ONE
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # text ------------------------------------------------------------------
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"RatFunc({to_text(self)!r})"

    def __reduce__(self):
        return (from_text, (to_text(self),))


def _normalized(num, den) -> RatFunc:
    """Make den monic; assumes gcd(num, den) = 1."""
    if num.is_zero():
        return ZERO
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return RatFunc(num, den, _reduced=True)


def _reduce(num, den):
    if num.is_zero():
        return _CTX.constant(0), _CTX.constant(1)
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def _coerce(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.const(value)
    return NotImplemented


ZERO = RatFunc(0, 1, _reduced=True)
ONE = RatFunc(1, 1, _reduced=True)


def var(name: str) -> RatFunc:
    return RatFunc.var(name)


def const(value) -> RatFunc:
    return RatFunc.const(value)


def variables(*names: str) -> tuple[RatFunc, ...]:
    if len(names) == 1 and " " in names[0]:
        names = tuple(names[0].split())
    return tuple(RatFunc.var(n) for n in names)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_eq(a: RatFunc, b: RatFunc, *, fingerprint: bool = False) -> bool:
    """Semantic equality by cross-multiplication, optionally screened by random evaluation."""
    a, b = _coerce(a), _coerce(b)
    if fingerprint and not fingerprint_equal(a, b):
        return False
    return (a.num * b.den - b.num * a.den).is_zero()


# q -> 0 limits ----------------------------------------------------------------

def _min_degree(poly, idx: int) -> int:
    return min(m[idx] for m in poly.monoms())


def _low_part(poly, idx: int, e: int):
    """Coefficient of var^e in poly, with that variable removed."""
    terms = {}
    for mono, c in poly.terms():
        if mono[idx] == e:
            m = list(mono)
            m[idx] = 0
            terms[tuple(m)] = c
    return _CTX.from_dict(terms)


def valuation(a: RatFunc, name: str = "q") -> int:
    """Order of vanishing at name = 0 (negative for a pole)."""
    if a.is_zero():
        raise ValueError("valuation of zero")
    i = var_index(name)
    return _min_degree(a.num, i) - _min_degree(a.den, i)


def limit_to_zero(a: RatFunc, name: str = "q") -> RatFunc:
    if a.is_zero():
        return ZERO
    i = var_index(name)
    ea = _min_degree(a.num, i)
    eb = _min_degree(a.den, i)
    if ea < eb:
        raise PoleError(eb - ea, name)
    if ea > eb:
        return ZERO
    return RatFunc(_low_part(a.num, i, ea), _low_part(a.den, i, eb))


def limit_q_to_0(a: RatFunc) -> RatFunc:
    return limit_to_zero(a, "q")


# substitution -----------------------------------------------------------------

def _eval_poly(poly, images: list) -> RatFunc:
    """Evaluate poly with variable i replaced by images[i] (RatFunc or None = itself)."""
    if all(im is None or im.den.is_one() for im in images):
        gens = _CTX.gens()
        args = [gens[i] if im is None else im.num for i, im in enumerate(images)]
        return RatFunc(poly.compose(*args), _reduced=True)
    total = ZERO
    powers: dict[tuple[int, int], RatFunc] = {}
    for mono, c in poly.terms():
        term = RatFunc(_CTX.constant(c), _reduced=True)
        free = [0] * _NVARS
        for i, e in enumerate(map(int, mono)):
            if e == 0:
                continue
            im = images[i]
            if im is None:
                free[i] = e
                continue
            key = (i, e)
            if key not in powers:
                powers[key] = im ** e
            term = term * powers[key]
        if any(free):
            term = term * RatFunc(_CTX.term(exp_vec=tuple(free), coeff=1), _reduced=True)
        total = total + term
    return total


def substitute(a: RatFunc, bindings: Mapping[str, RatFunc]) -> RatFunc:
    images: list = [None] * _NVARS
    for name, value in bindings.items():
        images[var_index(name)] = _coerce(value)
    num = _eval_poly(a.num, images)
    den = _eval_poly(a.den, images)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator vanish")
    return num / den


def substitute_square(a: RatFunc, name: str, square: RatFunc) -> RatFunc:
    """Replace name**2 by ``square``; every exponent of name must be even."""
    i = var_index(name)

    def halve(poly):
        out = {}
        for mono, c in poly.terms():
            if mono[i] % 2:
                raise ValueError(f"odd power of {name} present")
            m = list(mono)
            m[i] //= 2
            out[tuple(m)] = c
        return _CTX.from_dict(out)

    return substitute(RatFunc(halve(a.num), halve(a.den)), {name: square})


def is_even_in(a: RatFunc, name: str) -> bool:
    i = var_index(name)
    return all(m[i] % 2 == 0 for p in (a.num, a.den) for m in p.monoms())


# fingerprints -----------------------------------------------------------------

def evaluate(a: RatFunc, point: Mapping[str, Fraction]) -> Fraction:
    vals = [flint.fmpq(0)] * _NVARS
    for name, value in point.items():
        f = Fraction(value)
        vals[var_index(name)] = flint.fmpq(f.numerator, f.denominator)
    d = a.den(*vals)
    if d == 0:
        raise ZeroDivisionError("point is a pole")
    v = a.num(*vals) / d
    return Fraction(int(v.p), int(v.q))


def random_point(names: Iterable[str], rng: random.Random) -> dict[str, Fraction]:
    return {n: Fraction(rng.randint(2, 97), rng.randint(2, 97)) for n in names}


def fingerprint_equal(a: RatFunc, b: RatFunc, *, points: int = 3, seed: int = 0) -> bool:
    """Compare values at random rational points; False means certainly different."""
    names = sorted(a.variables() | b.variables(), key=var_index)
    rng = random.Random(seed)
    agreed = 0
    tries = 0
    while agreed < points:
        tries += 1
        if tries > 50 * points:
            raise RuntimeError("could not find evaluation points off the poles")
        pt = random_point(names, rng)
        try:
            va = evaluate(a, pt)
            vb = evaluate(b, pt)
        except ZeroDivisionError:
            continue
        if va != vb:
            return False
        agreed += 1
    return True


# canonical text -----------------------------------------------------------------

def _integer_pair(a: RatFunc):
    """Scale num/den to coprime integer coefficients with positive leading den coefficient."""
    coeffs = list(a.num.coeffs()) + list(a.den.coeffs())
    m = reduce(lcm, (int(c.q) for c in coeffs), 1)
    num = [(mono, int(c.p) * (m // int(c.q))) for mono, c in a.num.terms()]
    den = [(mono, int(c.p) * (m // int(c.q))) for mono, c in a.den.terms()]
    g = reduce(gcd, (abs(c) for _, c in num + den), 0) or 1
    num = [(mono, c // g) for mono, c in num]
    den = [(mono, c // g) for mono, c in den]
    if den[0][1] < 0:
        num = [(mono, -c) for mono, c in num]
        den = [(mono, -c) for mono, c in den]
    return num, den


def _poly_text(terms) -> str:
    if not terms:
        return "0"
    out = []
    for k, (mono, c) in enumerate(terms):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(VARIABLES[i])
            elif e > 1:
                factors.append(f"{VARIABLES[i]}^{e}")
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def to_text(a: RatFunc) -> str:
    """Canonical text: expanded integer numerator and denominator, grlex order."""
    if a.is_zero():
        return "0"
    num, den = _integer_pair(a)
    ntext = _poly_text(num)
    if len(den) == 1 and den[0][1] == 1 and not any(den[0][0]):
        return ntext
    if len(num) > 1:
        ntext = f"({ntext})"
    dtext = _poly_text(den)
    if len(den) > 1 or not re.fullmatch(r"\d+|[A-Za-z][A-Za-z0-9]*(\^\d+)?", dtext):
        dtext = f"({dtext})"
    return f"{ntext}/{dtext}"


def to_latex(a: RatFunc) -> str:
    """LaTeX form of the canonical text: \\frac for quotients, braced exponents."""

    def poly(text: str) -> str:
        text = re.sub(r"([A-Za-z])(\d+)", r"\1_{\2}", text)
        text = re.sub(r"\^(\d+)", r"^{\1}", text)
        return text.replace("*", " ")

    if a.is_zero():
        return "0"
    num, den = _integer_pair(a)
    ntext = poly(_poly_text(num))
    if len(den) == 1 and den[0][1] == 1 and not any(den[0][0]):
        return ntext
    return f"\\frac{{{ntext}}}{{{poly(_poly_text(den))}}}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            tokens.append(("var", m.group(2)))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.i != len(self.tokens):
            raise ValueError("trailing input")
        return value

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                value = value * rhs if val == "*" else value / rhs
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                value = value * self.power()
            else:
                return value

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return RatFunc.const(val)
        if kind == "var":
            return RatFunc.var(val)
        if kind == "op" and val == "(":
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("missing ')'")
            return value
        if kind == "op" and val == "-":
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")


def from_text(text: str) -> RatFunc:
    """Parse an arithmetic expression in the registry variables."""
    return _Parser(text).parse()


parse = from_text
