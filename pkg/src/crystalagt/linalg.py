"""Exact dense linear algebra over RatFunc (lists of lists)."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .exactfield import ONE, ZERO, RatFunc

Matrix = list[list[RatFunc]]


class SingularMatrixError(ArithmeticError):
    pass


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            s = ZERO
            for k in range(inner):
                x = row[k]
                if x.is_zero():
                    continue
                y = b[k][j]
                if not y.is_zero():
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def matvec(a: Matrix, v: Sequence[RatFunc]) -> list[RatFunc]:
    return [sum((x * y for x, y in zip(row, v) if not x.is_zero() and not y.is_zero()), ZERO) for row in a]


def is_identity(a: Matrix) -> bool:
    return all((x.is_one() if i == j else x.is_zero()) for i, row in enumerate(a) for j, x in enumerate(row))


def _pivot(rows: Matrix, col: int, start: int) -> int | None:
    best = None
    best_size = None
    for r in range(start, len(rows)):
        x = rows[r][col]
        if not x.is_zero():
            size = len(str(x))
            if best is None or size < best_size:
                best, best_size = r, size
    return best


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a x = b for square invertible a; b has one or more columns."""
    n = len(a)
    rows = [list(a[i]) + list(b[i]) for i in range(n)]
    width = len(rows[0]) if rows else 0
    for col in range(n):
        p = _pivot(rows, col, col)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[p] = rows[p], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv if not x.is_zero() else x for x in rows[col]]
        for r in range(n):
            if r == col:
                continue
            f = rows[r][col]
            if f.is_zero():
                continue
            pr = rows[col]
            rows[r] = [rows[r][j] - f * pr[j] if not pr[j].is_zero() else rows[r][j] for j in range(width)]
    return [row[n:] for row in rows]


def solve_vector(a: Matrix, b: Sequence[RatFunc]) -> list[RatFunc]:
    return [row[0] for row in solve(a, [[x] for x in b])]


def inverse(a: Matrix) -> Matrix:
    return solve(a, identity(len(a)))


def solve_upper_triangular(a: Matrix, b: Sequence[RatFunc]) -> list[RatFunc]:
    n = len(a)
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = b[i]
        for j in range(i + 1, n):
            if not a[i][j].is_zero() and not x[j].is_zero():
                s = s - a[i][j] * x[j]
        if a[i][i].is_zero():
            raise SingularMatrixError("zero on the diagonal")
        x[i] = s / a[i][i]
    return x


def is_upper_triangular(a: Matrix) -> bool:
    return all(a[i][j].is_zero() for i in range(len(a)) for j in range(i))


def is_diagonal(a: Matrix) -> bool:
    return all(a[i][j].is_zero() for i in range(len(a)) for j in range(len(a[i])) if i != j)


def rank_fraction(a: list[list[Fraction]]) -> int:
    """Rank of a matrix of Fractions."""
    rows = [list(r) for r in a]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        p = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        pv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class InconsistentSystemError(ArithmeticError):
    pass


class UnderdeterminedSystemError(ArithmeticError):
    pass


def solve_sparse(equations, unknowns: Sequence) -> dict:
    """Unique solution of sparse linear equations sum_x c_x x + c_None = 0.

    Each equation is a dict mapping unknowns (and None for the constant) to
    RatFunc coefficients.  Raises InconsistentSystemError or
    UnderdeterminedSystemError when the solution does not exist or is not unique.
    """
    order = {x: i for i, x in enumerate(unknowns)}
    pivots: dict = {}  # pivot unknown -> row normalized to coefficient 1, reduced against earlier pivots
    for eq in equations:
        row = {x: c for x, c in eq.items() if not c.is_zero()}
        # reduce against existing pivots until no pivot unknown remains
        changed = True
        while changed:
            changed = False
            for x in [x for x in row if x is not None and x in pivots]:
                c = row.pop(x, None)
                if c is None:
                    continue
                for y, d in pivots[x].items():
                    if y == x:
                        continue
                    v = row.get(y, ZERO) - c * d
                    if v.is_zero():
                        row.pop(y, None)
                    else:
                        row[y] = v
                changed = True
        live = [x for x in row if x is not None]
        if not live:
            if None in row:
                raise InconsistentSystemError("equations are inconsistent")
            continue
        piv = min(live, key=lambda x: (len(str(row[x])), order[x]))
        inv = row[piv].inverse()
        new = {y: c * inv for y, c in row.items()}
        new[piv] = ONE
        # keep earlier pivot rows free of the new pivot
        for x, prow in pivots.items():
            c = prow.get(piv)
            if c is None:
                continue
            del prow[piv]
            for y, d in new.items():
                if y == piv:
                    continue
                v = prow.get(y, ZERO) - c * d
                if v.is_zero():
                    prow.pop(y, None)
                else:
                    prow[y] = v
        pivots[piv] = new
    free = [x for x in unknowns if x not in pivots]
    if free:
        raise UnderdeterminedSystemError(f"{len(free)} unknowns are not determined, e.g. {free[0]!r}")
    return {x: -pivots[x].get(None, ZERO) for x in unknowns}
