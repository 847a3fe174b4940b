"""Exact linear algebra over Q and over number fields.

Matrices are lists of rows.  Entries only need ring operations, exact
division and a zero test, so the same routines run on ``int``,
``fractions.Fraction`` and :class:`fano3.numfield.NFElement`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def to_fractions(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def _bareiss(m: list[list]) -> tuple[int, object, list[list]]:
    """Fraction-free elimination in place.  Returns ``(rank, sign*det_if_square, m)``."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev
            m[i][c] = 0 * m[i][c]
        prev = m[r][c]
        r += 1
    return r, sign, m


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    work = [list(row) for row in m]
    if all(isinstance(x, (int, Fraction)) for row in work for x in row):
        # clear denominators row by row so elimination stays in Z
        for i, row in enumerate(work):
            lcm = 1
            for x in row:
                den = Fraction(x).denominator
                lcm = lcm * den // _gcd(lcm, den)
            work[i] = [int(Fraction(x) * lcm) for x in row]
        # integer Bareiss: every division is exact
        return _int_bareiss_rank(work)
    return _gauss_rank(work)


def _gauss_rank(m: list[list]) -> int:
    """Plain elimination, one inversion per pivot; cheapest over number fields."""
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _int_bareiss_rank(m: list[list[int]]) -> int:
    rows, cols = len(m), len(m[0])
    prev, r = 1, 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                num = m[i][j] * m[r][c] - m[i][c] * m[r][j]
                m[i][j] = num // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def det(m: Sequence[Sequence]):
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    work = [list(row) for row in m]
    if all(isinstance(x, int) for row in work for x in row):
        work = [[Fraction(x) for x in row] for row in work]
    r, sign, work = _bareiss(work)
    if r < n:
        return 0 * work[0][0]
    d = work[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(m: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns ``(rows, pivot_columns)``."""
    work = [list(row) for row in m]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work, pivots


def nullspace(m: Sequence[Sequence], ncols: int | None = None, one=Fraction(1)) -> list[list]:
    """Basis of ``{x : m x = 0}``.  ``one`` fixes the field used for empty input."""
    if not m:
        n = ncols or 0
        return [[one if i == j else 0 * one for i in range(n)] for j in range(n)]
    if isinstance(m[0][0], int):
        m = to_fractions(m)
    red, pivots = rref(m)
    n = len(red[0])
    zero = 0 * red[0][0]
    unit = zero + 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = unit
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[list, list[list]]:
    """Particular solution and kernel basis of ``a x = b``; raises if inconsistent."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if aug and isinstance(aug[0][0], int):
        aug = to_fractions(aug)
    red, pivots = rref(aug)
    n = len(aug[0]) - 1
    if n in pivots:
        raise ValueError("inconsistent linear system")
    zero = 0 * red[0][0]
    x = [zero] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    kernel = nullspace([row[:n] for row in aug], n)
    return x, kernel


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), 0 * a[0][0]) for j in range(len(b[0]))]
            for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), 0 * v[0]) for row in a]


def congruence(q, p):
    """``p^T q p``."""
    return matmul(matmul(transpose(p), q), p)
