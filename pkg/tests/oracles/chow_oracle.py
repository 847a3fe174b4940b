"""Chow-ring oracle built on sympy Groebner bases.

The ring of P(E) over P^1 is Q[M, F] / (F^2, prod(M - a_i F)); the class
M^(r-1) F is a point.  Nothing here imports the package.
"""

import sympy

M, F, t = sympy.symbols("M F t")


def _basis(twists):
    rel = sympy.expand(sympy.prod([M - a * F for a in twists]))
    return sympy.groebner([F ** 2, rel], M, F, order="grevlex")


def integrate(expr, twists):
    r = len(twists)
    g = _basis(twists)
    _, rem = g.reduce(sympy.expand(expr))
    rem = sympy.Poly(rem, M, F)
    return int(rem.coeff_monomial(M ** (r - 1) * F))


def euler(twists, divisors):
    """Eu of the complete intersection of ``m M + f F`` (divisors as ``(m, f)``)."""
    r = len(twists)
    dim = r - len(divisors)
    assert dim == 3
    divs = [m * M + f * F for m, f in divisors]
    total = (1 + 2 * F * t) * sympy.prod([1 + (M - a * F) * t for a in twists])
    for d in divs:
        total = total * sympy.series(1 / (1 + d * t), t, 0, dim + 1).removeO()
    c3 = sympy.expand(total).coeff(t, 3)
    return integrate(c3 * sympy.prod(divs), twists)


def closed_form(sum_a, sum_b):
    return 16 - 16 * sum_a - 20 * sum_b
