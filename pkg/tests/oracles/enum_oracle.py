"""Arithmetic solution sets of the link equations by naive search.

Only the equations are encoded; none of the geometric exclusions.
"""

import itertools


def d1d1(g, bound):
    return sorted((a, d, e) for a, d, e in itertools.product(range(1, bound + 1), repeat=3)
                  if a * a * (2 * g - 2) == 2 * a * d and a * (2 * g - 2) - d == e)


def d1c1(g, bound):
    return sorted((a, d, e) for a, d, e in itertools.product(range(1, bound + 1), repeat=3)
                  if a * a * (2 * g - 2) - 2 * a * d == 2 and a * (2 * g - 2) - d + e == 12)


def c1c1(g, bound):
    out = []
    for a, d, e in itertools.product(range(1, bound + 1), repeat=3):
        hm = 12 - d
        if a * a * (2 * g - 2) - 2 * a * hm == 0 and a * (2 * g - 2) - hm == 12 - e:
            out.append((a, d, e))
    return sorted(out)


def castelnuovo(d, r):
    """pi(d, r) = (d - 1 - e)(d + e - r) / (2(r - 1)) with e = (d - 1) mod (r - 1)."""
    e = (d - 1) % (r - 1)
    num = (d - 1 - e) * (d + e - r)
    assert num % (2 * (r - 1)) == 0
    return num // (2 * (r - 1))


def b5_values(g, bound):
    return [a * a * (2 * g - 2) - 2 * a - 2 for a in range(1, bound + 1)]
