"""Regenerate tests/data/frozen.json from the oracles.

Run from the repository root:  python3 tests/oracles/freeze.py
The package is only used to generate seeded random instances; every
expected value is computed by the oracles.
"""

import itertools
import json
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

import chow_oracle  # noqa: E402
import enum_oracle  # noqa: E402
import quadric_oracle  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "frozen.json"


def euler_cases():
    rng = random.Random(2024)
    cases = [
        ([0, 0, 0, 1, 1], [(2, 0), (2, 0)]),
        ([0, 0, 1, 1, 1], [(2, -1), (2, 0)]),
        ([0, 0, 0, 0, 0], [(2, 0), (2, 0)]),
        ([0, 0, 0, 1, 1], [(2, 0), (2, -1)]),
        ([0, 0, 0, 0], [(4, 0)]),
        ([0, 0, 0, 1], [(3, 1)]),
        ([0, 1, 1, 2], [(2, 1)]),
        ([0, 0, 0, 0, 1, 1], [(2, 0), (2, 0), (1, 1)]),
        ([0, 0, 1, 2, 3], [(1, 2), (3, -1)]),
    ]
    for _ in range(25):
        r = rng.choice((4, 5, 6))
        tw = sorted(rng.randint(0, 3) for _ in range(r))
        tw = [a - tw[0] for a in tw]
        divs = [(rng.randint(1, 3), rng.randint(-3, 3)) for _ in range(r - 3)]
        cases.append((tw, divs))
    return [{"twists": tw, "divisors": [list(d) for d in divs], "euler": chow_oracle.euler(tw, divs)}
            for tw, divs in cases]


def integrals():
    out = []
    for tw in ([0, 0, 0, 1, 1], [0, 1, 2], [0, 0, 3, 5]):
        r = len(tw)
        for p in range(r + 1):
            q = r - p
            if q > 1:
                continue
            out.append({"twists": tw, "p": p, "q": q,
                        "value": chow_oracle.integrate(chow_oracle.M ** p * chow_oracle.F ** q, tw)})
    return out


def enumeration():
    out = {}
    for g in (5, 6, 7, 8, 9, 10, 12):
        out[str(g)] = {
            "d1d1": enum_oracle.d1d1(g, 12),
            "d1c1": enum_oracle.d1c1(g, 12),
            "c1c1": enum_oracle.c1c1(g, 12),
            "b5_min": min(enum_oracle.b5_values(g, 12)),
        }
    return out


def castelnuovo():
    return [[m, r, enum_oracle.castelnuovo(m, r)] for r in (2, 3, 4, 5) for m in range(r, 13)]


def conics():
    from fano3 import quadrics

    out = []
    for seed in range(1, 9):
        q1, q2, q3, _ = quadrics.random_corank3_net(seed)
        a, b = quadric_oracle.vertex_plane_conics(q1.to_json(), q2.to_json(), q3.to_json())
        out.append({"seed": seed, "distinct": quadric_oracle.distinct_intersections(a, b)})
    return out


def skew():
    from fano3 import quadrics

    out = []
    for case, seed in itertools.product((1, 2, 3), range(1, 5)):
        p = quadrics.skew_pencil_instance(case, seed)
        j = p.to_json()
        out.append({"case": case, "seed": seed, "rank2_members": quadric_oracle.rank2_members(j["A"], j["B"])})
    return out


def main():
    data = {
        "euler": euler_cases(),
        "integrals": integrals(),
        "enumeration": enumeration(),
        "castelnuovo": castelnuovo(),
        "conics": conics(),
        "skew": skew(),
    }
    OUT.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
