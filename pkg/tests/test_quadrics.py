import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fano3.linalg import congruence, rank
from fano3.quadrics import (
    QuadraticForm,
    SkewPencil,
    corank,
    nodes_on_vertex_plane,
    nodes_two_corank3,
    random_corank3_net,
    random_skew,
    random_symmetric,
    random_two_corank3_net,
    ruling_pencils,
    skew_pencil_classify,
    skew_pencil_instance,
    wedge,
)


def embed(base: QuadraticForm, block, idx) -> QuadraticForm:
    m = [list(r) for r in base.matrix]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            m[i][j] = Fraction(block[a][b])
    return QuadraticForm(tuple(map(tuple, m)))


Q1_DIAG = QuadraticForm.diagonal([1, 2, 3, 5, 0, 0, 0])


def test_corank_diagonal():
    c, v = corank(QuadraticForm.diagonal([1, 1, 1, 1, 0, 0, 0]))
    assert c == 3
    assert rank(v + [[1, 0, 0, 0, 0, 0, 0]]) == 4
    assert all(x[:4] == [0, 0, 0, 0] for x in v)


def test_corank_hyperbolic():
    q = QuadraticForm.from_monomials(7, {(0, 1): 1, (2, 3): 1})
    assert corank(q)[0] == 3


def test_corank_random_full_rank():
    q = random_symmetric(random.Random(3), 7)
    assert corank(q)[0] == 0


def test_symmetry_enforced():
    with pytest.raises(ValueError):
        QuadraticForm(((1, 2), (3, 4)))


def test_json_roundtrip():
    q = QuadraticForm.from_monomials(3, {(0, 1): Fraction(1, 3), (2, 2): -1})
    assert q.to_json()[0][1] == "1/6"
    assert QuadraticForm.from_json(q.to_json()) == q


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_corank_congruence_invariant(seed):
    rng = random.Random(seed)
    q1, _, _, _ = random_corank3_net(seed)
    while True:
        p = [[rng.randint(-3, 3) for _ in range(7)] for _ in range(7)]
        if rank(p) == 7:
            break
    moved = QuadraticForm(tuple(map(tuple, congruence([list(r) for r in q1.matrix], p))))
    assert corank(moved)[0] == corank(q1)[0] == 3


def test_nodes_seed_one():
    rep = nodes_on_vertex_plane(*random_corank3_net(1)[:3])
    assert rep.distinct == 4 and rep.total_multiplicity == 4 and rep.all_nodes_certified


def test_nodes_against_oracle(frozen):
    for case in frozen["conics"]:
        rep = nodes_on_vertex_plane(*random_corank3_net(case["seed"])[:3])
        assert rep.distinct == case["distinct"]


def test_nodes_report_json():
    j = nodes_on_vertex_plane(*random_corank3_net(2)[:3]).to_json()
    assert j["schema"] == "fano3/1" and j["total_multiplicity"] == 4
    assert all(isinstance(c, str) for p in j["points"] for c in p["minpoly"])


def test_tangent_conics():
    rng = random.Random(5)
    f = [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
    # f + (x - z)(x + 2z): tangent to f at (1:0:1)
    g = [[2, 0, Fraction(1, 2)], [0, 1, 0], [Fraction(1, 2), 0, -3]]
    q2 = embed(random_symmetric(rng, 7), f, (4, 5, 6))
    q3 = embed(random_symmetric(rng, 7), g, (4, 5, 6))
    rep = nodes_on_vertex_plane(Q1_DIAG, q2, q3)
    assert sorted(rep.multiplicities) == [1, 1, 2]
    assert rep.total_multiplicity == 4
    assert not rep.all_nodes_certified


def test_shared_component():
    rng = random.Random(6)
    f = [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
    q2 = embed(random_symmetric(rng, 7), f, (4, 5, 6))
    q3 = embed(random_symmetric(rng, 7), [[3, 0, 0], [0, 3, 0], [0, 0, -3]], (4, 5, 6))
    with pytest.raises(ValueError, match="non-isolated singularities"):
        nodes_on_vertex_plane(Q1_DIAG, q2, q3)


def test_corank_precondition():
    rng = random.Random(7)
    with pytest.raises(ValueError, match="corank"):
        nodes_on_vertex_plane(random_symmetric(rng, 7), random_symmetric(rng, 7), random_symmetric(rng, 7))


def test_two_planes_seed_one():
    res = nodes_two_corank3(*random_two_corank3_net(1)[:3])
    assert int(res) == 8 and res.all_nodes_certified and res.shared == 0


def test_two_planes_equal_forms():
    q1, _, q3, _ = random_two_corank3_net(2)
    with pytest.raises(ValueError, match="coincide"):
        nodes_two_corank3(q1, q1, q3)


def test_two_planes_common_point():
    # vertex planes <e4,e5,e6> and <e0,e1,e6> meet at e6, which lies on Q3
    q2 = embed(QuadraticForm.diagonal([0] * 7), [[2, 1, 0, 0], [1, 3, 0, 1], [0, 0, 1, 0], [0, 1, 0, -4]],
               (2, 3, 4, 5))
    q3 = embed(random_symmetric(random.Random(8), 7), [[0]], (6,))
    res = nodes_two_corank3(Q1_DIAG, q2, q3)
    assert res.shared == 1 and res.count < 8 and not res.all_nodes_certified


def test_two_planes_sharing_line():
    q2 = embed(QuadraticForm.diagonal([0] * 7), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
               (0, 1, 2, 4))
    with pytest.raises(ValueError, match="share a line"):
        nodes_two_corank3(Q1_DIAG, q2, random_symmetric(random.Random(1), 7))


def test_nodes_two_planes_sample():
    for seed in range(2, 12):
        assert int(nodes_two_corank3(*random_two_corank3_net(seed)[:3])) == 8


def _on_quadric(q, vectors):
    return all(q.value([a + b for a, b in zip(u, v)]) == 0 for u in vectors for v in vectors)


def test_rulings_hyperbolic():
    q = QuadraticForm.from_monomials(7, {(0, 1): 1, (2, 3): 1})
    rep = ruling_pencils(q)
    assert rep.rational and len(rep.pencils) == 2
    for pen in rep.pencils:
        for t in ((1, 0), (0, 1), (2, -3)):
            member = pen.member(*t)
            assert rank(member) == 5
            assert _on_quadric(q, member)


def test_rulings_two_families_differ():
    q = QuadraticForm.from_monomials(7, {(0, 1): 1, (2, 3): 1})
    p1, p2 = ruling_pencils(q).pencils
    a, b = p1.member(1, 0), p2.member(1, 0)
    a2 = p1.member(0, 1)
    # same family: 4-planes meet in the vertex plane only (sum has rank 7)
    assert rank(a + a2) == 7
    # opposite families: they share a 4-dim space (sum has rank 6)
    assert rank(a + b) == 6


def test_rulings_split_diagonal():
    q = QuadraticForm.diagonal([1, -1, 2, -2, 0, 0, 0])
    rep = ruling_pencils(q)
    assert rep.rational
    assert all(_on_quadric(q, pen.member(3, 5)) for pen in rep.pencils)


def test_rulings_sum_of_squares():
    rep = ruling_pencils(QuadraticForm.diagonal([1, 1, 1, 1, 0, 0, 0]))
    assert not rep.rational
    assert rep.message == "irrational rulings, extension degree 2"


def test_rulings_nonsquare_discriminant():
    rep = ruling_pencils(QuadraticForm.diagonal([1, 1, 1, -1, 0, 0, 0]))
    assert not rep.rational and rep.extension_degree == 2


def test_rulings_rank_three():
    with pytest.raises(ValueError, match="rank 4"):
        ruling_pencils(QuadraticForm.diagonal([1, 1, 1, 0, 0, 0, 0]))


@pytest.mark.parametrize("case", [1, 2, 3])
def test_skew_constructed_cases(case, frozen):
    for entry in frozen["skew"]:
        if entry["case"] == case:
            rep = skew_pencil_classify(skew_pencil_instance(case, entry["seed"]))
            assert rep.case == case
            assert rep.rank2_members == entry["rank2_members"]


def test_skew_case_three_skew_lines():
    rep = skew_pencil_classify(skew_pencil_instance(3, 1))
    assert rep.kernel_intersection_dim == 1 and rep.skew_lines


def test_skew_irrational_members():
    # A = e0^e1 + e2^e3 and B = e0^e2 + ... chosen so the two rank-2 members are conjugate
    A = wedge([1, 0, 0, 0, 0], [0, 1, 0, 0, 0])
    B = wedge([0, 0, 1, 0, 0], [0, 0, 0, 1, 0])
    C = tuple(tuple(a + 2 * b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))
    D = tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))
    # a pencil spanned by C, D still has A, B as its rank-2 members
    rep = skew_pencil_classify(SkewPencil(C, D))
    assert rep.case == 3 and rep.kernel_intersection_dim == 1


def test_skew_dual_variety():
    u, v, w = [1, 2, 0, 1, 3], [0, 1, 1, 0, 2], [2, 0, 1, 1, 1]
    rep = skew_pencil_classify(SkewPencil(wedge(u, v), wedge(u, w)))
    assert rep.case is None and "dual variety" in rep.label


def test_skew_proportional():
    A = random_skew(random.Random(1))
    with pytest.raises(ValueError, match="proportional"):
        skew_pencil_classify(SkewPencil(A, tuple(tuple(2 * x for x in r) for r in A)))


def test_skew_antisymmetry_enforced():
    with pytest.raises(ValueError):
        SkewPencil(((1,) * 5,) * 5, random_skew(random.Random(1)))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(-5, 5), st.integers(-5, 5))
def test_skew_rank_even(seed, s, t):
    rng = random.Random(seed)
    p = SkewPencil(random_skew(rng), random_skew(rng))
    assert rank(p.member(s, t)) in (0, 2, 4)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10 ** 6))
def test_skew_at_most_two_members(case, seed):
    rep = skew_pencil_classify(skew_pencil_instance(case, seed))
    assert rep.case is None or rep.rank2_members <= 2
