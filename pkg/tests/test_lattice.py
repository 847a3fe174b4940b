import pytest
from hypothesis import given, strategies as st

from fano3.lattice import (
    ContractionSignature,
    IntersectionForm,
    blowup_curve_invariants,
    fsharp_cube,
    link_form,
    pair,
    sig,
    signature_pairing,
)


def test_signature_params_sorted_and_hashable():
    a = sig("B1", n=4, m=2, iotaY=1)
    b = ContractionSignature("B1", (("m", 2), ("iotaY", 1), ("n", 4)))
    assert a == b and hash(a) == hash(b)
    assert a["m"] == 2 and a.get("pa") is None
    assert ContractionSignature.from_json(a.to_json()) == a


def test_unknown_kind():
    with pytest.raises(ValueError):
        sig("E7")


@pytest.mark.parametrize("s,expected", [(sig("B5"), (-2, 1)), (sig("D1", d=4), (0, 4)), (sig("C1", d=5), (2, 7))])
def test_signature_pairing(s, expected):
    assert signature_pairing(s, 6) == expected


def test_form_validation():
    with pytest.raises(ValueError, match="2g-2"):
        IntersectionForm(("H", "M"), ((7, 1), (1, 0)), 5)
    with pytest.raises(ValueError, match="symmetric"):
        IntersectionForm(("H", "M"), ((8, 1), (2, 0)), 5)


def test_link_form_pairing():
    f = link_form(5, sig("D1", d=4))
    m2 = f.vector(H=1, M=-1)
    # <H - M, H - M> = 8 - 8 + 0
    assert pair(m2, m2, f) == 0
    assert pair(f.gen("H"), m2, f) == 4


def test_basis_change_requires_unimodular():
    f = link_form(6, sig("C1", d=5))
    with pytest.raises(ValueError, match="unimodular"):
        f.change_basis(("A", "B"), [f.vector(H=2), f.vector(M=1)])


@given(st.integers(5, 12), st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4), st.integers(-4, 4))
def test_pairing_invariant_under_basis_change(g, k, l, x, y):
    f = link_form(g, sig("D1", d=3))
    # unimodular: (H, M) -> (H, M + k H) then shear back with l
    u = f.vector(H=1, M=0)
    v = f.vector(H=k, M=1)
    new = f.change_basis(("H", "N"), [u, v])
    vec_old = x * u + y * v
    vec_new = new.vector(H=x, N=y)
    assert pair(vec_old, vec_old, f) == pair(vec_new, vec_new, new)


def test_blowup_invariants():
    inv = blowup_curve_invariants(24, 6, 0)  # twisted cubic on a cubic threefold, -K_Y = 2A
    assert (inv.KX3, inv.n) == (10, 8)
    with pytest.raises(ValueError, match="contraction impossible"):
        blowup_curve_invariants(16, 2, 2)


def test_fsharp_cube_on_diagonal():
    for g in range(5, 13):
        assert fsharp_cube(g, 13 - g) == 7 - g
