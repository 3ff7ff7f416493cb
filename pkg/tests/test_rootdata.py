import pytest

from vkt.errors import InvalidCartanData, NotTorsionFreePi1, SpecParseError
from vkt.rootdata import (
    RootDatum,
    dominant_representative,
    root_datum_from_spec,
    tensor_decompose,
    weight_multiplicities,
    weyl_dimension,
    weyl_group_elements,
)


def su2():
    return root_datum_from_spec("SU(2)")


def su3():
    return root_datum_from_spec("SU(3)")


def u1():
    return root_datum_from_spec("U(1)")


def test_su2_shape():
    rd = su2()
    assert rd.rank == 1
    assert rd.simple_roots == ((2,),)
    assert rd.simple_coroots == ((1,),)
    assert len(weyl_group_elements(rd)) == 2
    assert rd.factors[0].dual_coxeter == 2
    assert rd.rho_tilde == (1,)


def test_u1_shape():
    rd = u1()
    assert rd.rank == 1
    assert rd.root_pairs == ()
    assert len(weyl_group_elements(rd)) == 1
    assert rd.is_torus()
    assert rd.rho_tilde == (0,)


def test_su3_shape():
    rd = su3()
    assert rd.rank == 2
    assert len(weyl_group_elements(rd)) == 6
    assert len(rd.root_pairs) == 6
    assert rd.factors[0].dual_coxeter == 3
    assert rd.factors[0].name == "A2"


def test_named_groups_dual_coxeter_and_weyl_order():
    table = {
        "SU(4)": (24, [4]),
        "Spin(5)": (8, [3]),
        "Spin(7)": (48, [5]),
        "Sp(2)": (8, [3]),
        "Sp(3)": (48, [4]),
        "SU(2) x SU(2)": (4, [2, 2]),
    }
    for name, (worder, hv) in table.items():
        rd = root_datum_from_spec(name)
        assert len(weyl_group_elements(rd)) == worder, name
        assert [f.dual_coxeter for f in rd.factors] == hv, name


def test_factor_labels():
    labels = {
        "SU(5)": "A4",
        "Spin(5)": "B2",
        "Spin(7)": "B3",
        "Sp(3)": "C3",
    }
    for name, expected in labels.items():
        rd = root_datum_from_spec(name)
        assert rd.factors[0].name == expected, name
    # D4 and G2 through explicit Cartan matrices
    d4 = root_datum_from_spec({"cartan": [
        [2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]})
    assert d4.factors[0].name == "D4"
    g2 = root_datum_from_spec({"cartan": [[2, -1], [-3, 2]]})
    assert g2.factors[0].name == "G2"


def test_kappa_blocks():
    b2 = root_datum_from_spec("Spin(5)")
    assert b2.factors[0].kappa.to_rows() == [[2, -2], [-2, 4]]
    a1 = su2()
    assert a1.factors[0].kappa.to_rows() == [[2]]
    c2 = root_datum_from_spec("Sp(2)")
    assert c2.factors[0].kappa.to_rows() == [[4, -2], [-2, 2]]


def test_products_and_powers():
    rd = root_datum_from_spec("SU(2) x U(1)^2")
    assert rd.rank == 3
    assert rd.torus_indices == (1, 2)
    assert len(rd.factors) == 1
    rd2 = root_datum_from_spec("SU(2) x SU(3)")
    assert rd2.rank == 3
    assert len(rd2.factors) == 2
    assert [f.name for f in rd2.factors] == ["A1", "A2"]


def test_explicit_cartan_spec():
    rd = root_datum_from_spec({"cartan": [[2, -1], [-1, 2]], "torus_rank": 1})
    assert rd.rank == 3
    assert len(rd.factors) == 1


def test_bad_specs():
    with pytest.raises(SpecParseError):
        root_datum_from_spec("SO(3)")
    with pytest.raises(SpecParseError):
        root_datum_from_spec("Spin(9)")
    with pytest.raises(InvalidCartanData):
        root_datum_from_spec({"cartan": [[2, -2], [-2, 2]]})  # affine type
    with pytest.raises(InvalidCartanData):
        root_datum_from_spec({"cartan": [[2, 1], [1, 2]]})


def test_so3_style_datum_rejected():
    # adjoint-group A1 lattice: root = basis vector, coroot = twice the dual
    with pytest.raises(NotTorsionFreePi1):
        RootDatum.from_root_data(1, [(1,)], [(2,)])


def test_group_too_large_guard():
    from vkt.errors import GroupTooLarge
    rd = root_datum_from_spec("SU(4)")
    with pytest.raises(GroupTooLarge):
        weyl_group_elements(rd, max_order=5)


def test_u2_style_datum_accepted():
    rd = RootDatum.from_root_data(2, [(1, -1)], [(1, -1)])
    assert rd.rho == (0.5, -0.5)
    assert sum(rd.rho_tilde) % 2 == 1  # integral lift differs from rho by an invariant
    lifted = [a - b for a, b in zip(rd.rho_tilde, rd.rho)]
    assert lifted[0] == lifted[1]  # correction is W-invariant


def test_weyl_elements_permute_roots():
    for name in ("SU(3)", "Spin(5)"):
        rd = root_datum_from_spec(name)
        roots = {r for r, _ in rd.root_pairs}
        for w in weyl_group_elements(rd):
            assert {w.apply(r) for r in roots} == roots
            assert w.determinant in (1, -1)
            assert w.determinant == (-1) ** len(w.word)
            assert w.matrix.determinant() == w.determinant


def test_dominant_representative_su2():
    rd = su2()
    res = dominant_representative(rd, (-3,))
    assert res.weight == (3,)
    assert res.sign == -1
    assert not res.on_wall
    res0 = dominant_representative(rd, (0,))
    assert res0.on_wall
    assert res0.weight == (0,)


def test_dominant_representative_su3_roundtrip():
    rd = su3()
    mu = (1, 1)
    w = weyl_group_elements(rd)[4]  # some nontrivial element
    lam = w.apply(mu)
    res = dominant_representative(rd, lam)
    assert res.weight == mu
    assert res.element.apply(lam) == mu
    assert res.sign == res.element.determinant
    assert not res.on_wall


def test_dominant_representative_regular_dominant_is_fixed():
    rd = su3()
    res = dominant_representative(rd, (2, 3))
    assert res.weight == (2, 3)
    assert res.element.is_identity()
    assert res.sign == 1


def test_su2_weight_strings():
    rd = su2()
    for k in range(6):
        wm = weight_multiplicities(rd, (k,))
        assert wm == {(j,): 1 for j in range(-k, k + 1, 2)}
        assert weyl_dimension(rd, (k,)) == k + 1


def test_trivial_rep():
    for name in ("SU(2)", "SU(3)", "U(1)"):
        rd = root_datum_from_spec(name)
        assert weight_multiplicities(rd, (0,) * rd.rank) == {(0,) * rd.rank: 1}


def test_su3_adjoint_weights():
    rd = su3()
    wm = weight_multiplicities(rd, (1, 1))
    assert wm[(0, 0)] == 2
    assert sum(wm.values()) == 8
    assert weyl_dimension(rd, (1, 1)) == 8
    outer = {k: v for k, v in wm.items() if k != (0, 0)}
    assert len(outer) == 6 and set(outer.values()) == {1}


def test_su3_fundamental_dims():
    rd = su3()
    assert weyl_dimension(rd, (1, 0)) == 3
    assert weyl_dimension(rd, (0, 1)) == 3
    assert sum(weight_multiplicities(rd, (2, 0)).values()) == weyl_dimension(rd, (2, 0)) == 6


def test_spin5_dims():
    rd = root_datum_from_spec("Spin(5)")
    # vector and spinor representations of Spin(5)
    assert weyl_dimension(rd, (1, 0)) == 5
    assert weyl_dimension(rd, (0, 1)) == 4
    wm = weight_multiplicities(rd, (1, 0))
    assert sum(wm.values()) == 5 and wm[(0, 0)] == 1


def test_weight_system_weyl_invariant():
    rd = su3()
    wm = weight_multiplicities(rd, (2, 1))
    for w in weyl_group_elements(rd):
        for nu, m in wm.items():
            assert wm[w.apply(nu)] == m
    assert sum(wm.values()) == weyl_dimension(rd, (2, 1))


def test_clebsch_gordan_su2():
    rd = su2()
    assert tensor_decompose(rd, (2,), (1,)) == {(1,): 1, (3,): 1}
    assert tensor_decompose(rd, (3,), (3,)) == {(0,): 1, (2,): 1, (4,): 1, (6,): 1}


def test_tensor_unit():
    for name in ("SU(2)", "SU(3)", "Spin(5)"):
        rd = root_datum_from_spec(name)
        lam = (1,) * rd.rank
        assert tensor_decompose(rd, lam, (0,) * rd.rank) == {lam: 1}


def test_tensor_su3():
    rd = su3()
    assert tensor_decompose(rd, (1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}
    # 3 x 3 = 6 + 3bar
    assert tensor_decompose(rd, (1, 0), (1, 0)) == {(2, 0): 1, (0, 1): 1}


def test_tensor_dimension_balance_and_symmetry():
    cases = [("SU(3)", (1, 1), (2, 0)), ("Spin(5)", (0, 1), (1, 1)),
             ("SU(2) x U(1)", (2, 3), (1, -1))]
    for name, lam, mu in cases:
        rd = root_datum_from_spec(name)
        dec = tensor_decompose(rd, lam, mu)
        assert dec == tensor_decompose(rd, mu, lam)
        assert all(v > 0 for v in dec.values())
        total = sum(v * weyl_dimension(rd, nu) for nu, v in dec.items())
        assert total == weyl_dimension(rd, lam) * weyl_dimension(rd, mu)


def test_tensor_torus():
    rd = u1()
    assert tensor_decompose(rd, (3,), (-5,)) == {(-2,): 1}


def test_describe_roundtrip():
    rd = root_datum_from_spec("SU(3) x U(1)")
    d = rd.describe()
    assert d["rank"] == 3
    assert d["torus_rank"] == 1
    assert d["factors"][0]["dual_coxeter"] == 3
