from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidlie import graded
from braidlie.corpus import build_matrix_example, sl2_qt
from braidlie.cyclotomic import root_of_unity
from braidlie.graded import (
    BasisVector,
    GradedObject,
    GroupData,
    HomogeneityError,
    Morphism,
    SignatureMismatch,
    braiding,
    compose,
    compose_all,
    identity,
    inverse_braiding,
    is_symmetric_on,
    left_dual,
    tensor,
)

from oracles import SL2, commutator, sl2_coords
from strategies import SYMMETRIC_GROUPS, graded_objects, morphisms

Z2 = GroupData((2,))


def odd_line(name="L", label="x"):
    return GradedObject(name, [BasisVector(label, (1,), (1,))], Z2)


def test_group_data_basics():
    g = GroupData((2, 3))
    assert g.reduce((5, 7)) == (1, 1)
    assert g.mul((1, 2), (1, 2)) == (0, 1)
    assert g.inv((1, 2)) == (1, 1)
    assert g.exponent == 6
    assert len(list(g.elements())) == 6
    assert GroupData(()).identity == ()
    with pytest.raises(ValueError):
        GroupData((0,))
    # chi(g) = zeta_2^{c1 g1} zeta_3^{c2 g2}
    assert g.pairing((1, 1), (1, 1)) == -root_of_unity(3, 1)


def test_labels_must_be_unique():
    with pytest.raises(ValueError):
        GradedObject.trivial("U", ["a", "a"])


def test_identity_and_tensor_of_identities():
    U = GradedObject.trivial("U", ["a", "b"])
    V = odd_line("V")
    f = Morphism((U,), (U,), {(0,): {(1,): 3}})
    assert compose(identity(U), f) == f
    assert compose(f, identity(U)) == f
    assert tensor(identity(U), identity(V.renamed("W"))) == identity((U, V.renamed("W")))


def test_sl2_bracket_on_h_e_from_matrix_commutator():
    H = sl2_qt()
    h, e = H.obj.index("h"), H.obj.index("e")
    got = compose(H.bracket, tensor(identity(H.obj), identity(H.obj)))
    img = got.image((h, e))
    expected = sl2_coords(commutator(SL2["h"], SL2["e"]))
    assert expected == {"e": 2}
    assert {H.obj.labels[j[0]]: s for j, s in img.items()} == expected


def test_homogeneity_rejected_eagerly():
    L = odd_line()
    E = GradedObject("E", [BasisVector("y", (0,), (0,))], Z2)
    with pytest.raises(HomogeneityError):
        Morphism((L,), (E,), {(0,): {(0,): 1}})
    with pytest.raises(IndexError):
        Morphism((L,), (L,), {(1,): {(0,): 1}})


def test_signature_mismatch():
    U = GradedObject.trivial("U", ["a"])
    V = GradedObject.trivial("V", ["b"])
    with pytest.raises(SignatureMismatch):
        compose(identity(U), identity(V))
    with pytest.raises(SignatureMismatch):
        identity(U) + identity(V)


def test_braiding_examples():
    U = GradedObject.trivial("U", ["a", "b"])
    C = braiding(U, U)
    assert C.image((0, 1)) == {(1, 0): 1}
    assert C.image((1, 1)) == {(1, 1): 1}
    x, y = odd_line("X", "x"), odd_line("Y", "y")
    assert braiding(x, y).image((0, 0)) == {(0, 0): -1}
    # unit object is the empty word
    assert braiding(x, ()) == identity(x)
    assert braiding((), x) == identity(x)


def test_is_symmetric_on_examples():
    assert is_symmetric_on([GradedObject.trivial("U", ["a", "b"])])
    assert is_symmetric_on([odd_line()])
    Z3 = GroupData((3,))
    w = GradedObject("W", [BasisVector("w", (1,), (1,))], Z3)
    assert not is_symmetric_on([w])
    with pytest.raises(graded.NotSymmetric):
        graded.require_symmetric([w])


def test_left_dual_small_cases():
    Z = GradedObject("Z", [], GroupData(()))
    d = left_dual(Z)
    assert d.dual.dim == 0 and d.ev.is_zero() and d.coev.is_zero()
    U = GradedObject.trivial("U", ["u"])
    d = left_dual(U)
    assert d.ev.to_matrix() == [[1]]
    assert d.coev.to_matrix() == [[1]]
    L = odd_line()
    d = left_dual(L)
    assert d.dual.basis[0].degree == (1,) and d.dual.basis[0].character == (1,)


def zigzag_holds(U, ev, coev, Us):
    iU, iUs = identity(U), identity(Us)
    first = compose_all(tensor(iU, ev), tensor(coev, iU))
    second = compose_all(tensor(ev, iUs), tensor(iUs, coev))
    return first == iU and second == iUs


@given(graded_objects())
def test_zigzag_identities(U):
    d = left_dual(U)
    assert zigzag_holds(U, d.ev, d.coev, d.dual)


@given(st.data())
def test_direct_sum_blocks_and_duality(data):
    U = data.draw(graded_objects(name="U"))
    V = data.draw(graded_objects(name="V", group=U.group))
    ds = graded.direct_sum(U, V, name="S")
    assert ds.obj.dim == U.dim + V.dim
    assert compose(ds.proj(0), ds.inj(0)) == identity(U)
    assert compose(ds.proj(1), ds.inj(1)) == identity(V)
    assert compose(ds.proj(1), ds.inj(0)).is_zero()
    total = compose(ds.inj(0), ds.proj(0)) + compose(ds.inj(1), ds.proj(1))
    assert total == identity(ds.obj)
    dsum, ev, coev = graded.direct_sum_duality(ds)
    assert zigzag_holds(ds.obj, ev, coev, dsum.obj)


def test_direct_sum_with_zero_object():
    U = GradedObject.trivial("U", ["a", "b"])
    Z = GradedObject("Z", [], U.group)
    ds = graded.direct_sum(U, Z)
    assert ds.obj.dim == U.dim
    assert ds.obj.labels == U.labels


def test_zigzag_for_matrix_example_sum():
    ex = build_matrix_example()
    ds = graded.direct_sum(ex.X, ex.Y, name="XY")
    dsum, ev, coev = graded.direct_sum_duality(ds)
    assert zigzag_holds(ds.obj, ev, coev, dsum.obj)


@given(st.data())
def test_braiding_naturality(data):
    group = data.draw(st.sampled_from(SYMMETRIC_GROUPS + [GroupData((3,)), GroupData((4,))]))
    U = data.draw(graded_objects("U", group=group, max_dim=2))
    V = data.draw(graded_objects("V", group=group, max_dim=2))
    f = data.draw(morphisms((U,), (U,)))
    g = data.draw(morphisms((V, V), (V,)))
    lhs = compose(braiding(U, V), tensor(f, g))
    rhs = compose(tensor(g, f), braiding((U,), (V, V)))
    assert lhs == rhs


@given(st.data())
def test_inverse_braiding_and_hexagon(data):
    group = data.draw(st.sampled_from([GroupData((3,)), GroupData((2, 2)), GroupData((4,))]))
    U = data.draw(graded_objects("U", group=group, max_dim=2))
    V = data.draw(graded_objects("V", group=group, max_dim=2))
    W = data.draw(graded_objects("W", group=group, max_dim=2))
    assert compose(inverse_braiding(U, V), braiding(U, V)) == identity((U, V))
    # C_{U, V(x)W} = (id_V (x) C_{U,W})(C_{U,V} (x) id_W)
    lhs = braiding((U,), (V, W))
    rhs = compose(tensor(identity(V), braiding(U, W)), tensor(braiding(U, V), identity(W)))
    assert lhs == rhs


@given(st.data())
def test_interchange_law(data):
    group = data.draw(st.sampled_from(SYMMETRIC_GROUPS))
    U = data.draw(graded_objects("U", group=group, max_dim=2))
    V = data.draw(graded_objects("V", group=group, max_dim=2))
    f1 = data.draw(morphisms((U,), (U,)))
    f2 = data.draw(morphisms((U,), (U,)))
    g1 = data.draw(morphisms((V,), (V, V)))
    g2 = data.draw(morphisms((V,), (V,)))
    assert tensor(compose(f1, f2), compose(g1, g2)) == compose(tensor(f1, g1), tensor(f2, g2))


@given(st.data())
def test_operations_preserve_homogeneity(data):
    group = data.draw(st.sampled_from([GroupData((3,)), GroupData((2, 2))]))
    U = data.draw(graded_objects("U", group=group, max_dim=2))
    f = data.draw(morphisms((U, U), (U,)))
    g = data.draw(morphisms((U,), (U, U)))
    for m in (compose(f, g), compose(g, f), tensor(f, g), f.scale(root_of_unity(3, 1)), compose(f, braiding(U, U))):
        Morphism(m.domain, m.codomain, m.entries)  # re-validates


def test_retype_flattens_row_major():
    U = GradedObject.trivial("U", ["a", "b"])
    X = graded.tensor_object((U, U), "X")
    assert X.labels == ("a(x)a", "a(x)b", "b(x)a", "b(x)b")
    m = identity((U, U)).retype((X,), (X,))
    assert m == identity(X)


def test_scale_and_witness():
    U = GradedObject.trivial("U", ["a", "b"])
    m = Morphism((U,), (U,), {(1,): {(0,): Fraction(1, 2)}, (0,): {(1,): 2}})
    w = m.first_nonzero()
    assert w.domain_index == (0,) and w.codomain_index == (1,) and w.value == 2
    assert m.scale(0).is_zero()
    assert (m - m).is_zero()
