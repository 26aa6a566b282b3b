import pytest

from homrep.forms import (
    GENERIC,
    FormVanishesAtSpecialization,
    NotNormalizable,
    SesquiForm,
    Specialization,
    definiteness_probe,
    hermitian_normalize,
    invariant_form_space,
    radical,
    radical_filtration,
    specialize_gram,
)
from homrep.homreps import basis_change_u_to_v, burau_reduced, lk_rep, specialize_rep, trivial_rep
from homrep.linalg import Matrix, spin
from homrep.scalars import GENERIC_Q, GENERIC_QT, RationalFunction

q = RationalFunction.q()


@pytest.mark.parametrize("rep", [trivial_rep(3), burau_reduced(3), burau_reduced(4), lk_rep(3)],
                         ids=["trivial", "burau3", "burau4", "lk3"])
def test_form_space_one_dimensional(rep):
    spaces = invariant_form_space(rep)
    assert len(spaces) == 1
    form = hermitian_normalize(spaces[0])
    assert form.is_hermitian() and form.is_invariant(rep)


def test_normalize_q_squared():
    # bar(G)^T = q^-2 G, so G needs rescaling by a power of q
    G = Matrix([[q, 0], [0, q]], GENERIC_Q)
    form = hermitian_normalize(G)
    assert form.is_hermitian()
    d = form.gram.rows[0][0]
    assert d == d.bar() and form.gram == Matrix.identity(2, GENERIC_Q).scale(d)


def test_normalize_skew_form():
    # bar(G)^T = -G with a constant: c = -1, so 1 + c = 0 and a power of q is needed
    G = Matrix([[0, 1], [-1, 0]], GENERIC_Q)
    with pytest.raises(NotNormalizable):
        hermitian_normalize(G)


def test_normalize_zero():
    with pytest.raises(NotNormalizable):
        hermitian_normalize(Matrix.zeros(2, 2, GENERIC_Q))


def test_burau_radicals():
    f3 = hermitian_normalize(invariant_form_space(burau_reduced(3))[0])
    assert radical(f3).dim == 0
    assert radical(f3, Specialization(q=3)).dim == 1
    assert radical(f3, Specialization(q=2)).dim == 0
    f4 = hermitian_normalize(invariant_form_space(burau_reduced(4))[0])
    assert radical(f4, Specialization(q=2)).dim == 1
    assert radical(f4, Specialization(q=4)).dim == 1
    assert radical(f4, Specialization(q=3)).dim == 0


def test_radical_is_invariant():
    f = hermitian_normalize(invariant_form_space(burau_reduced(4))[0])
    rad = radical(f, Specialization(q=4))
    rep = specialize_rep(burau_reduced(4), q=4)
    assert spin(rad, rep.gens) == rad


def test_filtration():
    rep = specialize_rep(burau_reduced(3), q=3)
    f = hermitian_normalize(invariant_form_space(burau_reduced(3))[0])
    G, _ = specialize_gram(f.gram, Specialization(q=3))
    layers = radical_filtration(rep, SesquiForm(G))
    assert [d for _, d in layers] == [1, 1]


def test_rescale_refusal():
    phi3 = 1 + q + q ** 2
    G = Matrix([[phi3, 0], [0, phi3 * q]], GENERIC_Q)
    with pytest.raises(FormVanishesAtSpecialization):
        specialize_gram(G, Specialization(q=3), rescale=False)
    H, v = specialize_gram(G, Specialization(q=3))
    assert v == 1 and H.rank() == 2


def test_specialization_label():
    assert GENERIC.label == "q=generic"
    assert Specialization(5, "qinv").label == "q=root:5,t=qinv"


def test_probe_sign():
    assert definiteness_probe(SesquiForm(Matrix([[-1]], GENERIC_Q)), 0.4) == (0, 1, 0)
    assert definiteness_probe(SesquiForm(Matrix([[q + q ** -1]], GENERIC_Q)), 0.0) == (1, 0, 0)


@pytest.mark.parametrize("angles", [(0.3, 2.1), (1.1, 0.4), (2.5, 1.3)])
def test_probe_basis_independent(angles):
    # Sylvester: the inertia does not depend on the basis
    rep = lk_rep(4)
    form = hermitian_normalize(invariant_form_space(rep)[0])
    C = basis_change_u_to_v(4)
    C = Matrix(C.rows, GENERIC_QT)
    moved = SesquiForm(C.conj_transpose() @ form.gram @ C)
    assert definiteness_probe(form, *angles) == definiteness_probe(moved, *angles)
