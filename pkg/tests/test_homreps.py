import random

import pytest

from homrep.braid_hecke import BraidWord, braid_relations_check, evaluate_braid_word, minimal_polynomial_degree, quadratic_check
from homrep.homreps import (
    LocalSystemSpec,
    basis_change_u_to_v,
    burau_reduced,
    burau_unreduced,
    hmbm_dimension,
    printed_binomial,
    lk_pairs,
    lk_rep,
    lk_rep_u_basis,
    reduced_burau_basis,
    specialize_rep,
    trivial_rep,
    u_pairs,
)
from homrep.linalg import Matrix, MatrixRep
from homrep.scalars import GENERIC_Q, DenominatorVanishes, RationalFunction, cyclotomic

q = RationalFunction.q()
t = RationalFunction.t()


def test_trivial():
    rep = trivial_rep(3)
    assert all(g == Matrix([[1]], GENERIC_Q) for g in rep.gens)
    assert quadratic_check(rep, 1, -q).passed
    assert trivial_rep(1).dim == 1
    assert hmbm_dimension(5, 0) == 1


def test_burau_unreduced_block():
    rep = burau_unreduced(2)
    assert rep.gens[0] == Matrix([[1 - q, q], [1, 0]], GENERIC_Q)
    # characteristic polynomial (x - 1)(x + q)
    M = rep.gens[0]
    assert M.det() == -q and M[0, 0] + M[1, 1] == 1 - q


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_burau_eigenstructure(n):
    rep = burau_unreduced(n)
    ones = [1] * n
    covector = [q ** i for i in range(n)]
    for M in rep.gens:
        assert M.apply(ones) == [GENERIC_Q.one()] * n
        assert Matrix([covector], GENERIC_Q) @ M == Matrix([covector], GENERIC_Q)
    assert quadratic_check(rep, 1, -q).passed


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_burau_reduced(n):
    rep = burau_reduced(n)
    assert rep.dim == n - 1
    assert quadratic_check(rep, 1, -q).passed
    full = burau_unreduced(n)
    for b in reduced_burau_basis(n):
        for M in full.gens:
            image = M.apply(b)
            assert sum((q ** i * x for i, x in enumerate(image)), RationalFunction(0)).is_zero()


def test_burau_reduced_n2():
    assert burau_reduced(2).gens[0] == Matrix([[-q]], GENERIC_Q)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lk_relations(n):
    rep = lk_rep(n)
    assert rep.dim == n * (n - 1) // 2
    assert braid_relations_check(rep).passed


@pytest.mark.parametrize("n", [3, 4])
def test_lk_minimal_polynomial(n):
    rep = lk_rep(n)
    assert minimal_polynomial_degree(rep.gens[0]) == 3
    assert not quadratic_check(rep, 1, -q).passed
    # (s - 1)(s + q)(s - q^2 t) = 0
    M = rep.gens[0]
    I = Matrix.identity(rep.dim, rep.domain)
    assert ((M - I) @ (M + I.scale(q)) @ (M - I.scale(q * q * t))).is_zero()


def test_basis_change_examples():
    C = basis_change_u_to_v(3)
    vs, us = lk_pairs(3), u_pairs(3)
    row = dict(zip(us, C.rows[vs.index((1, 2))]))
    assert {k for k, v in row.items() if v == 1} == {(1, 1)}
    row = dict(zip(us, C.rows[vs.index((1, 3))]))
    assert {k for k, v in row.items() if v == 1} == {(1, 1), (1, 2), (2, 2)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_basis_change_unimodular(n):
    C = basis_change_u_to_v(n)
    assert C.det() in (1, -1)
    # triangular once both bases are ordered by interval length, then start
    vs, us = lk_pairs(n), u_pairs(n)
    v_order = sorted(range(len(vs)), key=lambda r: (vs[r][1] - vs[r][0], vs[r][0]))
    u_order = sorted(range(len(us)), key=lambda c: (us[c][1] - us[c][0], us[c][0]))
    P = C.submatrix(v_order, u_order)
    assert all(P[r, c] == 0 for r in range(P.nrows) for c in range(r + 1, P.ncols))


def test_u_basis_representation():
    rep = lk_rep_u_basis(4)
    assert braid_relations_check(rep).passed
    assert rep.meta["labels"][0] == "u_{1,1}"


def test_specialisations():
    rep = specialize_rep(lk_rep(4), t="qinv")
    assert rep.domain.kind == "q"
    assert specialize_rep(burau_reduced(3), q=3).domain == cyclotomic(3)
    assert specialize_rep(lk_rep(3), t="minus1").dim == 3


def test_specialize_pole():
    rep = MatrixRep(2, [Matrix([[1 / (q ** 2 + q + 1)]], GENERIC_Q)], GENERIC_Q)
    with pytest.raises(DenominatorVanishes):
        specialize_rep(rep, q=3)


def test_specialize_commutes_with_words():
    rng = random.Random(5)
    rep = burau_reduced(4)
    spec = specialize_rep(rep, q=5)
    for _ in range(5):
        letters = tuple(rng.choice([1, 2, 3, -1, -2, -3]) for _ in range(rng.randrange(1, 6)))
        w = BraidWord(4, letters)
        assert evaluate_braid_word(rep, w).specialize(q=5) == evaluate_braid_word(spec, w)


def test_dimension_bookkeeping():
    assert hmbm_dimension(4, 2) == 6
    assert hmbm_dimension(3, 1) == 2
    assert printed_binomial(4, 2) == 10  # printed count, reported as a discrepancy
    with pytest.raises(ValueError):
        LocalSystemSpec(0, 1)
