import pytest
from hypothesis import given, settings

from oracles import brute_force_associative, dense_table, ideal_dim
from relhom.algebra import (Algebra, AlgebraError, AlgebraHom, IdempotentPair, check_algebra,
                            check_group, check_subalgebra, corner_algebra, generated_subalgebra,
                            group_algebra, ideal_product, is_diagonal, is_lower_triangular,
                            is_upper_triangular, left_ideal, opposite_algebra, peirce,
                            quotient_algebra, right_ideal, scalar_subalgebra, subalgebra,
                            two_sided_ideal)
from relhom.exactla import GF, QQ, Matrix
from relhom.fixtures import (EXAMPLE_BASIS, cyclic_group_table, full_matrix, lu_example,
                             symmetric_group_table, truncated_polynomial, two_cycle_zero_relation,
                             upper_triangular)
from strategies import instances


@pytest.fixture(scope="module")
def fx():
    return lu_example()


def test_fixture_basis_and_products(fx):
    a = fx.algebra
    assert a.names == EXAMPLE_BASIS
    assert a["x"] * a["y"] == a["xy"] == a["y"] * a["x"]
    assert a["w"] * a["v"] == a.zero
    assert a["v"] * a["w"] == a["vw"]
    assert a["e11"] + a["e22"] == a.one
    assert check_algebra(a).ok


def test_check_algebra_agrees_with_brute_force(fx):
    assert brute_force_associative(dense_table(fx.algebra)) == []
    bad = Algebra.from_products(QQ, ["1", "a", "b"], {
        ("1", "1"): "1", ("1", "a"): "a", ("a", "1"): "a", ("1", "b"): "b", ("b", "1"): "b",
        ("a", "a"): "b", ("a", "b"): "a"}, ["1"])
    rep = check_algebra(bad)
    oracle = brute_force_associative(dense_table(bad))
    assert not rep.ok
    assert len(rep.details["associativity_witnesses"]) == len(oracle)


@settings(max_examples=15, deadline=None)
@given(instances)
def test_random_instances_are_algebras(inst):
    assert check_algebra(inst.a).ok
    assert brute_force_associative(dense_table(inst.a)) == []
    assert check_subalgebra(inst.s).ok


def test_fixture_ideal_dimensions(fx):
    a, e = fx.algebra, fx.e
    ebar = a.one - e
    assert left_ideal(a, [e]).dim == 6
    assert left_ideal(a, [ebar]).dim == 4
    aea = two_sided_ideal(a, [e])
    assert aea.dim == 9
    assert ideal_dim(dense_table(a), [[1] + [0] * 9]) == 9
    assert right_ideal(a, [e]).dim == 6


def test_peirce_fixture(fx):
    blocks = peirce(fx.algebra, fx.e)
    assert blocks.dims == (4, 2, 2, 2)
    assert sum(blocks.dims) == 10
    # L is lower and U upper triangular with respect to e
    assert is_lower_triangular(fx.l, fx.e)
    assert is_upper_triangular(fx.u, fx.e)
    assert is_diagonal(fx.s, fx.e)
    assert not is_upper_triangular(fx.l, fx.e)


def test_idempotent_pair():
    a = upper_triangular(2)
    pair = IdempotentPair.of(a["E11"])
    assert pair.ebar == a["E22"]
    with pytest.raises(AlgebraError):
        IdempotentPair.of(a["E12"])


def test_quotient_algebra(fx):
    a = fx.algebra
    q, proj = quotient_algebra(a, two_sided_ideal(a, [fx.e]))
    assert q.dim == 1
    assert check_algebra(q).ok
    with pytest.raises(AlgebraError):
        quotient_algebra(a, left_ideal(a, [a["x"]]))


def test_quotient_of_truncated_polynomial():
    a = truncated_polynomial(4)
    q, proj = quotient_algebra(a, two_sided_ideal(a, [a["x^2"]]))
    assert q.dim == 2
    assert q == truncated_polynomial(2)


def test_opposite_algebra_is_involutive(fx):
    a = fx.algebra
    op = opposite_algebra(a)
    assert opposite_algebra(op) is a
    assert check_algebra(op).ok
    assert op.mul({a.index("y"): QQ(1)}, {a.index("v"): QQ(1)}) == {a.index("vy"): QQ(1)}


def test_subalgebra_checks(fx):
    assert check_subalgebra(fx.l).ok
    assert check_subalgebra(scalar_subalgebra(fx.algebra)).ok
    with pytest.raises(AlgebraError):
        subalgebra(fx.algebra, ["e11", "e22", "w", "v"])


def test_generated_subalgebra():
    a = full_matrix(2)
    emb = generated_subalgebra(a, [a["E12"]])
    assert emb.sub.dim == 2
    emb = generated_subalgebra(a, [a["E12"], a["E21"]])
    assert emb.sub.dim == 4


def test_ideal_product():
    a = upper_triangular(3)
    rad = two_sided_ideal(a, [a["E12"], a["E23"]])
    assert rad.dim == 3
    assert ideal_product(a, rad, a.one, rad).dim == 1
    assert ideal_product(a, rad, a["E22"], rad).dim == 1
    assert ideal_product(a, rad, a["E11"], rad).dim == 0


def test_algebra_hom():
    a = truncated_polynomial(2)
    k = scalar_subalgebra(a).sub
    eps = AlgebraHom(a, k, Matrix.from_dense(QQ, [[1, 0]]))
    assert eps.check().ok
    bad = AlgebraHom(a, k, Matrix.from_dense(QQ, [[1, 1]]))
    assert not bad.check().ok


def test_corner_algebra(fx):
    c, incl = corner_algebra(fx.algebra, fx.e)
    assert c.dim == 4
    assert check_algebra(c).ok


def test_group_algebra_and_group_check():
    elems, table = symmetric_group_table(3)
    assert check_group(table) == 0
    kg = group_algebra(table)
    assert kg.dim == 6 and check_algebra(kg).ok
    with pytest.raises(AlgebraError):
        check_group([[0, 1], [1, 1]])
    assert group_algebra(cyclic_group_table(3), GF(3)).field == GF(3)


def test_zero_relation_algebra():
    a = two_cycle_zero_relation()
    assert check_algebra(a).ok
    assert a["a"] * a["b"] == a.zero
    assert a["b"] * a["a"] == a["ba"]


def test_permuted_preserves_structure(fx):
    a = fx.algebra
    rev = a.permuted(list(reversed(a.names)))
    assert rev != a
    assert rev.permuted(list(a.names)) == a
