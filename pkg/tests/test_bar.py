import random

import pytest
from hypothesis import given, settings

from oracles import periodic_tor_truncated_poly
from relhom.algebra import scalar_subalgebra, subalgebra, two_sided_ideal
from relhom.bar import (BarResolution, TorMismatchError, bar_resolution, is_stratifying,
                        ordinary_tor, quotient_bimodule, relative_tor)
from relhom.exactla import GF, QQ, Matrix
from relhom.fixtures import lu_example, truncated_polynomial, two_cycle_zero_relation
from relhom.homology import ChainComplex, verify_homotopy
from relhom.module import (ModuleError, character_module, regular_bimodule, regular_left,
                           regular_right)
from strategies import instances, random_left_module, random_right_module


@pytest.fixture(scope="module")
def fx():
    return lu_example()


@pytest.fixture(scope="module")
def abar(fx):
    return quotient_bimodule(fx.algebra, two_sided_ideal(fx.algebra, [fx.e]))


def test_bar_dimensions_fixture(fx):
    bar = BarResolution(fx.s, regular_left(fx.algebra), 2)
    # A (x)_S A splits over the two vertices: 6*6 + 4*4
    assert [bar.b(k).dim for k in range(-1, 2)] == [10, 52, 272]


def test_bar_identities_fixture(fx, abar):
    bar = bar_resolution(fx.s, abar, 3)
    rep = bar.verify()
    assert rep.ok, str(rep)


def test_simplicial_face_relations(fx):
    bar = BarResolution(fx.s, regular_left(fx.algebra), 3)
    # d_i d_j = d_{j-1} d_i for i < j, on T_3 -> T_1
    for j in range(3):
        for i in range(j):
            lhs = bar.face(2, i) @ bar.face(3, j)
            rhs = bar.face(2, j - 1) @ bar.face(3, i)
            assert lhs == rhs


def test_homotopy_is_left_s_linear(fx):
    bar = BarResolution(fx.s, regular_left(fx.algebra), 2)
    for k in range(0, 2):
        s_k = bar.s(k)
        src, dst = bar.b(k), bar.b(k + 1)
        for b in range(fx.s.sub.dim):
            img = fx.s.image({b: QQ(1)})
            for j in range(src.dim):
                assert s_k.apply(src.act_left(img, {j: QQ(1)})) == dst.act_left(img, s_k.col(j))


def test_zeroed_homotopy_fails_in_degree_zero(fx):
    bar = BarResolution(fx.s, regular_left(fx.algebra), 2)
    c = bar.complex
    hom = dict(c.homotopy)
    hom[0] = Matrix.zeros(QQ, c.dim(1), c.dim(0))
    broken = ChainComplex(QQ, c.low, c.dims, c.diffs, hom, c.modules)
    rep = verify_homotopy(broken)
    assert not rep.ok
    assert "degree 0" in rep.failures[0]


def test_bar_rejects_non_ambient_module(fx):
    with pytest.raises(ModuleError):
        BarResolution(fx.s, regular_left(fx.s.sub), 1)


@settings(max_examples=12, deadline=None)
@given(instances)
def test_bar_identities_random(inst):
    m = random_left_module(random.Random(inst.seed), inst)
    rep = bar_resolution(inst.s, m, 2, verify=False).verify()
    assert rep.ok, str(rep)


def test_right_side_bar(fx, abar):
    bar = bar_resolution(fx.s, abar, 2, side="right")
    assert bar.verify().ok


def test_fixture_tor_low_degrees(fx, abar):
    tor = relative_tor(fx.s, abar, abar, 2)
    assert tor.dims == [1, 0, 0]
    assert tor.agree and set(tor.methods) == {"definition", "left-resolution",
                                              "right-resolution"}


@pytest.mark.parametrize("n", [2, 3])
def test_semisimple_reduction_against_periodic_resolution(n):
    a = truncated_polynomial(n)
    k_right = character_module(a, [1] + [0] * (n - 1), "right")
    k_left = character_module(a, [1] + [0] * (n - 1), "left")
    tor = relative_tor(scalar_subalgebra(a), k_right, k_left, 4)
    assert tor.dims == periodic_tor_truncated_poly(n, 4) == [1] * 5


def test_tor_over_prime_field():
    a = truncated_polynomial(2, GF(3))
    k_right = character_module(a, [1, 0], "right")
    k_left = character_module(a, [1, 0], "left")
    assert relative_tor(scalar_subalgebra(a), k_right, k_left, 3).dims == [1, 1, 1, 1]


def test_relative_equals_ordinary_over_semisimple_subring():
    a = two_cycle_zero_relation()
    s = subalgebra(a, ["e1", "e2"])
    for e in ("e1", "e2"):
        q = quotient_bimodule(a, two_sided_ideal(a, [a[e]]))
        assert relative_tor(s, q, q, 3).dims == ordinary_tor(a, q, q, 3).dims


def test_tor_with_free_argument_vanishes(fx, abar):
    tor = relative_tor(fx.s, regular_right(fx.algebra), abar, 2)
    assert tor.dims[1:] == [0, 0]
    assert tor.dims[0] == abar.dim


@settings(max_examples=10, deadline=None)
@given(instances)
def test_tor_methods_agree_random(inst):
    rng = random.Random(inst.seed)
    n, m = random_right_module(rng, inst), random_left_module(rng, inst)
    tor = relative_tor(inst.s, n, m, 2)
    assert tor.agree


def test_tor_module_checks(fx):
    with pytest.raises(ModuleError):
        relative_tor(fx.s, regular_left(fx.algebra), regular_left(fx.algebra), 1)


def test_mismatch_error_type():
    assert issubclass(TorMismatchError, RuntimeError)


def test_stratify_fixture_low_degree(fx):
    rep = is_stratifying(fx.s, fx.e, 2)
    assert rep.ok and rep.verdict == "stratifying-up-to-2"
    assert rep.dim_ideal == 9 and rep.dim_quotient == 1


def test_stratify_zero_relation():
    a = two_cycle_zero_relation()
    s = subalgebra(a, ["e1", "e2"])
    assert is_stratifying(s, a["e1"], 4).verdict == "stratifying-up-to-4"
    rep = is_stratifying(s, a["e2"], 4)
    assert rep.verdict == "fails-at-2" and rep.failing_degree == 2
    assert rep.tor.dims == [1, 0, 1, 0, 0]


def test_stratify_input_errors(fx):
    from relhom.algebra import AlgebraError
    a = fx.algebra
    with pytest.raises(AlgebraError):
        is_stratifying(fx.s, a["x"], 2)
    with pytest.raises(AlgebraError):
        is_stratifying(scalar_subalgebra(a), fx.e, 2)
    with pytest.raises(ValueError):
        is_stratifying(fx.s, fx.e, 0)


def test_bimodule_quotient(fx):
    q = quotient_bimodule(fx.algebra, two_sided_ideal(fx.algebra, [fx.e]))
    assert q.dim == 1 and q.side == "bimodule"
    assert regular_bimodule(fx.algebra).dim == 10
