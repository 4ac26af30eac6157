"""Acceptance suite: one test per criterion, summarized at the end of the run.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
import random
import sys
import time

import pytest

from oracles import periodic_tor_truncated_poly
from relhom.algebra import left_ideal, scalar_subalgebra, subalgebra, two_sided_ideal
from relhom.bar import bar_resolution, quotient_bimodule, relative_tor
from relhom.fixtures import (EXAMPLE_BASIS, cyclic_group_table, full_matrix, lu_example,
                             lu_example_factors, symmetric_group_table, truncated_polynomial,
                             upper_triangular)
from relhom.module import (character_module, is_projective, quotient_module, regular_left,
                           submodule)
from relhom.twisted import (AssociativityError, FactorizationError, build_twisted_algebra,
                            check_lu, induced_resolution, verify_prop_lu, verify_prop_reduction,
                            verify_prop_upper, zappa_szep)
from strategies import random_instance, random_left_module, random_right_module

METHODS = ("definition", "left-resolution", "right-resolution")


@pytest.mark.criterion(1, "dim Ae = 6, dim A ebar = 4, dim AeA = 9 on the fixture")
def test_fixture_dimensions():
    start = time.perf_counter()
    fx = lu_example()
    a, e = fx.algebra, fx.e
    dims = (left_ideal(a, [e]).dim, left_ideal(a, [a.one - e]).dim,
            two_sided_ideal(a, [e]).dim)
    assert dims == (6, 4, 9)
    assert time.perf_counter() - start < 1


@pytest.mark.criterion(2, "AeA is not projective; 9 is not 6a + 4b")
def test_non_projectivity():
    start = time.perf_counter()
    fx = lu_example()
    a = fx.algebra
    aea, _ = submodule(regular_left(a), two_sided_ideal(a, [fx.e]))
    assert not is_projective(a, aea).ok
    # indecomposable projectives are A e (dim 6) and A ebar (dim 4)
    p1, p2 = left_ideal(a, [fx.e]).dim, left_ideal(a, [a.one - fx.e]).dim
    assert (p1, p2) == (6, 4)
    assert not any(p1 * i + p2 * j == aea.dim
                   for i in range(aea.dim // p1 + 1) for j in range(aea.dim // p2 + 1))
    assert time.perf_counter() - start < 5


@pytest.mark.criterion(3, "relative Tor(Abar, Abar) = (1, 0, 0, 0, 0) by all three methods")
def test_stratification_tor():
    start = time.perf_counter()
    fx = lu_example()
    abar = quotient_bimodule(fx.algebra, two_sided_ideal(fx.algebra, [fx.e]))
    tor = relative_tor(fx.s, abar, abar, 4, METHODS)
    assert set(tor.methods) == set(METHODS)
    for dims in tor.methods.values():
        assert dims == [1, 0, 0, 0, 0]
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(4, "bar identities and relative projectivity on 25 random pairs")
def test_bar_identities_random():
    seen = 0
    for seed in range(25):
        inst = random_instance(seed)
        assert inst.a.dim <= 5 and inst.s.sub.dim <= 3
        m = random_left_module(random.Random(seed), inst)
        bar = bar_resolution(inst.s, m, 3, verify=False)
        rep = bar.verify(projectivity=True)
        assert rep.ok, f"{inst}: {rep}"
        seen += 1
    assert seen == 25


@pytest.mark.criterion(5, "three Tor methods agree on 10 random instances, degrees 0..3")
def test_tor_consistency_random():
    for seed in range(1000, 1010):
        inst = random_instance(seed)
        rng = random.Random(seed)
        n, m = random_right_module(rng, inst), random_left_module(rng, inst)
        tor = relative_tor(inst.s, n, m, 3, METHODS)
        assert len(set(map(tuple, tor.methods.values()))) == 1, f"{inst}: {tor.methods}"


@pytest.mark.criterion(6, "K[x]/x^2 over K: Tor(K, K) = 1 in degrees 0..4, as the oracle")
def test_semisimple_reduction():
    a = truncated_polynomial(2)
    k_right = character_module(a, [1, 0], "right")
    k_left = character_module(a, [1, 0], "left")
    tor = relative_tor(scalar_subalgebra(a), k_right, k_left, 4, METHODS)
    assert tor.dims == periodic_tor_truncated_poly(2, 4) == [1, 1, 1, 1, 1]


@pytest.mark.criterion(7, "LU checks, consequences and induced resolution")
def test_lu_machinery():
    fx = lu_example()
    assert check_lu(fx.s, fx.e, fx.l, fx.u).ok
    ut = upper_triangular(3)
    diag = subalgebra(ut, ["E11", "E22", "E33"])
    assert check_lu(diag, ut["E11"], diag, subalgebra(ut, list(ut.names))).ok
    m2 = full_matrix(2)
    rep = check_lu(subalgebra(m2, ["E11", "E22"]), m2["E11"],
                   subalgebra(m2, ["E11", "E21", "E22"]), subalgebra(m2, ["E11", "E12", "E22"]))
    assert not rep.ok
    assert "dim(A1 (x)_S A2) = 5 != 4 = dim(A)" in rep.report.all_failures()
    assert verify_prop_upper(fx.u, fx.e).ok
    assert verify_prop_lu(fx.s, fx.e, fx.l, fx.u).ok
    assert verify_prop_reduction(fx.s, fx.e, fx.l, fx.u, "left").ok
    assert verify_prop_reduction(fx.s, fx.e, fx.l, fx.u, "right").ok
    u = fx.u.sub
    ubar, _ = quotient_module(regular_left(u), two_sided_ideal(u, [fx.u.pullback(fx.e.vec)]))
    _, rep = induced_resolution(fx.s, fx.l, fx.u, ubar, 3)
    assert rep.ok, str(rep)


@pytest.mark.criterion(8, "twisted algebra from tau equals the fixture; perturbed tau has a witness")
def test_twisted_round_trip():
    ti = lu_example_factors()
    alg, _, _ = build_twisted_algebra(ti.s_l, ti.s_u, ti.tau)
    assert alg.permuted(EXAMPLE_BASIS) == lu_example().algebra
    bad = lu_example_factors(tau_wv={("e22", "e22"): 1})
    with pytest.raises(AssociativityError) as info:
        build_twisted_algebra(bad.s_l, bad.s_u, bad.tau)
    assert len(info.value.witnesses) > 0


@pytest.mark.criterion(9, "S3 = A3 . <(0 1)> is a twisted product; Z/4 with Z/2 twice is not")
def test_zappa_szep():
    elems, table = symmetric_group_table(3)
    idx = {g: k for k, g in enumerate(elems)}
    a3 = [idx[(0, 1, 2)], idx[(1, 2, 0)], idx[(2, 0, 1)]]
    swap = [idx[(0, 1, 2)], idx[(1, 0, 2)]]
    rep = zappa_szep(table, a3, swap)
    assert rep.report.ok and rep.is_iso
    with pytest.raises(FactorizationError, match="intersection nontrivial"):
        zappa_szep(cyclic_group_table(4), [0, 2], [0, 2])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
