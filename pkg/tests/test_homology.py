import pytest

from oracles import bareiss_rank
from relhom.exactla import QQ, Matrix
from relhom.fixtures import truncated_polynomial
from relhom.homology import (ChainComplex, ComplexError, homology_dims, tensor_complex,
                             verify_complex, verify_homotopy)
from relhom.module import character_module, regular_left


def _m(rows):
    return Matrix.from_dense(QQ, rows)


def test_homology_of_small_complex():
    # 0 -> Q --[1,1]^T--> Q^2 --[1,-1]--> Q -> 0, exact
    d1 = _m([[1, -1]])
    d2 = _m([[1], [1]])
    c = ChainComplex(QQ, 0, [1, 2, 1], {1: d1, 2: d2}, bounded=True)
    assert verify_complex(c).ok
    assert homology_dims(c) == [0, 0, 0]


def test_homology_matches_rank_oracle():
    d1 = _m([[1, 2, 3], [2, 4, 6]])
    c = ChainComplex(QQ, 0, [2, 3], {1: d1}, bounded=True)
    r = bareiss_rank([[1, 2, 3], [2, 4, 6]])
    assert homology_dims(c) == [2 - r, 3 - r]


def test_not_a_complex():
    c = ChainComplex(QQ, 0, [1, 1, 1], {1: _m([[1]]), 2: _m([[1]])}, bounded=True)
    assert not verify_complex(c).ok
    with pytest.raises(ComplexError):
        homology_dims(c)


def test_shape_mismatch_rejected():
    with pytest.raises(ComplexError):
        ChainComplex(QQ, 0, [1, 2], {1: _m([[1]])})


def test_unbounded_truncation_needs_next_map():
    c = ChainComplex(QQ, 0, [1, 1], {1: _m([[0]])})
    assert homology_dims(c, [0]) == [1]
    with pytest.raises(ComplexError):
        homology_dims(c, [1])


def test_contracting_homotopy():
    d1 = _m([[1]])
    s0 = _m([[1]])
    c = ChainComplex(QQ, 0, [1, 1], {1: d1}, homotopy={0: s0}, bounded=True)
    assert verify_homotopy(c).ok
    bad = ChainComplex(QQ, 0, [1, 1], {1: d1}, homotopy={0: _m([[2]])}, bounded=True)
    rep = verify_homotopy(bad)
    assert not rep.ok and "d s" in rep.failures[0]


def test_truncated_drops_low_degrees():
    d1 = _m([[1, -1]])
    d2 = _m([[1], [1]])
    c = ChainComplex(QQ, -1, [1, 2, 1], {0: d1, 1: d2})
    t = c.truncated(0)
    assert t.low == 0 and t.dims == [2, 1]
    with pytest.raises(ComplexError):
        c.truncated(-2)


def test_tensor_complex_with_periodic_piece():
    # A --x--> A over K[x]/x^2, tensored with the trivial right module K
    a = truncated_polynomial(2)
    x = Matrix.lazy(QQ, 2, 2, lambda j: a.mul({j: QQ(1)}, {1: QQ(1)}))
    free = regular_left(a)
    c = ChainComplex(QQ, 0, [2, 2], {1: x}, modules={0: free, 1: free})
    k = character_module(a, [1, 0], "right")
    out = tensor_complex("left", k, c)
    assert out.dims == [1, 1]
    assert out.d(1).is_zero()
